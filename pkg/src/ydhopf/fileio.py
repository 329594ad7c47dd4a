"""JSON files for algebras, pairings and comodule algebras.

Structure constants are stored sparsely:
  mult     [i, j, k, v]   m(b_i ⊗ b_j) has coefficient v at b_k
  comult   [i, j, k, v]   Δ(b_i) has coefficient v at b_j ⊗ b_k
  antipode [i, j, v]      S(b_i) has coefficient v at b_j
  unit, counit            dense vectors
A pairing file names both algebras by the sha256 of their canonical text.
Files are written canonically, so load followed by save reproduces them byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any

import numpy as np

from .errors import FormatError, YDError
from .hopf import BraidedHopfAlgebra, Pairing, hopf_assemble, hopf_build
from .laws import Algebra
from .scalars import Field, Group
from .yd import LinearMorphism, YDObject

ALGEBRA_FORMAT = "ydhopf-algebra"
PAIRING_FORMAT = "ydhopf-pairing"
COMODULE_FORMAT = "ydhopf-comodule-algebra"
VERSION = 1


def canonical_text(data: dict) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def digest(data: dict) -> str:
    return hashlib.sha256(canonical_text(data).encode("utf-8")).hexdigest()


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str | os.PathLike) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return data


# encoding helpers

def _mult_entries(m: LinearMorphism, n: int) -> list[list[int]]:
    return sorted([c // n, c % n, r, v] for r, c, v in m.entries())


def _comult_entries(d: LinearMorphism, n: int) -> list[list[int]]:
    return sorted([c, r // n, r % n, v] for r, c, v in d.entries())


def _map_entries(s: LinearMorphism) -> list[list[int]]:
    return sorted([c, r, v] for r, c, v in s.entries())


def _vector(f: LinearMorphism) -> list[int]:
    return [int(x) for x in f.dense().reshape(-1)]


def _require(data: dict, key: str, kind):
    if key not in data:
        raise FormatError(f"missing field '{key}'")
    val = data[key]
    if not isinstance(val, kind):
        raise FormatError(f"field '{key}' has the wrong type")
    return val


def _entries(data: dict, key: str, width: int, bounds: tuple[int, ...]) -> list[list[int]]:
    rows = _require(data, key, list)
    for row in rows:
        if (not isinstance(row, list) or len(row) != width
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in row)):
            raise FormatError(f"'{key}' entries must be lists of {width} integers")
        for x, b in zip(row, bounds):
            if not 0 <= x < b:
                raise FormatError(f"'{key}' index {x} out of range")
    return rows


def _dense_from(rows, shape, index) -> np.ndarray:
    out = np.zeros(shape, dtype=np.int64)
    for row in rows:
        r, c = index(row)
        out[r, c] = (out[r, c] + row[-1])
    return out


# carriers

def carrier_to_dict(x: YDObject) -> dict:
    return {
        "name": x.name,
        "p": x.field.p,
        "orders": list(x.group.orders),
        "degrees": [list(d) for d in x.degrees],
        "actions": [a.tolist() for a in x.action],
    }


def carrier_from_dict(data: dict) -> YDObject:
    name = _require(data, "name", str)
    p = _require(data, "p", int)
    orders = _require(data, "orders", list)
    degrees = _require(data, "degrees", list)
    try:
        field, group = Field(p), Group(tuple(orders))
        action = data.get("actions")
        return YDObject(name, field, group, [tuple(d) for d in degrees], action)
    except YDError:
        raise
    except (TypeError, ValueError) as e:
        raise FormatError(f"malformed carrier: {e}") from None


# Hopf algebras

def hopf_to_dict(H: BraidedHopfAlgebra, extra: dict[str, Any] | None = None) -> dict:
    n = H.dim
    out = {"format": ALGEBRA_FORMAT, "version": VERSION}
    out.update(carrier_to_dict(H.carrier))
    out.update({
        "mult": _mult_entries(H.m, n),
        "unit": _vector(H.eta),
        "comult": _comult_entries(H.delta, n),
        "counit": _vector(H.eps),
        "antipode": _map_entries(H.S),
    })
    if extra:
        out.update(extra)
    return out


def _check_format(data: dict, fmt: str) -> None:
    if data.get("format") != fmt:
        raise FormatError(f"expected format '{fmt}', got {data.get('format')!r}")
    if data.get("version") != VERSION:
        raise FormatError(f"unsupported version {data.get('version')!r}")


def hopf_from_dict(data: dict, verify: bool = True) -> BraidedHopfAlgebra:
    _check_format(data, ALGEBRA_FORMAT)
    H = carrier_from_dict(data)
    n, f = H.dim, H.field
    mult = _dense_from(_entries(data, "mult", 4, (n, n, n)), (n, n * n), lambda r: (r[2], r[0] * n + r[1]))
    comult = _dense_from(_entries(data, "comult", 4, (n, n, n)), (n * n, n),
                         lambda r: (r[1] * n + r[2], r[0]))
    unit = np.asarray(_require(data, "unit", list), dtype=np.int64)
    counit = np.asarray(_require(data, "counit", list), dtype=np.int64)
    if unit.shape != (n,) or counit.shape != (n,):
        raise FormatError("unit and counit must have one entry per basis vector")
    S = None
    if "antipode" in data:
        S = LinearMorphism(H, H, _dense_from(_entries(data, "antipode", 3, (n, n)), (n, n),
                                             lambda r: (r[1], r[0])), f)
    build = hopf_build if verify else hopf_assemble
    return build(H, LinearMorphism((H, H), H, mult, f), LinearMorphism((), H, unit.reshape(n, 1), f),
                 LinearMorphism(H, (H, H), comult, f), LinearMorphism(H, (), counit.reshape(1, n), f), S)


def save_hopf(H: BraidedHopfAlgebra, path, extra: dict | None = None) -> dict:
    data = hopf_to_dict(H, extra)
    write_atomic(path, canonical_text(data))
    return data


def load_hopf(path, verify: bool = True) -> tuple[BraidedHopfAlgebra, dict]:
    data = read_json(path)
    return hopf_from_dict(data, verify), data


# pairings

def pairing_to_dict(P: Pairing, H_data: dict, Hd_data: dict) -> dict:
    n = P.H.dim
    entries = sorted([c // n, c % n, v] for _, c, v in P.form.entries())
    return {"format": PAIRING_FORMAT, "version": VERSION, "Hd": digest(Hd_data), "H": digest(H_data),
            "form": entries}


def pairing_from_dict(data: dict, Hd: YDObject, H: YDObject, H_data: dict | None = None,
                      Hd_data: dict | None = None) -> Pairing:
    _check_format(data, PAIRING_FORMAT)
    if H_data is not None and data.get("H") != digest(H_data):
        raise FormatError("pairing file does not belong to this H")
    if Hd_data is not None and data.get("Hd") != digest(Hd_data):
        raise FormatError("pairing file does not belong to this Hd")
    rows = _entries(data, "form", 3, (Hd.dim, H.dim))
    form = _dense_from(rows, (1, Hd.dim * H.dim), lambda r: (0, r[0] * H.dim + r[1]))
    return Pairing(Hd, H, LinearMorphism((Hd, H), (), form, H.field))


def sidecar_path(path) -> Path:
    path = Path(path)
    return path.with_name(path.stem + ".pairing.json")


def save_pairing(P: Pairing, path, H_data: dict, Hd_data: dict) -> dict:
    data = pairing_to_dict(P, H_data, Hd_data)
    write_atomic(path, canonical_text(data))
    return data


def load_pairing(path, Hd: YDObject, H: YDObject, H_data=None, Hd_data=None) -> Pairing:
    return pairing_from_dict(read_json(path), Hd, H, H_data, Hd_data)


# comodule algebras over Hd

def comodule_to_dict(alg: Algebra, psi: LinearMorphism, Hd_data: dict) -> dict:
    R = alg.word[0]
    n, nd = R.dim, psi.codomain[1].dim
    out = {"format": COMODULE_FORMAT, "version": VERSION}
    out.update(carrier_to_dict(R))
    out.update({
        "mult": _mult_entries(alg.m, n),
        "unit": _vector(alg.eta),
        "coaction": sorted([c, r // nd, r % nd, v] for r, c, v in psi.entries()),
        "over": digest(Hd_data),
    })
    return out


def comodule_from_dict(data: dict, Hd: BraidedHopfAlgebra, Hd_data: dict | None = None):
    from .constructions import ComoduleAlgebra
    _check_format(data, COMODULE_FORMAT)
    if Hd_data is not None and data.get("over") != digest(Hd_data):
        raise FormatError("comodule algebra file does not belong to this Hd")
    R = carrier_from_dict(data)
    n, nd, f = R.dim, Hd.dim, R.field
    mult = _dense_from(_entries(data, "mult", 4, (n, n, n)), (n, n * n), lambda r: (r[2], r[0] * n + r[1]))
    unit = np.asarray(_require(data, "unit", list), dtype=np.int64).reshape(n, 1)
    psi = _dense_from(_entries(data, "coaction", 4, (n, n, nd)), (n * nd, n),
                      lambda r: (r[1] * nd + r[2], r[0]))
    alg = Algebra((R,), LinearMorphism((R, R), R, mult, f), LinearMorphism((), R, unit, f))
    return ComoduleAlgebra(alg, Hd, LinearMorphism(R, (R, Hd.carrier), psi, f))


def save_comodule(alg: Algebra, psi: LinearMorphism, path, Hd_data: dict) -> dict:
    data = comodule_to_dict(alg, psi, Hd_data)
    write_atomic(path, canonical_text(data))
    return data


def load_comodule(path, Hd: BraidedHopfAlgebra, Hd_data: dict | None = None):
    return comodule_from_dict(read_json(path), Hd, Hd_data)
