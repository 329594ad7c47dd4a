"""Command-line entry point.

Exit codes: 0 every assertion passed, 1 something was verified false,
2 the input was invalid.
"""

from __future__ import annotations

import functools
import hashlib
import json
import sys
from pathlib import Path

import click

from . import __version__
from .constructions import DualityContext, lambda_rho_report, regular_comodule_setup, verify_duality
from .diagram import GeneratorEnv, expr_evaluate, parse_expr
from .errors import (BasisCapExceeded, EmptyOrderList, ExpressionSyntaxError, FormatError,
                     GradingActionClash, MismatchedContext, MismatchedGroup, NonCommutingAction,
                     NonPrimeModulus, NoSuchRoot, ShapeMismatch, TypeMismatch, UnboundGenerator,
                     WrongActionOrder, YDError)
from .fileio import (digest, hopf_to_dict, load_comodule, load_hopf, load_pairing, read_json, save_hopf,
                     save_pairing, sidecar_path, write_atomic)
from .hom import check_hom_yd, lift_to_product
from .hopf import hopf_axiom_report, quasi_dual_build, quasi_dual_check
from .qta import (PRESETS, QTAParams, make_params, preset_params, quantum_cocommutative_report,
                  quantum_tensor_algebra, word_basis, word_name)
from .report import Report
from .scalars import Character
from .yd import braiding, is_yd_morphism, morphism_witness, unit_object
from .ydcheck import yd_condition_report

INVALID = (BasisCapExceeded, EmptyOrderList, ExpressionSyntaxError, FormatError, GradingActionClash,
           MismatchedContext, MismatchedGroup, NonCommutingAction, NonPrimeModulus, NoSuchRoot,
           ShapeMismatch, TypeMismatch, UnboundGenerator, WrongActionOrder)


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def guarded(fn):
    """Map package errors onto the exit-code contract."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except INVALID as e:
            _fail(f"{type(e).__name__}: {e}", 2)
        except YDError as e:
            _fail(f"{type(e).__name__}: {e}", 1)
        except (KeyError, ValueError) as e:
            _fail(str(e), 2)
    return wrapper


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def report_dict(rep: Report, inputs) -> dict:
    out = rep.as_dict()
    out["tool"] = "ydhopf"
    out["version"] = __version__
    out["inputs"] = {str(p): file_digest(p) for p in inputs}
    return out


def emit(rep: Report, report_path, inputs=()) -> None:
    click.echo(rep.text())
    if report_path:
        text = json.dumps(report_dict(rep, inputs), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        write_atomic(report_path, text)
    sys.exit(0 if rep.passed else 1)


report_option = click.option("--report", "report_path", type=click.Path(dir_okay=False),
                             help="Write the machine-readable report to this file.")


@click.group()
@click.version_option(__version__, prog_name="ydhopf")
def main():
    """Verify braided Hopf algebra constructions over Yetter-Drinfeld modules of finite abelian groups."""


# gen

@main.group()
def gen():
    """Generate algebra files."""


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise click.BadParameter(f"{what} must be comma-separated integers: {text!r}") from None


def _parse_gen(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    parts = dict(part.split("=", 1) for part in text.split(";") if "=" in part)
    if set(parts) != {"g", "chi"}:
        raise click.BadParameter(f"generator must look like 'g=a1,a2;chi=c1,c2', got {text!r}")
    return _parse_ints(parts["g"], "g"), _parse_ints(parts["chi"], "chi")


def qta_extra(params: QTAParams) -> dict:
    return {
        "basis": [word_name(w) for w in word_basis(params.ngens, params.trunc)],
        "qta": {
            "degrees": [list(g) for g in params.degrees],
            "characters": [list(c.images) for c in params.characters],
            "trunc": params.trunc,
        },
    }


def _write_qta(params: QTAParams, out: str) -> None:
    T = quantum_tensor_algebra(params, verify=False)
    save_hopf(T, out, qta_extra(params))
    click.echo(f"wrote {out}: '{T.name}' of dimension {T.dim} over F_{params.field.p}")


@gen.command("qta")
@click.option("--prime", type=int, required=True, help="Characteristic p of the field.")
@click.option("--group", "group_", required=True, help="Cyclic orders, e.g. 2,2.")
@click.option("--gen", "gens", multiple=True, required=True,
              help="Generator as 'g=a1,a2;chi=c1,c2' (repeatable).")
@click.option("--trunc", type=int, required=True, help="Truncation length N.")
@click.option("--name", default="H", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@guarded
def gen_qta(prime, group_, gens, trunc, name, out):
    """Truncated quantum tensor algebra."""
    params = make_params(prime, _parse_ints(group_, "group"), [_parse_gen(g) for g in gens], trunc, name)
    _write_qta(params, out)


@gen.command("preset")
@click.option("--name", type=click.Choice(sorted(PRESETS)), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@guarded
def gen_preset(name, out):
    """A named example."""
    _write_qta(preset_params(name), out)


# check

@main.group()
def check():
    """Run a verification and report every assertion."""


def _load(path):
    H, data = load_hopf(path, verify=False)
    return H, data


@check.command("hopf")
@click.argument("path", type=click.Path(dir_okay=False))
@report_option
@guarded
def check_hopf(path, report_path):
    """Braided Hopf algebra axioms."""
    H, _ = _load(path)
    emit(hopf_axiom_report(H), report_path, [path])


@check.command("yd")
@click.argument("path", type=click.Path(dir_okay=False))
@report_option
@guarded
def check_yd(path, report_path):
    """Yetter-Drinfeld compatibility of the carrier."""
    H, _ = _load(path)
    emit(yd_condition_report(H.carrier), report_path, [path])


def _pairing_for(H, hdata, Hd, ddata, hd_path, pairing_path):
    pairing_path = pairing_path or sidecar_path(hd_path)
    return load_pairing(pairing_path, Hd.carrier, H.carrier, hdata, ddata), pairing_path


@check.command("pairing")
@click.argument("h_path", type=click.Path(dir_okay=False))
@click.argument("hd_path", type=click.Path(dir_okay=False))
@click.option("--pairing", "pairing_path", type=click.Path(dir_okay=False),
              help="Pairing file (default: the sidecar next to the dual).")
@report_option
@guarded
def check_pairing(h_path, hd_path, pairing_path, report_path):
    """Pairing displays between an algebra and its dual."""
    H, hdata = _load(h_path)
    Hd, ddata = _load(hd_path)
    P, pairing_path = _pairing_for(H, hdata, Hd, ddata, hd_path, pairing_path)
    rep = quasi_dual_check(H, Hd, P)
    rep.add("pairing.yd-morphism", "⟨,⟩ is a Yetter-Drinfeld morphism", is_yd_morphism(P.form))
    emit(rep, report_path, [h_path, hd_path, pairing_path])


def _carrier(path):
    if path == "unit":
        return None
    return _load(path)[0].carrier


@check.command("hom")
@click.argument("v_path")
@click.argument("w_path")
@report_option
@guarded
def check_hom(v_path, w_path, report_path):
    """Yetter-Drinfeld structure on Hom(V, W); either argument may be the word 'unit'."""
    V, W = _carrier(v_path), _carrier(w_path)
    if V is None and W is None:
        raise FormatError("at least one of V, W must be a file")
    ref = V or W
    V = V or unit_object(ref.field, ref.group)
    W = W or unit_object(ref.field, ref.group)
    if V.group != W.group:
        V, W = lift_to_product(V, W)
    emit(check_hom_yd(V, W), report_path, [p for p in (v_path, w_path) if p != "unit"])


def _dual_inputs(h_path, hd_path, pairing_path):
    H, hdata = _load(h_path)
    inputs = [h_path]
    if hd_path:
        Hd, ddata = _load(hd_path)
        P, pairing_path = _pairing_for(H, hdata, Hd, ddata, hd_path, pairing_path)
        inputs += [hd_path, pairing_path]
    else:
        Hd, P = quasi_dual_build(H, verify=False)
        ddata = hopf_to_dict(Hd)
    return H, hdata, Hd, ddata, P, inputs


@check.command("lambda-rho")
@click.argument("h_path", type=click.Path(dir_okay=False))
@click.option("--Hd", "hd_path", type=click.Path(dir_okay=False))
@click.option("--pairing", "pairing_path", type=click.Path(dir_okay=False))
@report_option
@guarded
def check_lambda_rho(h_path, hd_path, pairing_path, report_path):
    """Commutation identity between λ and ρ in End H, with its five partial cases."""
    H, _, Hd, _, P, inputs = _dual_inputs(h_path, hd_path, pairing_path)
    emit(lambda_rho_report(DualityContext(H, Hd, P)), report_path, inputs)


@check.command("cocomm")
@click.argument("path", type=click.Path(dir_okay=False))
@report_option
@guarded
def check_cocomm(path, report_path):
    """Quantum cocommutativity c∘Δ = Δ, and the character criterion when generator data is present."""
    T, data = _load(path)
    meta = data.get("qta")
    if meta is None:
        rep = Report(f"quantum cocommutativity of '{T.name}'")
        w = morphism_witness(T.delta.then(braiding(T.carrier, T.carrier)), T.delta)
        rep.add("cocomm.semantic", "c∘Δ = Δ", w is None, w)
    else:
        f, G = T.field, T.carrier.group
        params = QTAParams(f, G, tuple(tuple(g) for g in meta["degrees"]),
                           tuple(Character(G, f, tuple(c)) for c in meta["characters"]),
                           int(meta["trunc"]), T.name)
        rep = quantum_cocommutative_report(T, params)
    emit(rep, report_path, [path])


# dual

@main.command("dual")
@click.argument("h_path", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@report_option
@guarded
def dual(h_path, out, report_path):
    """Solve the dual Hopf algebra and write it with a pairing sidecar."""
    H, hdata = _load(h_path)
    Hd, P = quasi_dual_build(H, name=f"{H.name}d" if H.name != "Hd" else "Hdd", verify=False)
    ddata = save_hopf(Hd, out)
    side = sidecar_path(out)
    save_pairing(P, side, hdata, ddata)
    click.echo(f"wrote {out} and {side}")
    rep = quasi_dual_check(H, Hd, P)
    rep.extend(hopf_axiom_report(Hd, prefix="dual."))
    emit(rep, report_path, [h_path])


# verify

@main.group()
def verify():
    """End-to-end verification ladders."""


@verify.command("duality")
@click.option("--H", "h_path", type=click.Path(dir_okay=False), required=True)
@click.option("--Hd", "hd_path", type=click.Path(dir_okay=False))
@click.option("--pairing", "pairing_path", type=click.Path(dir_okay=False))
@click.option("--R", "r_path", type=click.Path(dir_okay=False),
              help="Comodule algebra over Hd (default: Hd itself with ψ = Δ).")
@click.option("--proof/--no-proof", default=False, help="Also check ξ, its exchange relation and Φ′.")
@report_option
@guarded
def verify_duality_cmd(h_path, hd_path, pairing_path, r_path, proof, report_path):
    """(R#H)#Hd ≅ R⊗(H#Hd) as algebras."""
    H, hdata, Hd, ddata, P, inputs = _dual_inputs(h_path, hd_path, pairing_path)
    if r_path:
        R = load_comodule(r_path, Hd, ddata)
        inputs.append(r_path)
    else:
        R = regular_comodule_setup(H, Hd, P)[0]
    emit(verify_duality(R, H, Hd, P, proof=proof), report_path, inputs)


# eval

def load_env(path) -> tuple[GeneratorEnv, dict]:
    """Environment file:
    {"algebras": [{"file": "h.json", "suffix": ""}, {"file": "hd.json", "suffix": "_d"}],
     "pairing": {"file": "hd.pairing.json", "name": "ev"}}
    Paths are relative to the environment file.
    """
    base = Path(path).parent
    cfg = read_json(path)
    algebras = cfg.get("algebras")
    if not isinstance(algebras, list) or not algebras:
        raise FormatError("environment needs a non-empty 'algebras' list")
    gens, objects, loaded = {}, {}, []
    field = None
    for entry in algebras:
        if not isinstance(entry, dict) or "file" not in entry:
            raise FormatError("each algebra entry needs a 'file'")
        H, data = load_hopf(base / entry["file"], verify=False)
        suffix = str(entry.get("suffix", ""))
        if H.carrier.name in objects:
            raise FormatError(f"two algebras share the object name '{H.carrier.name}'")
        objects[H.carrier.name] = H.carrier
        field = field or H.field
        for k, v in H.maps().items():
            if k + suffix in gens:
                raise FormatError(f"generator '{k + suffix}' bound twice")
            gens[k + suffix] = v
        loaded.append((H, data))
    pairing = cfg.get("pairing")
    if pairing is not None:
        pdata = read_json(base / pairing["file"])
        by_digest = {digest(d): H for H, d in loaded}
        try:
            H, Hd = by_digest[pdata.get("H")], by_digest[pdata.get("Hd")]
        except KeyError:
            raise FormatError("pairing does not match the listed algebras") from None
        P = load_pairing(base / pairing["file"], Hd.carrier, H.carrier)
        gens[str(pairing.get("name", "ev"))] = P.form
    return GeneratorEnv(field, gens), objects


@main.command("eval")
@click.option("--env", "env_path", type=click.Path(dir_okay=False), required=True)
@click.option("--expr", "text", required=True, help="Diagram, e.g. 'Δ ; (id[H] * ε)'.")
@guarded
def eval_cmd(env_path, text):
    """Evaluate a diagram expression and print its nonzero entries."""
    env, objects = load_env(env_path)
    f = expr_evaluate(parse_expr(text, objects), env)
    click.echo(f"{'⊗'.join(o.name for o in f.domain) or 'I'} -> "
               f"{'⊗'.join(o.name for o in f.codomain) or 'I'}  shape {f.matrix.shape}")
    for r, c, v in f.entries():
        click.echo(f"{r} {c} {v}")


if __name__ == "__main__":
    main()
