"""Truncated quantum tensor algebras T(G, gᵢ, χᵢ)/L_N and the named presets.

Basis: all words in the generators of length ≤ N, ordered by length and then
lexicographically by generator index. Words longer than N are set to zero.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import BasisCapExceeded, MismatchedGroup
from .hopf import BraidedHopfAlgebra, hopf_assemble, hopf_build
from .report import Report
from .scalars import Character, Field, Group, GroupElement
from .yd import LinearMorphism, YDObject, braiding, morphism_witness

DEFAULT_BASIS_CAP = 512

Word_ = tuple[int, ...]


@dataclass(frozen=True)
class QTAParams:
    field: Field
    group: Group
    degrees: tuple[GroupElement, ...]
    characters: tuple[Character, ...]
    trunc: int
    name: str = "H"

    def __post_init__(self):
        if len(self.degrees) != len(self.characters):
            raise ValueError("one degree and one character per generator")
        if self.trunc < 1:
            raise ValueError("truncation length must be >= 1")
        object.__setattr__(self, "degrees", tuple(self.group.element(g) for g in self.degrees))
        for chi in self.characters:
            if chi.group != self.group or chi.field != self.field:
                raise MismatchedGroup("character over a different group or field")

    @property
    def ngens(self) -> int:
        return len(self.degrees)

    def q(self, i: int, j: int) -> int:
        """Braiding scalar χ_j(g_i): c(x_i ⊗ x_j) = q(i, j) x_j ⊗ x_i."""
        return self.characters[j](self.degrees[i])


def make_params(p: int, orders, gens, trunc: int, name: str = "H") -> QTAParams:
    """gens: sequence of (degree vector, character images)."""
    field, group = Field(p), Group(tuple(orders))
    degrees = tuple(group.element(g) for g, _ in gens)
    chars = tuple(Character(group, field, tuple(c)) for _, c in gens)
    return QTAParams(field, group, degrees, chars, trunc, name)


def basis_cap() -> int:
    return int(os.environ.get("YDHOPF_BASIS_CAP", DEFAULT_BASIS_CAP))


def basis_size(ngens: int, trunc: int) -> int:
    return sum(ngens ** k for k in range(trunc + 1))


def word_basis(ngens: int, trunc: int) -> list[Word_]:
    out: list[Word_] = []
    for k in range(trunc + 1):
        out.extend(itertools.product(range(ngens), repeat=k))
    return out


def word_name(w: Word_) -> str:
    return "".join(f"x{i + 1}" for i in w) if w else "1"


def _word_degree(params: QTAParams, w: Word_) -> GroupElement:
    return params.group.sum(params.degrees[i] for i in w)


def _word_scalar(params: QTAParams, w: Word_, g) -> int:
    out = 1
    for i in w:
        out = out * params.characters[i](g) % params.field.p
    return out


def word_coproduct(params: QTAParams, w: Word_) -> dict[tuple[Word_, Word_], int]:
    """Δ(w) as the braided product of the Δ(x_i) = x_i⊗1 + 1⊗x_i."""
    p = params.field.p
    out: dict[tuple[Word_, Word_], int] = {((), ()): 1}
    for i in w:
        nxt: dict[tuple[Word_, Word_], int] = {}
        for (a, b), c in out.items():
            # (a⊗b)(x_i⊗1) = χ_i(deg b)·a x_i ⊗ b
            s = c * params.characters[i](_word_degree(params, b)) % p
            key = (a + (i,), b)
            nxt[key] = (nxt.get(key, 0) + s) % p
            key = (a, b + (i,))
            nxt[key] = (nxt.get(key, 0) + c) % p
        out = {k: v for k, v in nxt.items() if v}
    return out


def quantum_tensor_algebra(params: QTAParams, verify: bool = True) -> BraidedHopfAlgebra:
    """The truncation as a braided Hopf algebra.

    verify=False skips the axiom check; use it to inspect truncations on which
    Δ does not descend to the quotient.
    """
    size = basis_size(params.ngens, params.trunc)
    cap = basis_cap()
    if size > cap:
        raise BasisCapExceeded(f"basis size {size} exceeds cap {cap}")
    f, G, p = params.field, params.group, params.field.p
    words = word_basis(params.ngens, params.trunc)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    degrees = [_word_degree(params, w) for w in words]
    action = [np.diag([_word_scalar(params, w, gen) for w in words]).astype(np.int64)
              for gen in G.generators]
    H = YDObject(params.name, f, G, degrees, action)
    mult = np.zeros((n, n * n), dtype=np.int64)
    for a in words:
        for b in words:
            if len(a) + len(b) <= params.trunc:
                mult[index[a + b], index[a] * n + index[b]] = 1
    comult = np.zeros((n * n, n), dtype=np.int64)
    for w in words:
        for (a, b), c in word_coproduct(params, w).items():
            comult[index[a] * n + index[b], index[w]] = c
    unit = np.zeros((n, 1), dtype=np.int64)
    unit[0, 0] = 1
    counit = unit.T.copy()
    build = hopf_build if verify else hopf_assemble
    return build(H,
                      LinearMorphism((H, H), H, mult, f),
                      LinearMorphism((), H, unit, f),
                      LinearMorphism(H, (H, H), comult, f),
                      LinearMorphism(H, (), counit, f))


# bline, z4q2 and sym-line are braided Hopf algebras. two-gen and twisted-pair
# are length truncations with two generators: there Δ does not descend to the
# quotient (Δ(x_i x_j) keeps x_i⊗x_j), so only their verify=False forms exist.
PRESETS = {
    "bline": dict(p=5, orders=(2,), gens=[((1,), (4,))], trunc=1),
    "two-gen": dict(p=5, orders=(2, 2), gens=[((1, 0), (4, 1)), ((0, 1), (1, 4))], trunc=2),
    "z4q2": dict(p=5, orders=(4,), gens=[((1,), (2,))], trunc=3),
    "sym-line": dict(p=5, orders=(2,), gens=[((1,), (1,))], trunc=4),
    "twisted-pair": dict(p=5, orders=(4, 4), gens=[((1, 0), (4, 2)), ((0, 1), (3, 4))], trunc=2),
}


def preset_params(name: str) -> QTAParams:
    if name not in PRESETS:
        raise KeyError(f"unknown preset '{name}'; choose from {', '.join(PRESETS)}")
    return make_params(**PRESETS[name])


def preset(name: str, verify: bool = True) -> BraidedHopfAlgebra:
    return quantum_tensor_algebra(preset_params(name), verify)


def word_action_check(T: BraidedHopfAlgebra, params: QTAParams) -> Report:
    """g·y = χ_{i1}(g)···χ_{im}(g) y for every g and every basis word y."""
    rep = Report(f"word action on '{T.name}'")
    words = word_basis(params.ngens, params.trunc)
    for g in params.group.elements:
        a = T.carrier.act(g)
        expected = np.diag([_word_scalar(params, w, g) for w in words])
        bad = np.argwhere(a % params.field.p != expected % params.field.p)
        detail = ""
        if bad.size:
            r, c = bad[0]
            detail = f"g={g}, word {word_name(words[c])}: got {a[r, c]} at {word_name(words[r])}"
        rep.add(f"word-action.g={''.join(map(str, g))}", "g·(y₁⋯y_m) = χ₁(g)⋯χ_m(g) y₁⋯y_m",
                not bad.size, detail=detail)
    return rep


def word_coaction_check(T: BraidedHopfAlgebra, params: QTAParams) -> Report:
    rep = Report(f"word coaction on '{T.name}'")
    words = word_basis(params.ngens, params.trunc)
    ok = all(T.carrier.degrees[i] == _word_degree(params, w) for i, w in enumerate(words))
    rep.add("word-coaction", "δ(y₁⋯y_m) = g₁⋯g_m ⊗ y₁⋯y_m", ok)
    return rep


def character_criterion(params: QTAParams) -> bool:
    p = params.field.p
    return all(params.q(i, j) * params.q(j, i) % p == 1
               for i in range(params.ngens) for j in range(params.ngens))


def quantum_cocommutative_report(T: BraidedHopfAlgebra, params: QTAParams) -> Report:
    """Character criterion against c∘Δ = Δ on the truncation.

    The two agree once words of length 2 survive: the coefficients of x_i⊗x_j in
    Δ(x_i x_j) and in cΔ(x_i x_j) differ by χ_j(g_i)χ_i(g_j). With N = 1 every
    element is primitive or a scalar, c∘Δ = Δ always holds, and the agreement
    assertion is skipped.
    """
    rep = Report(f"quantum cocommutativity of '{T.name}'")
    crit = character_criterion(params)
    rep.add("cocomm.character-criterion", "χᵢ(gⱼ)χⱼ(gᵢ) = 1 for all i, j", crit)
    w = morphism_witness(T.delta.then(braiding(T.carrier, T.carrier)), T.delta)
    rep.add("cocomm.semantic", "c∘Δ = Δ", w is None, w)
    if params.trunc >= 2:
        rep.add("cocomm.agreement", "character criterion agrees with c∘Δ = Δ", crit == (w is None))
    return rep


def quantum_cocommutative_check(params: QTAParams, T: BraidedHopfAlgebra | None = None) -> bool:
    """Character criterion, cross-checked against c∘Δ = Δ when the truncation can see it."""
    if T is None:
        T = quantum_tensor_algebra(params, verify=False)
    rep = quantum_cocommutative_report(T, params)
    if "cocomm.agreement" in rep.names() and not rep["cocomm.agreement"].passed:
        raise AssertionError("character criterion and c∘Δ = Δ disagree")
    return rep["cocomm.character-criterion"].passed
