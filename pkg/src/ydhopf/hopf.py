"""Braided Hopf algebras, the solved quasi-dual with its pairing, and the four harpoon actions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .diagram import Expr, GeneratorEnv, Gen, braid, expr_evaluate, idw, par, seq
from .errors import (AxiomFailure, InconsistentSystem, ModuleAxiomFailure, NoAntipode,
                     NonInvertibleAntipode, NonSymmetricBraiding, NotYDMorphism, RankDeficient)
from .laws import Algebra, compare, module_algebra_laws, module_laws
from .linalg import inverse, rank, solve
from .report import Report
from .yd import (LinearMorphism, Word, YDObject, dual_object, is_yd_morphism, symmetric_pair_check,
                 word_dim)

STRUCTURE_MAPS = ("m", "η", "Δ", "ε", "S", "S̄")


@dataclass(frozen=True)
class BraidedHopfAlgebra:
    carrier: YDObject
    m: LinearMorphism
    eta: LinearMorphism
    delta: LinearMorphism
    eps: LinearMorphism
    S: LinearMorphism
    S_inv: LinearMorphism

    @property
    def name(self) -> str:
        return self.carrier.name

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self):
        return self.carrier.field

    @property
    def word(self) -> Word:
        return (self.carrier,)

    @cached_property
    def algebra(self) -> Algebra:
        return Algebra(self.word, self.m, self.eta)

    def maps(self) -> dict[str, LinearMorphism]:
        return dict(zip(STRUCTURE_MAPS, (self.m, self.eta, self.delta, self.eps, self.S, self.S_inv)))

    def env(self, suffix: str = "") -> GeneratorEnv:
        return GeneratorEnv(self.field, {k + suffix: v for k, v in self.maps().items()})


def _bialgebra_exprs(H: YDObject):
    """Named pairs (lhs, rhs, anchor) of the bialgebra axioms over generators m, η, Δ, ε."""
    h = idw(H)
    return [
        ("associativity", seq(par(Gen("m"), h), Gen("m")), seq(par(h, Gen("m")), Gen("m")),
         "m(m⊗id) = m(id⊗m)"),
        ("left-unit", seq(par(Gen("η"), h), Gen("m")), h, "m(η⊗id) = id"),
        ("right-unit", seq(par(h, Gen("η")), Gen("m")), h, "m(id⊗η) = id"),
        ("coassociativity", seq(Gen("Δ"), par(Gen("Δ"), h)), seq(Gen("Δ"), par(h, Gen("Δ"))),
         "(Δ⊗id)Δ = (id⊗Δ)Δ"),
        ("left-counit", seq(Gen("Δ"), par(Gen("ε"), h)), h, "(ε⊗id)Δ = id"),
        ("right-counit", seq(Gen("Δ"), par(h, Gen("ε"))), h, "(id⊗ε)Δ = id"),
        ("comult-multiplicative", seq(Gen("m"), Gen("Δ")),
         seq(par(Gen("Δ"), Gen("Δ")), par(h, braid(H, H), h), par(Gen("m"), Gen("m"))),
         "Δm = (m⊗m)(id⊗c⊗id)(Δ⊗Δ)"),
        ("comult-unital", seq(Gen("η"), Gen("Δ")), par(Gen("η"), Gen("η")), "Δη = η⊗η"),
        ("counit-multiplicative", seq(Gen("m"), Gen("ε")), par(Gen("ε"), Gen("ε")), "εm = ε⊗ε"),
        ("counit-unital", seq(Gen("η"), Gen("ε")), idw(), "εη = 1"),
    ]


def _hopf_exprs(H: YDObject):
    h = idw(H)
    return [
        ("antipode-left", seq(Gen("Δ"), par(Gen("S"), h), Gen("m")), seq(Gen("ε"), Gen("η")),
         "m(S⊗id)Δ = ηε"),
        ("antipode-right", seq(Gen("Δ"), par(h, Gen("S")), Gen("m")), seq(Gen("ε"), Gen("η")),
         "m(id⊗S)Δ = ηε"),
        ("antipode-inverse-left", seq(Gen("S"), Gen("S̄")), h, "S̄S = id"),
        ("antipode-inverse-right", seq(Gen("S̄"), Gen("S")), h, "SS̄ = id"),
    ]


def hopf_axiom_report(H: BraidedHopfAlgebra, prefix: str | None = None) -> Report:
    prefix = prefix if prefix is not None else "hopf."
    env = H.env()
    rep = Report(f"braided Hopf axioms for '{H.name}' (dim {H.dim})")
    for name, f in H.maps().items():
        rep.add(f"{prefix}yd-morphism.{name}", f"{name} is a Yetter-Drinfeld morphism",
                is_yd_morphism(f))
    for name, lhs, rhs, anchor in _bialgebra_exprs(H.carrier) + _hopf_exprs(H.carrier):
        w = compare(env, lhs, rhs)
        rep.add(prefix + name, anchor, w is None, w)
    return rep


def antipode_solve(carrier: YDObject, m: LinearMorphism, eta: LinearMorphism,
                   delta: LinearMorphism, eps: LinearMorphism) -> tuple[LinearMorphism, LinearMorphism]:
    """Solve m(S⊗id)Δ = ηε for S as a linear system in S's entries; also return S⁻¹."""
    n, p = carrier.dim, carrier.field.p
    M = m.dense().reshape(n, n, n)        # [l, k, b]
    D = delta.dense().reshape(n, n, n)    # [a, b, h]
    coeff = np.einsum("lkb,abh->lhka", M, D, optimize=True).reshape(n * n, n * n) % p
    target = (eta.dense() @ eps.dense() % p).reshape(n * n)
    try:
        s = solve(coeff, target, p, require_unique=False).reshape(n, n)
    except InconsistentSystem:
        raise NoAntipode(f"id has no convolution inverse on '{carrier.name}'") from None
    S = LinearMorphism(carrier, carrier, s, carrier.field)
    try:
        s_inv = inverse(s, p)
    except RankDeficient:
        raise NonInvertibleAntipode(f"antipode of '{carrier.name}' is singular") from None
    return S, LinearMorphism(carrier, carrier, s_inv, carrier.field)


def hopf_assemble(carrier: YDObject, m: LinearMorphism, eta: LinearMorphism,
                  delta: LinearMorphism, eps: LinearMorphism,
                  S: LinearMorphism | None = None) -> BraidedHopfAlgebra:
    """Bundle structure maps without checking any axiom (S solved when omitted)."""
    if S is None:
        S, S_inv = antipode_solve(carrier, m, eta, delta, eps)
    else:
        try:
            S_inv = LinearMorphism(carrier, carrier, inverse(S.dense(), carrier.field.p), carrier.field)
        except RankDeficient:
            raise NonInvertibleAntipode(f"antipode of '{carrier.name}' is singular") from None
    return BraidedHopfAlgebra(carrier, m, eta, delta, eps, S, S_inv)


def hopf_build(carrier: YDObject, m: LinearMorphism, eta: LinearMorphism, delta: LinearMorphism,
               eps: LinearMorphism, S: LinearMorphism | None = None) -> BraidedHopfAlgebra:
    if S is None:
        S, S_inv = antipode_solve(carrier, m, eta, delta, eps)
    else:
        try:
            S_inv = LinearMorphism(carrier, carrier, inverse(S.dense(), carrier.field.p), carrier.field)
        except RankDeficient:
            S_inv = None
    H = BraidedHopfAlgebra(carrier, m, eta, delta, eps, S,
                           S_inv if S_inv is not None else S)
    rep = hopf_axiom_report(H, prefix="")
    for a in rep.assertions:
        if not a.passed:
            if a.name.startswith("yd-morphism."):
                raise NotYDMorphism(a.name.split(".", 1)[1])
            if S_inv is None and a.name.startswith("antipode-inverse"):
                raise NonInvertibleAntipode(f"antipode of '{carrier.name}' is singular")
            raise AxiomFailure(a.name, a.witness)
    return H


# pairings and the solved dual


@dataclass(frozen=True)
class Pairing:
    """A form ⟨,⟩: Hd⊗H → I."""

    Hd: YDObject
    H: YDObject
    form: LinearMorphism

    def matrix(self) -> np.ndarray:
        """Curried matrix P[f, h] = ⟨f, h⟩."""
        return self.form.dense().reshape(self.Hd.dim, self.H.dim)

    def left_faithful(self) -> bool:
        return rank(self.matrix(), self.form.p) == self.Hd.dim


def evaluation_pairing(Hd: YDObject, H: YDObject) -> Pairing:
    n = H.dim
    row = np.eye(n, dtype=np.int64).reshape(1, n * n)
    return Pairing(Hd, H, LinearMorphism((Hd, H), (), row, H.field))


def solve_through(K: LinearMorphism, y: Word, z: Word, T: LinearMorphism, x: Word) -> np.ndarray:
    """Matrix of F: x → y with K∘(F⊗id_z) = T, where K: y⊗z → I and T: x⊗z → I."""
    ny, nz, nx = word_dim(y), word_dim(z), word_dim(x)
    kc = K.dense().reshape(ny, nz)
    tc = T.dense().reshape(nx, nz)
    return solve(kc.T, tc.T, K.p)


def _dual_env(H: BraidedHopfAlgebra, Hd: YDObject, ev: LinearMorphism) -> GeneratorEnv:
    return H.env().with_gens(ev=ev)


def quasi_dual_build(H: BraidedHopfAlgebra, name: str = "Hd",
                     verify: bool = True) -> tuple[BraidedHopfAlgebra, Pairing]:
    """Dual object of H with the Hopf structure forced by the pairing displays.

    With verify=False the solved maps are returned without the Hopf axiom check.
    """
    Hc = H.carrier
    if not symmetric_pair_check(Hc, Hc):
        raise NonSymmetricBraiding(f"braiding on '{Hc.name}' is not symmetric")
    Hd = dual_object(Hc, name)
    for x, y in ((Hc, Hd), (Hd, Hd)):
        if not symmetric_pair_check(x, y):
            raise NonSymmetricBraiding(f"braiding between '{x.name}' and '{y.name}' is not symmetric")
    pairing = evaluation_pairing(Hd, Hc)
    env = _dual_env(H, Hd, pairing.form)
    h, d = idw(Hc), idw(Hd)
    ev2 = expr_evaluate(seq(par(d, braid(Hd, Hc), h), par(Gen("ev"), Gen("ev"))), env)
    f = Hc.field

    t = expr_evaluate(seq(par(d, Gen("m")), Gen("ev")), env)
    delta = LinearMorphism(Hd, (Hd, Hd), solve_through(ev2, (Hd, Hd), (Hc, Hc), t, (Hd,)), f)

    t = expr_evaluate(seq(par(d, d, Gen("Δ")), par(d, braid(Hd, Hc), h), par(Gen("ev"), Gen("ev"))), env)
    m = LinearMorphism((Hd, Hd), Hd, solve_through(pairing.form, (Hd,), (Hc,), t, (Hd, Hd)), f)

    eta = LinearMorphism((), Hd, solve_through(pairing.form, (Hd,), (Hc,), H.eps, ()), f)
    eps = expr_evaluate(seq(par(d, Gen("η")), Gen("ev")), env)

    t = expr_evaluate(seq(par(d, Gen("S")), Gen("ev")), env)
    S = LinearMorphism(Hd, Hd, solve_through(pairing.form, (Hd,), (Hc,), t, (Hd,)), f)

    build = hopf_build if verify else hopf_assemble
    return build(Hd, m, eta, delta, eps, S), pairing


def quasi_dual_check(H: BraidedHopfAlgebra, Hd: BraidedHopfAlgebra, pairing: Pairing) -> Report:
    Hc, Dc = H.carrier, Hd.carrier
    env = H.env().extend({k + "_d": v for k, v in Hd.maps().items()}).with_gens(ev=pairing.form)
    h, d = idw(Hc), idw(Dc)
    rep = Report(f"pairing displays for '{Dc.name}' on '{Hc.name}'")
    checks = [
        ("quasi-dual.comult-pairing", "⟨f, xy⟩ = ⟨f₁, x'⟩⟨f₂', y⟩",
         seq(par(d, Gen("m")), Gen("ev")),
         seq(par(Gen("Δ_d"), h, h), par(d, braid(Dc, Hc), h), par(Gen("ev"), Gen("ev")))),
        ("quasi-dual.unit-pairing", "⟨f, 1⟩ = ε(f)",
         seq(par(d, Gen("η")), Gen("ev")), Gen("ε_d")),
        ("quasi-dual.mult-pairing", "⟨fg, x⟩ = ⟨f, x₁'⟩⟨g', x₂⟩",
         seq(par(Gen("m_d"), h), Gen("ev")),
         seq(par(d, d, Gen("Δ")), par(d, braid(Dc, Hc), h), par(Gen("ev"), Gen("ev")))),
        ("quasi-dual.counit-pairing", "⟨1, x⟩ = ε(x)",
         seq(par(Gen("η_d"), h), Gen("ev")), Gen("ε")),
        ("quasi-dual.antipode-pairing", "⟨S(f), x⟩ = ⟨f, S(x)⟩",
         seq(par(Gen("S_d"), h), Gen("ev")), seq(par(d, Gen("S")), Gen("ev"))),
    ]
    for name, anchor, lhs, rhs in checks:
        w = compare(env, lhs, rhs)
        rep.add(name, anchor, w is None, w)
    rep.add("quasi-dual.left-faithful", "curried pairing has full rank", pairing.left_faithful())
    return rep


# harpoon actions

HARPOONS = ("h⇀f", "f⇀h", "f↼h", "h↼f")


def harpoon_exprs(Hc: YDObject, Dc: YDObject) -> dict[str, Expr]:
    """The four actions as diagrams over Δ (of H), Δ_d (of Hd), the braiding and ev."""
    h, d = idw(Hc), idw(Dc)
    return {
        # H⊗Hd → Hd
        "h⇀f": seq(par(h, Gen("Δ_d")), par(braid(Hc, Dc), d), par(d, braid(Hc, Dc)),
                   par(d, Gen("ev"))),
        # Hd⊗H → H
        "f⇀h": seq(par(d, Gen("Δ")), par(braid(Dc, Hc), h), par(h, Gen("ev"))),
        # Hd⊗H → Hd
        "f↼h": seq(par(Gen("Δ_d"), h), par(d, braid(Dc, Hc)), par(Gen("ev"), d)),
        # H⊗Hd → H
        "h↼f": seq(par(Gen("Δ"), d), par(h, braid(Hc, Dc)), par(braid(Hc, Dc), h),
                   par(Gen("ev"), h)),
    }


def harpoon_actions(H: BraidedHopfAlgebra, Hd: BraidedHopfAlgebra, pairing: Pairing,
                    verify: bool = True) -> dict[str, LinearMorphism]:
    env = H.env().extend({k + "_d": v for k, v in Hd.maps().items()}).with_gens(ev=pairing.form)
    acts = {k: expr_evaluate(e, env) for k, e in harpoon_exprs(H.carrier, Hd.carrier).items()}
    if verify:
        rep = harpoon_report(H, Hd, acts)
        for a in rep.assertions:
            if not a.passed:
                raise ModuleAxiomFailure(a.name.split(".")[0], a.witness)
    return acts


def harpoon_report(H: BraidedHopfAlgebra, Hd: BraidedHopfAlgebra,
                   acts: dict[str, LinearMorphism]) -> Report:
    rep = Report(f"harpoon actions between '{H.name}' and '{Hd.name}'")
    layout = {
        "h⇀f": (H, Hd, "left"),
        "f⇀h": (Hd, H, "left"),
        "f↼h": (H, Hd, "right"),
        "h↼f": (Hd, H, "right"),
    }
    for key, (acting, target, side) in layout.items():
        rep.extend(module_laws(acts[key], acting.algebra, target.word, side, key))
        rep.extend(module_algebra_laws(acts[key], acting.word, acting.delta, acting.eps,
                                       target.algebra, side, key))
    return rep


def dual_mult_unbraided(H: BraidedHopfAlgebra, Dc: YDObject, pairing: Pairing) -> LinearMorphism:
    """m_d solved with the crossing in the multiplication display replaced by a plain flip.

    Only useful as a negative control: it differs from the true m_d exactly
    when some crossing in that display carries a nontrivial scalar.
    """
    Hc = H.carrier
    n = Hc.dim
    flip = np.zeros((n * n, n * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            flip[j * n + i, i * n + j] = 1
    sw = LinearMorphism((Dc, Hc), (Hc, Dc), flip, Hc.field)
    env = _dual_env(H, Dc, pairing.form).with_gens(sw=sw)
    h, d = idw(Hc), idw(Dc)
    t = expr_evaluate(seq(par(d, d, Gen("Δ")), par(d, Gen("sw"), h), par(Gen("ev"), Gen("ev"))), env)
    return LinearMorphism((Dc, Dc), Dc, solve_through(pairing.form, (Dc,), (Hc,), t, (Dc, Dc)), Hc.field)
