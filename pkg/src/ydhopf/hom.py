"""Internal Hom objects, End M as an algebra, and YD-morphism checks for act and the pairing.

Hom(V, W) has basis E_{j,i} (v_i ↦ w_j) at index j·dim V + i. Its grading is
deg w_j − deg v_i and g acts by f ↦ g∘f∘g⁻¹. Both are then checked against the
module and comodule diagrams evaluated over the ambient category.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import GeneratorEnv, Gen, braid, idw, par, seq
from .errors import MismatchedContext
from .laws import Algebra, algebra_laws, compare, module_laws
from .linalg import inverse
from .report import Report
from .scalars import Group
from .yd import (LinearMorphism, YDObject, check_context, dual_object, is_yd_morphism,
                 unit_object)
from .ydcheck import group_algebra, plain_structure, yd_condition_report


def hom_object(V: YDObject, W: YDObject, name: str | None = None) -> YDObject:
    if V.field != W.field or V.group != W.group:
        raise MismatchedContext(f"'{V.name}' and '{W.name}' live over different groups or fields")
    G, p = V.group, V.field.p
    degrees = [G.sub(dw, dv) for dw in W.degrees for dv in V.degrees]
    action = [np.kron(aw, inverse(av, p).T) % p if V.dim and W.dim
              else np.zeros((0, 0), dtype=np.int64)
              for av, aw in zip(V.action, W.action)]
    return YDObject(name or f"Hom({V.name},{W.name})", V.field, G, degrees, action)


def act_matrix(V: YDObject, W: YDObject) -> np.ndarray:
    """Evaluation Hom(V,W)⊗V → W."""
    nv, nw = V.dim, W.dim
    out = np.zeros((nw, nw * nv * nv), dtype=np.int64)
    for j in range(nw):
        for i in range(nv):
            out[j, (j * nv + i) * nv + i] = 1
    return out


def hom_act(V: YDObject, W: YDObject, Hom: YDObject | None = None) -> LinearMorphism:
    Hom = Hom or hom_object(V, W)
    return LinearMorphism((Hom, V), W, act_matrix(V, W), V.field)


def composition_matrix(U: YDObject, V: YDObject, W: YDObject) -> np.ndarray:
    """Hom(V,W)⊗Hom(U,V) → Hom(U,W): E_{j,i}⊗E_{l,k} ↦ δ_il E_{j,k}."""
    nu, nv, nw = U.dim, V.dim, W.dim
    out = np.zeros((nw * nu, nw * nv * nv * nu), dtype=np.int64)
    for j in range(nw):
        for i in range(nv):
            for k in range(nu):
                out[j * nu + k, (j * nv + i) * (nv * nu) + i * nu + k] = 1
    return out


def hom_composition(U: YDObject, V: YDObject, W: YDObject) -> LinearMorphism:
    return LinearMorphism((hom_object(V, W), hom_object(U, V)), hom_object(U, W),
                          composition_matrix(U, V, W), U.field)


def is_unit_object(x: YDObject) -> bool:
    return (x.dim == 1 and x.degrees == (x.group.identity,)
            and all(int(a[0, 0]) == 1 for a in x.action))


def lift_to_product(*objs: YDObject) -> list[YDObject]:
    """Regard objects over different groups as objects over the product of those groups.

    Each object keeps its own grading and action on its own factor and is
    trivially graded and acted on by the other factors.
    """
    f = objs[0].field
    if any(o.field != f for o in objs):
        raise MismatchedContext("objects over different fields")
    groups: list[Group] = []
    for o in objs:
        if o.group not in groups:
            groups.append(o.group)
    if len(groups) == 1:
        return list(objs)
    big = Group(tuple(n for g in groups for n in g.orders))
    out = []
    for o in objs:
        k = groups.index(o.group)
        before = sum(g.rank for g in groups[:k])
        after = big.rank - before - o.group.rank
        degrees = [(0,) * before + tuple(d) + (0,) * after for d in o.degrees]
        eye = np.eye(o.dim, dtype=np.int64)
        action = [eye] * before + list(o.action) + [eye] * after
        out.append(YDObject(o.name, f, big, degrees, action))
    return out


def _plain_env(V: YDObject, W: YDObject, Hom: YDObject):
    B, index, gens = group_algebra(V.field, V.group)
    objs = {}
    for tag, x in (("V", V), ("W", W), ("Hom", Hom)):
        plain, more = plain_structure(B, index, x, tag)
        objs[tag] = plain
        gens.update(more)
    Vp, Wp, Hp = objs["V"], objs["W"], objs["Hom"]
    gens["act"] = LinearMorphism((Hp, Vp), Wp, act_matrix(V, W), V.field)
    return B, Vp, Wp, Hp, GeneratorEnv(V.field, gens)


def check_hom_yd(V: YDObject, W: YDObject) -> Report:
    """Module law, comodule law and the YD condition on Hom(V, W), plus both defining diagrams."""
    check_context((V,), (W,))
    Hom = hom_object(V, W)
    B, Vp, Wp, Hp, env = _plain_env(V, W, Hom)
    rep = Report(f"Hom({V.name},{W.name}) in the Yetter-Drinfeld category")
    b, v, h = idw(B), idw(Vp), idw(Hp)

    # module diagram: (b·F)(v) = b₁·F(S(b₂)·v)
    lhs = seq(par(Gen("α_Hom"), v), Gen("act"))
    rhs = seq(par(Gen("ΔB"), h, v), par(b, Gen("SB"), h, v), par(b, braid(B, Hp), v),
              par(b, h, Gen("α_V")), par(b, Gen("act")), Gen("α_W"))
    w = compare(env, lhs, rhs)
    rep.add("hom.module-diagram", "(b·F)(v) = b₁·F(S(b₂)·v)", w is None, w)

    # comodule diagram: F₍₋₁₎ ⊗ F₍₀₎(v) = F(v₍₀₎)₍₋₁₎ S̄(v₍₋₁₎) ⊗ F(v₍₀₎)₍₀₎
    lhs = seq(par(Gen("φ_Hom"), v), par(b, Gen("act")))
    rhs = seq(par(h, Gen("φ_V")), par(h, Gen("S̄B"), v), par(braid(Hp, B), v),
              par(b, Gen("act")), par(b, Gen("φ_W")), par(braid(B, B), idw(Wp)),
              par(Gen("mB"), idw(Wp)))
    w = compare(env, lhs, rhs)
    rep.add("hom.comodule-diagram", "F₍₋₁₎⊗F₍₀₎(v) = F(v₀)₍₋₁₎S̄(v₋₁)⊗F(v₀)₍₀₎", w is None, w)

    kB = Algebra((B,), env["mB"], env["ηB"])
    mod = module_laws(env["α_Hom"], kB, (Hp,), "left", "hom")
    ok = mod.passed
    rep.add("hom.module-law", "(ab)·F = a·(b·F), 1·F = F", ok,
            None if ok else mod.failures()[0].witness)

    w = compare(env, seq(Gen("φ_Hom"), par(Gen("ΔB"), h)), seq(Gen("φ_Hom"), par(b, Gen("φ_Hom"))))
    if w is None:
        w = compare(env, seq(Gen("φ_Hom"), par(Gen("εB"), h)), h)
    rep.add("hom.comodule-law", "(Δ⊗id)φ = (id⊗φ)φ, (ε⊗id)φ = id", w is None, w)

    yd = yd_condition_report(Hom)
    rep.add("hom.yd-condition", yd["yd.compatibility"].anchor, yd.passed,
            yd["yd.compatibility"].witness)

    if is_unit_object(W):
        rep.extend(dual_coaction_report(V, Hom))
    return rep


def dual_coaction_report(V: YDObject, Vd: YDObject) -> Report:
    """⟨f₍₀₎, x⟩ f₍₋₁₎ = ⟨f, x₍₀₎⟩ S̄(x₍₋₁₎) for the evaluation Vd⊗V → I."""
    B, index, gens = group_algebra(V.field, V.group)
    Vp, more = plain_structure(B, index, V, "V")
    gens.update(more)
    Dp, more = plain_structure(B, index, Vd, "D")
    gens.update(more)
    n = V.dim
    gens["ev"] = LinearMorphism((Dp, Vp), (), np.eye(n, dtype=np.int64).reshape(1, n * n), V.field)
    env = GeneratorEnv(V.field, gens)
    b, v, d = idw(B), idw(Vp), idw(Dp)
    lhs = seq(par(Gen("φ_D"), v), par(b, Gen("ev")))
    rhs = seq(par(d, Gen("φ_V")), par(d, Gen("S̄B"), v), par(braid(Dp, B), v), par(b, Gen("ev")))
    w = compare(env, lhs, rhs)
    rep = Report(f"dual coaction on '{Vd.name}'")
    rep.add("hom.dual-coaction", "⟨f₍₀₎,x⟩f₍₋₁₎ = ⟨f,x₍₀₎⟩S̄(x₍₋₁₎)", w is None, w)
    return rep


@dataclass(frozen=True)
class EndAlgebra:
    """End M with composition product, unit id_M and evaluation act: E⊗M → M."""

    module: YDObject
    carrier: YDObject
    m: LinearMorphism
    eta: LinearMorphism
    act: LinearMorphism

    @property
    def word(self):
        return (self.carrier,)

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.word, self.m, self.eta)


def end_as_algebra_in_category(M: YDObject, name: str = "E") -> EndAlgebra:
    E = hom_object(M, M, name)
    n = M.dim
    m = LinearMorphism((E, E), E, composition_matrix(M, M, M), M.field)
    eta = LinearMorphism((), E, np.eye(n, dtype=np.int64).reshape(n * n, 1), M.field)
    act = LinearMorphism((E, M), M, act_matrix(M, M), M.field)
    return EndAlgebra(M, E, m, eta, act)


def end_algebra_report(A: EndAlgebra) -> Report:
    rep = Report(f"End({A.module.name}) as an algebra")
    for key, f in (("m", A.m), ("η", A.eta), ("act", A.act)):
        rep.add(f"end.yd-morphism.{key}", f"{key} is a Yetter-Drinfeld morphism", is_yd_morphism(f))
    rep.extend(algebra_laws(A.algebra, "end"))
    env = GeneratorEnv(A.m.field, {"act": A.act, "m_E": A.m, "η_E": A.eta})
    e, mm = idw(A.carrier), idw(A.module)
    w = compare(env, seq(par(Gen("m_E"), mm), Gen("act")), seq(par(e, Gen("act")), Gen("act")))
    rep.add("end.act-composition", "act(m_E⊗id) = act(id⊗act)", w is None, w)
    w = compare(env, seq(par(Gen("η_E"), mm), Gen("act")), mm)
    rep.add("end.act-unit", "act(η_E⊗id) = id", w is None, w)
    return rep


def check_act_is_yd(H: YDObject) -> bool:
    return is_yd_morphism(hom_act(H, H))


def check_pairing_is_yd(H: YDObject, Hd: YDObject, pairing: LinearMorphism) -> bool:
    form = getattr(pairing, "form", pairing)
    return is_yd_morphism(form)


def hom_unit_is_dual(V: YDObject) -> bool:
    return hom_object(V, unit_object(V.field, V.group)).same_structure(dual_object(V))


def hom_from_unit_is_object(W: YDObject) -> bool:
    return hom_object(unit_object(W.field, W.group), W).same_structure(W)


def composition_is_yd(U: YDObject, V: YDObject, W: YDObject) -> bool:
    return is_yd_morphism(hom_composition(U, V, W))


__all__ = ["EndAlgebra", "act_matrix", "check_act_is_yd", "check_hom_yd", "check_pairing_is_yd",
           "composition_is_yd", "composition_matrix", "dual_coaction_report", "end_algebra_report",
           "end_as_algebra_in_category", "hom_act", "hom_composition", "hom_from_unit_is_object",
           "hom_object", "hom_unit_is_dual", "is_unit_object", "lift_to_product"]
