"""Yetter-Drinfeld identities evaluated over the ambient (unbraided) category.

kG and the modules involved are replaced by trivially graded stand-ins, so
every crossing is a plain flip. The module and comodule structures then
become explicit maps α_X: kG⊗X → X and φ_X: X → kG⊗X, and identities such
as the compatibility condition

    φ(b·m) = b₁ m₍₋₁₎ S(b₃) ⊗ b₂·m₍₀₎

are checked as ordinary equalities of matrices.
"""

from __future__ import annotations

import numpy as np

from .diagram import GeneratorEnv, Gen, braid, expr_evaluate, idw, par, seq
from .report import Report
from .scalars import Field, Group
from .yd import LinearMorphism, YDObject, morphism_witness, plain_object


def group_algebra(field: Field, group: Group):
    """kG on a plain object, with m, η, Δ, ε, S and S̄ (= S)."""
    elems = group.elements
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    B = plain_object("kG", field, group, n)
    mult = np.zeros((n, n * n), dtype=np.int64)
    comult = np.zeros((n * n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for a in elems:
        ia = index[a]
        comult[ia * n + ia, ia] = 1
        anti[index[group.neg(a)], ia] = 1
        for b in elems:
            mult[index[group.add(a, b)], ia * n + index[b]] = 1
    unit = np.zeros((n, 1), dtype=np.int64)
    unit[index[group.identity], 0] = 1
    gens = {
        "mB": LinearMorphism((B, B), (B,), mult, field),
        "ηB": LinearMorphism((), (B,), unit, field),
        "ΔB": LinearMorphism((B,), (B, B), comult, field),
        "εB": LinearMorphism((B,), (), np.ones((1, n), dtype=np.int64), field),
        "SB": LinearMorphism((B,), (B,), anti, field),
        "S̄B": LinearMorphism((B,), (B,), anti, field),
    }
    return B, index, gens


def plain_structure(B: YDObject, index: dict, m: YDObject, tag: str):
    """Plain stand-in for m together with α_tag: kG⊗M → M and φ_tag: M → kG⊗M."""
    f, g = m.field, m.group
    n = len(index)
    M = plain_object(f"{m.name}~", f, g, m.dim)
    alpha = np.zeros((m.dim, n * m.dim), dtype=np.int64)
    for a, ia in index.items():
        alpha[:, ia * m.dim:(ia + 1) * m.dim] = m.act(a)
    phi = np.zeros((n * m.dim, m.dim), dtype=np.int64)
    for i, d in enumerate(m.degrees):
        phi[index[d] * m.dim + i, i] = 1
    return M, {
        f"α_{tag}": LinearMorphism((B, M), (M,), alpha, f),
        f"φ_{tag}": LinearMorphism((M,), (B, M), phi, f),
    }


def group_algebra_maps(m: YDObject):
    B, index, gens = group_algebra(m.field, m.group)
    M, more = plain_structure(B, index, m, "M")
    gens.update(more)
    return B, M, GeneratorEnv(m.field, gens)


def yd_condition_report(m: YDObject) -> Report:
    B, M, env = group_algebra_maps(m)
    lhs = seq(Gen("α_M"), Gen("φ_M"))
    rhs = seq(
        par(Gen("ΔB"), idw(M)),
        par(Gen("ΔB"), Gen("SB"), Gen("φ_M")),
        par(idw(B), braid(B, (B, B)), idw(M)),
        par(idw(B), braid(B, B), idw(B, M)),
        par(Gen("mB"), idw(B, B, M)),
        par(Gen("mB"), Gen("α_M")),
    )
    w = morphism_witness(expr_evaluate(lhs, env), expr_evaluate(rhs, env))
    rep = Report(f"Yetter-Drinfeld condition for '{m.name}'")
    rep.add("yd.compatibility", "φ(b·m) = b₁m₍₋₁₎S(b₃) ⊗ b₂·m₍₀₎", w is None, w)
    return rep
