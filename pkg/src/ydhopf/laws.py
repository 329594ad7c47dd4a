"""Algebra, module and module-algebra laws as equalities of evaluated diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Expr, GeneratorEnv, Gen, braid, expr_evaluate, idw, par, seq
from .report import Report, Witness
from .yd import LinearMorphism, Word, morphism_witness


@dataclass(frozen=True)
class Algebra:
    """An algebra in the category, carried by a tensor word."""

    word: Word
    m: LinearMorphism
    eta: LinearMorphism

    @property
    def dim(self) -> int:
        return self.m.matrix.shape[0]


def compare(env: GeneratorEnv, lhs: Expr, rhs: Expr) -> Witness | None:
    return morphism_witness(expr_evaluate(lhs, env), expr_evaluate(rhs, env))


def algebra_env(a: Algebra, tag: str, env: GeneratorEnv) -> GeneratorEnv:
    return env.extend({f"m_{tag}": a.m, f"η_{tag}": a.eta})


def algebra_laws(a: Algebra, name: str, env: GeneratorEnv | None = None) -> Report:
    env = algebra_env(a, "A", env or GeneratorEnv(a.m.field))
    A = a.word
    rep = Report(f"algebra laws for {name}")
    w = compare(env, seq(par(Gen("m_A"), Id_(A)), Gen("m_A")), seq(par(Id_(A), Gen("m_A")), Gen("m_A")))
    rep.add(f"{name}.associative", "m(m⊗id) = m(id⊗m)", w is None, w)
    w = compare(env, seq(par(Gen("η_A"), Id_(A)), Gen("m_A")), Id_(A))
    rep.add(f"{name}.left-unit", "m(η⊗id) = id", w is None, w)
    w = compare(env, seq(par(Id_(A), Gen("η_A")), Gen("m_A")), Id_(A))
    rep.add(f"{name}.right-unit", "m(id⊗η) = id", w is None, w)
    return rep


def Id_(word: Word) -> Expr:
    return idw(*word)


def module_laws(action: LinearMorphism, acting: Algebra, module_word: Word, side: str,
                name: str) -> Report:
    """Associativity and unit law of a left (K⊗M→M) or right (M⊗K→M) action."""
    env = GeneratorEnv(action.field, {"act": action, "m_K": acting.m, "η_K": acting.eta})
    K, M = acting.word, module_word
    rep = Report(f"module laws for {name}")
    if side == "left":
        w = compare(env, seq(par(Gen("m_K"), Id_(M)), Gen("act")),
                    seq(par(Id_(K), Gen("act")), Gen("act")))
        rep.add(f"{name}.module-assoc", "(kl)·x = k·(l·x)", w is None, w)
        w = compare(env, seq(par(Gen("η_K"), Id_(M)), Gen("act")), Id_(M))
        rep.add(f"{name}.module-unit", "1·x = x", w is None, w)
    else:
        w = compare(env, seq(par(Id_(M), Gen("m_K")), Gen("act")),
                    seq(par(Gen("act"), Id_(K)), Gen("act")))
        rep.add(f"{name}.module-assoc", "x·(kl) = (x·k)·l", w is None, w)
        w = compare(env, seq(par(Id_(M), Gen("η_K")), Gen("act")), Id_(M))
        rep.add(f"{name}.module-unit", "x·1 = x", w is None, w)
    return rep


def module_algebra_laws(action: LinearMorphism, acting_word: Word, comult: LinearMorphism,
                        counit: LinearMorphism, target: Algebra, side: str, name: str) -> Report:
    """Measuring law and unit law for a left or right module algebra, with the braided crossing."""
    env = GeneratorEnv(action.field, {"act": action, "Δ_K": comult, "ε_K": counit,
                                      "m_A": target.m, "η_A": target.eta})
    K, A = acting_word, target.word
    rep = Report(f"module-algebra laws for {name}")
    if side == "left":
        lhs = seq(par(Id_(K), Gen("m_A")), Gen("act"))
        rhs = seq(par(Gen("Δ_K"), Id_(A), Id_(A)),
                  par(Id_(K), braid(K, A), Id_(A)),
                  par(Gen("act"), Gen("act")),
                  Gen("m_A"))
        w = compare(env, lhs, rhs)
        rep.add(f"{name}.measuring", "k·(ab) = (k₁·a')(k₂'·b)", w is None, w)
        w = compare(env, seq(par(Id_(K), Gen("η_A")), Gen("act")), seq(Gen("ε_K"), Gen("η_A")))
        rep.add(f"{name}.unit-measuring", "k·1 = ε(k)1", w is None, w)
    else:
        lhs = seq(par(Gen("m_A"), Id_(K)), Gen("act"))
        rhs = seq(par(Id_(A), Id_(A), Gen("Δ_K")),
                  par(Id_(A), braid(A, K), Id_(K)),
                  par(Gen("act"), Gen("act")),
                  Gen("m_A"))
        w = compare(env, lhs, rhs)
        rep.add(f"{name}.measuring", "(ab)·k = (a·k₁')(b'·k₂)", w is None, w)
        w = compare(env, seq(par(Gen("η_A"), Id_(K)), Gen("act")), seq(Gen("ε_K"), Gen("η_A")))
        rep.add(f"{name}.unit-measuring", "1·k = ε(k)1", w is None, w)
    return rep


def is_multiplicative(f: LinearMorphism, src: Algebra, dst: Algebra, anti: bool = False) -> Witness | None:
    """f(uv) = f(u)f(v), or f(uv) = f(v')f(u') via the braiding when anti is set."""
    env = GeneratorEnv(f.field, {"f": f, "m_S": src.m, "m_T": dst.m})
    S, T = src.word, dst.word
    lhs = seq(Gen("m_S"), Gen("f"))
    if anti:
        rhs = seq(braid(S, S), par(Gen("f"), Id_(S)), par(Id_(T), Gen("f")), Gen("m_T"))
    else:
        rhs = seq(par(Gen("f"), Id_(S)), par(Id_(T), Gen("f")), Gen("m_T"))
    return compare(env, lhs, rhs)


def is_unital(f: LinearMorphism, src: Algebra, dst: Algebra) -> Witness | None:
    return morphism_witness(src.eta.then(f), dst.eta)
