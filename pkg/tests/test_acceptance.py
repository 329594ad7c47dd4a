"""Acceptance criteria 1-12. Each test records one line per part; the terminal
summary prints one PASS/FAIL line per criterion.

two-gen is a length truncation on which Δ does not descend to the quotient, so
it is not a bialgebra. Parts that need the bialgebra axioms on two-gen are
recorded as FAIL and marked xfail(strict=True): if they ever start passing the
suite goes red.
"""

import random
import time

import numpy as np
import pytest
from click.testing import CliRunner

from exprgen import ExprGen, oracle_braid, oracle_eval, sample_objects
from ydhopf.cli import main
from ydhopf.constructions import (DualityContext, check_elimination, check_rl_condition, end_algebra,
                                  lambda_bar, lambda_bar2_report, lambda_map, lambda_rho_multiplicative_report,
                                  lambda_rho_report, proof_machinery_report, regular_comodule_setup,
                                  rho_map, rl_identity_witness, verify_duality)
from ydhopf.diagram import expr_evaluate, idw, par, seq, braid
from ydhopf.fileio import canonical_text, hopf_from_dict, hopf_to_dict, load_hopf, save_hopf
from ydhopf.hom import (check_act_is_yd, check_hom_yd, check_pairing_is_yd, hom_unit_is_dual,
                        lift_to_product)
from ydhopf.hopf import (dual_mult_unbraided, harpoon_actions, harpoon_report, hopf_assemble,
                         hopf_axiom_report, quasi_dual_build, quasi_dual_check)
from ydhopf.qta import preset, preset_params, quantum_cocommutative_check, quantum_cocommutative_report, word_action_check
from ydhopf.scalars import Field, Group, is_prime, primitive_root_of_unity
from ydhopf.yd import (YDObject, braiding, identity, is_yd_morphism, morphism_equal, unit_object)
from ydhopf.ydcheck import yd_condition_report

DISPLAYS = ("quasi-dual.comult-pairing", "quasi-dual.unit-pairing", "quasi-dual.mult-pairing")
TWO_GEN = pytest.mark.xfail(strict=True, reason="two-gen is not a bialgebra: Δ(x_i x_j) leaves L_2")


def failing(rep):
    return ", ".join(a.name for a in rep.failures())


def gen_and_check(tmp_path, name):
    runner = CliRunner()
    path = tmp_path / f"{name}.json"
    res = runner.invoke(main, ["gen", "preset", "--name", name, "--out", str(path)])
    assert res.exit_code == 0, res.output
    return runner.invoke(main, ["check", "hopf", str(path)])


# 1

def test_criterion_01_hopf_axioms(tmp_path, criterion):
    t = time.perf_counter()
    for name, dim in (("bline", 2), ("z4q2", 4)):
        res = gen_and_check(tmp_path, name)
        criterion(1, f"check hopf {name} (dim {dim})",
                  res.exit_code == 0 and preset(name).dim == dim, f"exit {res.exit_code}")
        assert res.exit_code == 0, res.output
    elapsed = time.perf_counter() - t
    criterion(1, "runtime < 10 s", elapsed < 10, f"{elapsed:.2f} s")
    assert elapsed < 10


@TWO_GEN
def test_criterion_01_two_gen(tmp_path, criterion):
    res = gen_and_check(tmp_path, "two-gen")
    rep = hopf_axiom_report(preset("two-gen", verify=False))
    criterion(1, "check hopf two-gen (dim 7)", res.exit_code == 0,
              f"exit {res.exit_code}; failing {failing(rep)}")
    assert res.exit_code == 0


# 2

def _random_diagonal(rng: random.Random):
    orders = rng.choice([(2,), (3,), (4,), (5,), (6,), (7,), (8,), (2, 2), (2, 4), (2, 2, 2)])
    exponent = int(np.lcm.reduce(orders))
    p = next(q for q in range(3, 200) if is_prime(q) and (q - 1) % exponent == 0)
    f, G = Field(p), Group(orders)
    dim = rng.randint(1, 6)
    degrees = [tuple(rng.randrange(n) for n in orders) for _ in range(dim)]
    action = []
    for n in orders:
        root = int(primitive_root_of_unity(f, n))
        action.append(np.diag([pow(root, rng.randrange(n), p) for _ in range(dim)]))
    return f, G, degrees, action


def test_criterion_02_yd_condition(criterion):
    for name in ("bline", "two-gen", "z4q2", "sym-line", "twisted-pair"):
        rep = yd_condition_report(preset(name, verify=False).carrier)
        criterion(2, f"preset carrier {name}", rep.passed)
        assert rep.passed
    rng = random.Random(20241016)
    ok, caught, mutated = 0, 0, 0
    for k in range(100):
        f, G, degrees, action = _random_diagonal(rng)
        m = YDObject(f"M{k}", f, G, degrees, action)
        ok += yd_condition_report(m).passed
        pairs = [(r, c) for r in range(m.dim) for c in range(m.dim) if degrees[r] != degrees[c]]
        if not pairs:
            continue
        r, c = rng.choice(pairs)
        j = rng.randrange(G.rank)
        bad = [a.copy() for a in action]
        bad[j][r, c] = rng.randrange(1, f.p)
        mutated += 1
        caught += not yd_condition_report(YDObject("bad", f, G, degrees, bad, validate=False)).passed
    criterion(2, "100 random diagonal objects", ok == 100, f"{ok}/100")
    criterion(2, "degree-mixing mutations caught", caught == mutated and mutated > 50,
              f"{caught}/{mutated}")
    assert ok == 100 and caught == mutated and mutated > 50


# 3

def test_criterion_03_quasi_dual(criterion, bline, two_gen):
    for name, H, verify in (("bline", bline, True), ("two-gen", two_gen, False)):
        Hd, P = quasi_dual_build(H, verify=verify)
        rep = quasi_dual_check(H, Hd, P)
        ok = all(rep[n].passed for n in DISPLAYS)
        criterion(3, f"three displays on {name}", ok, failing(rep))
        assert ok


def _negative_control(H):
    Hd, P = quasi_dual_build(H, verify=False)
    bad = hopf_assemble(Hd.carrier, dual_mult_unbraided(H, Hd.carrier, P), Hd.eta, Hd.delta, Hd.eps, Hd.S)
    return quasi_dual_check(H, bad, P)["quasi-dual.mult-pairing"]


@pytest.mark.xfail(strict=True, reason="on two-gen every crossing in the mult display carries scalar 1")
def test_criterion_03_negative_control_two_gen(criterion, two_gen):
    a = _negative_control(two_gen)
    criterion(3, "braiding-omitted m_d fails the multiplication display on two-gen", not a.passed,
              "the flip and the braiding agree on every term of that display")
    assert not a.passed


def test_criterion_03_negative_control_twisted_pair(criterion, twisted_pair):
    a = _negative_control(twisted_pair)
    criterion(3, "braiding-omitted m_d fails the multiplication display on twisted-pair (supplementary)",
              not a.passed, str(a.witness))
    assert not a.passed


# 4

def test_criterion_04_harpoons(criterion, bline, bline_dual):
    t = time.perf_counter()
    Hd, P = bline_dual
    rep = harpoon_report(bline, Hd, harpoon_actions(bline, Hd, P, verify=False))
    elapsed = time.perf_counter() - t
    criterion(4, "module and module-algebra laws on bline", rep.passed, failing(rep))
    criterion(4, "runtime < 30 s", elapsed < 30, f"{elapsed:.2f} s")
    assert rep.passed and elapsed < 30


@TWO_GEN
def test_criterion_04_two_gen(criterion, two_gen, two_gen_dual):
    Hd, P = two_gen_dual
    rep = harpoon_report(two_gen, Hd, harpoon_actions(two_gen, Hd, P, verify=False))
    module = [a for a in rep.assertions if "measuring" not in a.name and "unit-" not in a.name]
    criterion(4, "module laws on two-gen", all(a.passed for a in module))
    criterion(4, "module-algebra laws on two-gen", rep.passed, failing(rep))
    assert rep.passed


# 5

def test_criterion_05_lambda_rho(criterion, bline, bline_dual):
    Hd, P = bline_dual
    rep = lambda_rho_multiplicative_report(DualityContext(bline, Hd, P))
    criterion(5, "λ multiplicative/unital, ρ anti-multiplicative on bline", rep.passed, failing(rep))
    assert rep.passed


@TWO_GEN
def test_criterion_05_two_gen(criterion, two_gen, two_gen_dual):
    Hd, P = two_gen_dual
    rep = lambda_rho_multiplicative_report(DualityContext(two_gen, Hd, P))
    criterion(5, "λ multiplicative/unital, ρ anti-multiplicative on two-gen", rep.passed, failing(rep))
    assert rep.passed


# 6

def test_criterion_06_identity(criterion, bline, bline_dual):
    Hd, P = bline_dual
    rep = lambda_rho_report(DualityContext(bline, Hd, P))
    n = bline.dim * Hd.dim * Hd.dim * bline.dim
    criterion(6, f"identity after act on bline ({n}-dim input)", rep["lambda-rho.identity-act"].passed)
    criterion(6, "five partial cases on bline", rep.passed, failing(rep))
    assert rep.passed and n == 16


@TWO_GEN
def test_criterion_06_two_gen(criterion, two_gen, two_gen_dual):
    Hd, P = two_gen_dual
    rep = lambda_rho_report(DualityContext(two_gen, Hd, P))
    criterion(6, "identity after act on two-gen", rep["lambda-rho.identity-act"].passed)
    sub = [n for n in rep.names() if n.startswith("lambda-rho.") and "identity" not in n]
    criterion(6, "five partial cases on two-gen", all(rep[s].passed for s in sub), failing(rep))
    assert rep.passed


# 7

def test_criterion_07_duality(criterion, bline, bline_dual):
    t = time.perf_counter()
    Hd, P = bline_dual
    R = regular_comodule_setup(bline, Hd, P)[0]
    rep = verify_duality(R, bline, Hd, P)
    elapsed = time.perf_counter() - t
    criterion(7, "verify_duality on bline", rep.passed, failing(rep))
    assert rep.passed and elapsed < 300


@TWO_GEN
def test_criterion_07_two_gen(criterion, two_gen, two_gen_dual):
    t = time.perf_counter()
    Hd, P = two_gen_dual
    R = regular_comodule_setup(two_gen, Hd, P)[0]
    rep = verify_duality(R, two_gen, Hd, P)
    elapsed = time.perf_counter() - t
    big = rep.metadata["dim (R#H)#Hd"]
    criterion(7, "dim (R#H)#Hd reaches 343 on two-gen", big == 343, str(big))
    criterion(7, "runtime < 5 min on two-gen", elapsed < 300, f"{elapsed:.2f} s")
    criterion(7, "verify_duality on two-gen", rep.passed, failing(rep))
    assert big == 343 and elapsed < 300
    assert rep.passed


# 8

def test_criterion_08_proof_machinery(criterion, bline, bline_dual):
    Hd, P = bline_dual
    R = regular_comodule_setup(bline, Hd, P)[0]
    rep = proof_machinery_report(DualityContext(bline, Hd, P, R))
    for name in ("xi.multiplicative", "xi.exchange", "phi-prime.factor"):
        criterion(8, name, rep[name].passed)
    criterion(8, "all of ξ, its exchange relation and Φ′ on bline", rep.passed, failing(rep))
    assert rep.passed


# 9

def test_criterion_09_hom(criterion, bline, two_gen, z4q2, bline_dual, two_gen_dual):
    objs = {"bline": bline.carrier, "z4q2": z4q2.carrier}
    bl, zq = lift_to_product(objs["bline"], objs["z4q2"])
    unit = unit_object(bl.field, bl.group)
    pool = {"bline": bl, "z4q2": zq, "unit": unit}
    for a in pool:
        for b in pool:
            rep = check_hom_yd(pool[a], pool[b])
            criterion(9, f"check_hom_yd({a}, {b})", rep.passed, failing(rep))
            assert rep.passed
    for name, H, (Hd, P) in (("bline", bline, bline_dual), ("two-gen", two_gen, two_gen_dual)):
        ok = check_act_is_yd(H.carrier) and check_pairing_is_yd(H.carrier, Hd.carrier, P)
        criterion(9, f"act and pairing are YD morphisms on {name}", ok)
        assert ok
    for name, x in list(objs.items()) + [("two-gen", two_gen.carrier)]:
        criterion(9, f"Hom({name}, unit) = dual", hom_unit_is_dual(x))
        assert hom_unit_is_dual(x)


# 10

def test_criterion_10_words(criterion, z4q2, two_gen):
    for name, T in (("z4q2", z4q2), ("two-gen", two_gen)):
        rep = word_action_check(T, preset_params(name))
        criterion(10, f"word action on {name}", rep.passed, failing(rep))
        assert rep.passed
    xx = 2  # basis: 1, x, xx, xxx
    a = z4q2.carrier.act((1,))
    ok = a[xx, xx] == 4 and np.count_nonzero(a[:, xx]) == 1
    criterion(10, "g·(xx) = 4·(xx) on z4q2", ok)
    assert ok
    for name, T, want in (("two-gen", two_gen, True), ("z4q2", z4q2, False)):
        got = quantum_cocommutative_check(preset_params(name), T)
        rep = quantum_cocommutative_report(T, preset_params(name))
        ok = got is want and rep["cocomm.agreement"].passed
        criterion(10, f"quantum cocommutative {name} is {want}, semantic agrees", ok)
        assert ok


# 11

@pytest.mark.parametrize("name", ["bline", "two-gen"])
def test_criterion_11_elimination(criterion, name, bline, two_gen, bline_dual, two_gen_dual):
    H, (Hd, P) = {"bline": (bline, bline_dual), "two-gen": (two_gen, two_gen_dual)}[name]
    end = end_algebra(H)
    ok = check_elimination(end.act)
    criterion(11, f"elimination for End H ({name})", ok)
    lam = lambda_map(H, P, end.carrier)
    left = morphism_equal(lam.then(lambda_bar(lam)), identity(lam.domain, H.field))
    criterion(11, f"λ̄∘λ = id ({name})", left)
    rep = lambda_bar2_report(H, P, end, lam)
    criterion(11, f"λ̄₂ cross-check ({name})", rep.passed, failing(rep))
    assert ok and left and rep.passed
    if name == "two-gen":
        rho = rho_map(H, P, end.carrier)
        rl = check_rl_condition(H, None, P, lam, rho)
        ident = rl_identity_witness(H, P, lam, rho) is None
        criterion(11, "RL condition on two-gen (ρ(f#1) = λ(1#f))", rl and ident)
        assert rl and ident


# 12

def test_criterion_12_engine(criterion, tmp_path):
    rng = random.Random(12)
    agree, interchange = 0, 0
    for k in range(500):
        g = ExprGen(rng)
        e = g.expression()
        agree += np.array_equal(expr_evaluate(e, g.env).dense() % 5, oracle_eval(e, g.env))
        dom = [g.word(0, 2) for _ in range(2)]
        f1, f2 = g.generator(dom[0]), g.generator(dom[1])
        cod = [g.codomain(f1), g.codomain(f2)]
        h1, h2 = g.generator(cod[0]), g.generator(cod[1])
        lhs = seq(par(f1, f2), par(h1, h2))
        rhs = par(seq(f1, h1), seq(f2, h2))
        interchange += morphism_equal(expr_evaluate(lhs, g.env), expr_evaluate(rhs, g.env))
    criterion(12, "functoriality against the dense oracle (500 expressions)", agree == 500, f"{agree}/500")
    criterion(12, "interchange law (500 cases)", interchange == 500, f"{interchange}/500")

    objs = sample_objects()
    hex_ok, nat_ok, total = 0, 0, 0
    for x in objs:
        for y in objs:
            for z in objs:
                total += 1
                h1 = morphism_equal(braiding(x, (y, z)),
                                    braiding(x, y).tensor(identity(z)).then(identity(y).tensor(braiding(x, z))))
                h2 = morphism_equal(braiding((x, y), z),
                                    identity(x).tensor(braiding(y, z)).then(braiding(x, z).tensor(identity(y))))
                hex_ok += h1 and h2
            # naturality in the first slot, against the action of the first generator (a YD endomorphism
            # of x exactly when it commutes with the other action matrices; here every action is)
            f = _yd_endomorphism(x)
            nat_ok += morphism_equal(f.tensor(identity(y)).then(braiding(x, y)),
                                     braiding(x, y).then(identity(y).tensor(f)))
            nat_ok += np.array_equal(braiding(x, y).dense() % 5, oracle_braid((x,), (y,)))
    criterion(12, "hexagon identities", hex_ok == total, f"{hex_ok}/{total}")
    criterion(12, "naturality and braiding oracle", nat_ok == 2 * len(objs) ** 2)

    same = True
    for name in ("bline", "two-gen", "z4q2", "sym-line"):
        H = preset(name, verify=False)
        path = tmp_path / f"{name}.json"
        data = save_hopf(H, path)
        raw = path.read_bytes()
        H2, data2 = load_hopf(path, verify=False)
        save_hopf(H2, tmp_path / "again.json")
        same &= raw == (tmp_path / "again.json").read_bytes()
        same &= canonical_text(hopf_to_dict(hopf_from_dict(data, verify=False))) == raw.decode()
    criterion(12, "file round-trip bit-exact", same)
    assert agree == 500 and interchange == 500 and hex_ok == total
    assert nat_ok == 2 * len(objs) ** 2 and same


def _yd_endomorphism(x: YDObject):
    """g·(-) for the first group generator: degree-preserving and commuting with the action."""
    from ydhopf.yd import LinearMorphism
    f = LinearMorphism(x, x, x.action[0], x.field)
    assert is_yd_morphism(f)
    return f
