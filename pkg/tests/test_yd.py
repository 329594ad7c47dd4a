import numpy as np
import pytest
from hypothesis import given, strategies as st

from exprgen import oracle_braid, sample_objects
from ydhopf.errors import (GradingActionClash, MismatchedContext, NonCommutingAction, ShapeMismatch,
                           WrongActionOrder)
from ydhopf.scalars import Field, Group, is_prime, primitive_root_of_unity
from ydhopf.yd import (LinearMorphism, YDObject, braiding, braiding_inverse, check_yd_condition, dual_object,
                       identity, is_yd_morphism, morphism_equal, morphism_witness, plain_object,
                       symmetric_pair_check, tensor_object, unit_object, unravel, word_degrees)

F5, Z2, Z4 = Field(5), Group((2,)), Group((4,))
GROUPS = [(2,), (3,), (4,), (5,), (6,), (7,), (8,), (2, 2), (2, 4), (2, 2, 2)]


@st.composite
def diagonal_objects(draw, max_dim=6):
    orders = draw(st.sampled_from(GROUPS))
    exponent = int(np.lcm.reduce(orders))
    p = next(q for q in range(3, 200) if is_prime(q) and (q - 1) % exponent == 0)
    f, G = Field(p), Group(orders)
    dim = draw(st.integers(1, max_dim))
    degrees = [tuple(draw(st.integers(0, n - 1)) for n in orders) for _ in range(dim)]
    action = [np.diag([pow(int(primitive_root_of_unity(f, n)), draw(st.integers(0, n - 1)), p)
                       for _ in range(dim)]) for n in orders]
    return YDObject("M", f, G, degrees, action)


def test_validation_errors():
    with pytest.raises(WrongActionOrder):
        YDObject("X", F5, Z2, [(0,)], [np.array([[2]])])
    with pytest.raises(GradingActionClash):
        YDObject("X", F5, Z2, [(0,), (1,)], [np.array([[0, 1], [1, 0]])])
    with pytest.raises(NonCommutingAction):
        YDObject("X", F5, Group((2, 2)), [(0, 0), (0, 0)],
                 [np.array([[0, 1], [1, 0]]), np.array([[1, 0], [0, 4]])])
    with pytest.raises(ShapeMismatch):
        YDObject("X", F5, Z2, [(0,)], [])


@given(diagonal_objects())
def test_random_diagonal_objects_satisfy_yd(m):
    assert check_yd_condition(m).passed


@given(diagonal_objects(), st.data())
def test_degree_mixing_mutation_is_caught(m, data):
    pairs = [(r, c) for r in range(m.dim) for c in range(m.dim) if m.degrees[r] != m.degrees[c]]
    if not pairs:
        return
    r, c = data.draw(st.sampled_from(pairs))
    j = data.draw(st.integers(0, m.group.rank - 1))
    bad = [a.copy() for a in m.action]
    bad[j][r, c] = data.draw(st.integers(1, m.field.p - 1))
    with pytest.raises((GradingActionClash, WrongActionOrder)):
        YDObject("bad", m.field, m.group, m.degrees, bad)
    assert not check_yd_condition(YDObject("bad", m.field, m.group, m.degrees, bad, validate=False)).passed


def test_act_of_group_elements():
    x = YDObject("X", F5, Z4, [(1,), (1,)], [np.array([[0, 4], [1, 0]])])
    assert np.array_equal(x.act((2,)), 4 * np.eye(2))
    assert np.array_equal(x.act((4,)), np.eye(2))
    assert np.array_equal(x.act((-1,)) @ x.act((1,)) % 5, np.eye(2))


def test_word_degrees_and_unravel():
    a, b, c, d = sample_objects()
    assert word_degrees((a, b), a.group) == [(0, 3), (1, 0)]
    assert unravel(5, (a, c, a)) == (1, 0, 1)
    assert word_degrees((), a.group) == [(0, 0)]


def test_braiding_formula_on_lines():
    """c(x⊗y) = χ_y(deg x) y⊗x on one-dimensional objects."""
    x = YDObject("x", F5, Z4, [(1,)], [[2]])
    y = YDObject("y", F5, Z4, [(3,)], [[3]])
    assert braiding(x, y).dense()[0, 0] == 3           # (deg x)·y = 3^1
    assert braiding(y, x).dense()[0, 0] == 3           # (deg y)·x = 2^3 = 8
    assert braiding_inverse(x, y).dense()[0, 0] == 2   # 3^-1 mod 5


def test_braiding_matches_oracle_and_inverse():
    objs = sample_objects()
    for x in objs:
        for y in objs:
            for w1, w2 in (((x,), (y,)), ((x, y), (y,)), ((x,), (y, x))):
                c = braiding(w1, w2)
                assert np.array_equal(c.dense(), oracle_braid(w1, w2))
                assert np.array_equal(braiding_inverse(w1, w2).dense(), oracle_braid(w1, w2, inverse=True))
                assert morphism_equal(c.then(braiding_inverse(w1, w2)), identity(w1 + w2))


def test_hexagons_on_words():
    objs = sample_objects()
    for x in objs:
        for y in objs:
            for z in objs:
                assert morphism_equal(braiding(x, (y, z)),
                                      braiding(x, y).tensor(identity(z)).then(identity(y).tensor(braiding(x, z))))
                assert morphism_equal(braiding((x, y), z),
                                      identity(x).tensor(braiding(y, z)).then(braiding(x, z).tensor(identity(y))))


def test_naturality_for_yd_morphisms():
    a, b, c, d = sample_objects()
    # c swaps its two basis vectors; that map commutes with both generators and keeps degrees
    f = LinearMorphism(c, c, np.array([[0, 1], [1, 0]]), F5)
    assert is_yd_morphism(f)
    for y in (a, b, d):
        assert morphism_equal(f.tensor(identity(y)).then(braiding(c, y)), braiding(c, y).then(identity(y).tensor(f)))
        assert morphism_equal(identity(y).tensor(f).then(braiding(y, c)), braiding(y, c).then(f.tensor(identity(y))))


def test_yd_morphism_detection():
    a, b, c, d = sample_objects()
    assert not is_yd_morphism(LinearMorphism(a, a, np.array([[0, 1], [1, 0]]), F5))   # mixes degrees
    assert not is_yd_morphism(LinearMorphism(c, c, np.array([[1, 0], [0, 2]]), F5))   # breaks the action
    assert is_yd_morphism(braiding(a, c)) and is_yd_morphism(identity((a, b)))


def test_symmetry():
    x = YDObject("x", F5, Z2, [(1,)], [[4]])
    assert symmetric_pair_check(x, x)
    z = YDObject("z", F5, Z4, [(1,)], [[2]])
    assert not symmetric_pair_check(z, z)
    assert symmetric_pair_check(plain_object("P", F5, Z4, 2), z)


def test_tensor_dual_unit():
    a, b, c, d = sample_objects()
    ab = tensor_object(a, b)
    assert ab.dim == 2 and ab.degrees == tuple(word_degrees((a, b), a.group))
    u = unit_object(a.field, a.group)
    assert tensor_object(a, u) is a and tensor_object(u, a) is a
    da = dual_object(a)
    assert da.degrees == ((1, 0), (0, 3))
    assert dual_object(da).same_structure(a)


def test_mismatched_context():
    x = YDObject("x", F5, Z2, [(1,)], [[4]])
    z = YDObject("z", F5, Z4, [(1,)], [[2]])
    with pytest.raises(MismatchedContext):
        braiding(x, z)


def test_morphism_witness():
    a = sample_objects()[0]
    f = identity(a)
    g = LinearMorphism(a, a, np.array([[1, 0], [0, 2]]), F5)
    w = morphism_witness(f, g)
    assert w.row == (1,) and w.col == (1,) and (w.lhs, w.rhs) == (1, 2)
    assert morphism_witness(f, f) is None
