import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import ydhopf.hom as hom
from test_yd import diagonal_objects
from ydhopf.errors import MismatchedContext
from ydhopf.hom import (check_act_is_yd, check_hom_yd, composition_is_yd, end_algebra_report,
                        end_as_algebra_in_category, hom_from_unit_is_object, hom_object, hom_unit_is_dual,
                        lift_to_product)
from ydhopf.scalars import Field, Group
from ydhopf.yd import YDObject, dual_object, unit_object


def test_hom_degrees_and_action(z4q2):
    V = z4q2.carrier
    Hm = hom_object(V, V)
    n = V.dim
    for j in range(n):
        for i in range(n):
            assert Hm.degrees[j * n + i] == V.group.sub(V.degrees[j], V.degrees[i])
    # g acts on E_{j,i} by the scalar χ_j(g)/χ_i(g)
    A = np.diag(V.act((1,)))
    want = [A[j] * pow(int(A[i]), -1, 5) % 5 for j in range(n) for i in range(n)]
    assert np.array_equal(np.diag(Hm.act((1,))), want)


def test_lift_and_all_pairs(bline, z4q2):
    bl, zq = lift_to_product(bline.carrier, z4q2.carrier)
    assert bl.group == zq.group == Group((2, 4))
    assert bl.degrees == ((0, 0), (1, 0)) and zq.degrees[1] == (0, 1)
    unit = unit_object(bl.field, bl.group)
    for V in (bl, zq, unit):
        for W in (bl, zq, unit):
            rep = check_hom_yd(V, W)
            assert rep.passed, rep.text()
            assert ("hom.dual-coaction" in rep.names()) == (W is unit)
    assert composition_is_yd(bl, zq, unit) and composition_is_yd(zq, bl, zq)


def test_mismatched_groups_need_lifting(bline, z4q2):
    with pytest.raises(MismatchedContext):
        hom_object(bline.carrier, z4q2.carrier)
    with pytest.raises(MismatchedContext):
        lift_to_product(bline.carrier, YDObject("x", Field(7), Group((2,)), [(0,)]))


def test_wrong_hom_action_is_caught(z4q2, monkeypatch):
    right = hom.hom_object

    def naive(V, W, name=None):
        h = right(V, W, name)
        action = [np.kron(aw, av) % V.field.p for av, aw in zip(V.action, W.action)]
        return YDObject(h.name, h.field, h.group, h.degrees, action)

    monkeypatch.setattr(hom, "hom_object", naive)
    rep = check_hom_yd(z4q2.carrier, z4q2.carrier)
    assert not rep["hom.module-diagram"].passed
    assert rep["hom.comodule-diagram"].passed


def test_wrong_hom_grading_is_caught(z4q2, monkeypatch):
    right = hom.hom_object

    def flipped(V, W, name=None):
        h = right(V, W, name)
        return YDObject(h.name, h.field, h.group, [h.group.neg(d) for d in h.degrees], h.action)

    monkeypatch.setattr(hom, "hom_object", flipped)
    rep = check_hom_yd(z4q2.carrier, z4q2.carrier)
    assert not rep["hom.comodule-diagram"].passed


@settings(max_examples=40)
@given(diagonal_objects(max_dim=3), st.data())
def test_random_hom_objects(V, data):
    degrees = [tuple(data.draw(st.integers(0, n - 1)) for n in V.group.orders) for _ in range(2)]
    W = YDObject("W", V.field, V.group, degrees, [np.diag([a[0, 0]] * 2) for a in V.action])
    assert check_hom_yd(V, W).passed
    assert composition_is_yd(V, W, V)
    assert hom_unit_is_dual(V) and hom_from_unit_is_object(W)


def test_end_algebra_and_act(bline, z4q2):
    for H in (bline, z4q2):
        A = end_as_algebra_in_category(H.carrier)
        assert end_algebra_report(A).passed
        assert check_act_is_yd(H.carrier)


def test_dual_identifications(z4q2):
    V = z4q2.carrier
    assert hom_object(V, unit_object(V.field, V.group)).same_structure(dual_object(V))
    assert hom_from_unit_is_object(V)
