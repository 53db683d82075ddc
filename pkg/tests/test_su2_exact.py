from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from nilhom.quat_group import GroupId, QuatElem, commutator, element_product
from nilhom.su2_exact import (CIRCLE_ONE, OCTA_GEN, ONE, CircleElem, binary_octahedral,
                              circle_commutator, circle_conjugate, circle_inverse, circle_product,
                              circle_to_quat_elem, embed_quaternion_group, normalizes,
                              quaternion_group_set)

C = CircleElem
angles = st.builds(F, st.integers(0, 63), st.sampled_from([1, 2, 3, 4, 8, 16, 32, 64]))
circle = st.builds(C, st.integers(0, 1), angles)


def test_circle_product_examples():
    assert circle_product(C(0, F(1, 3)), C(0, F(1, 6))) == C(0, F(1, 2))
    assert circle_product(C(0, F(1, 8)), C(1, 0)) == C(1, F(7, 8))
    assert circle_product(C(1, 0), C(1, 0)) == C(0, F(1, 2))


def test_angle_is_reduced_mod_one():
    assert C(0, F(5, 4)).theta == F(1, 4)
    assert C(0, F(-1, 4)).theta == F(3, 4)
    assert C(0, 0) == CIRCLE_ONE
    with pytest.raises(ValueError):
        C(2, 0)


def test_circle_commutator_examples():
    assert circle_commutator(C(0, F(1, 5)), C(0, F(2, 7))) == CIRCLE_ONE
    assert circle_commutator(C(0, F(1, 8)), C(1, 0)) == C(0, F(1, 4))
    assert circle_commutator(C(1, F(1, 8)), C(1, F(1, 4))) == C(0, F(1, 4))


def test_circle_conjugate_examples():
    t, p = F(1, 16), F(3, 32)
    assert circle_conjugate(C(0, p), C(0, t)) == C(0, p)
    assert circle_conjugate(C(1, p), C(0, t)) == C(1, p - 2 * t)
    assert circle_conjugate(C(0, p), C(1, t)) == C(0, -p)


@given(circle, circle)
def test_commutator_closed_forms(a, b):
    c = circle_commutator(a, b)
    assert c.wflag == 0
    x, y = a.theta, b.theta
    if a.wflag == 0 and b.wflag == 0:
        assert c == CIRCLE_ONE
    elif a.wflag == 0:
        assert c == C(0, 2 * x)
    elif b.wflag == 0:
        assert c == C(0, -2 * y)
    else:
        assert c == C(0, 2 * (y - x))


@given(circle, circle, circle)
def test_group_laws(a, b, c):
    assert circle_product(circle_product(a, b), c) == circle_product(a, circle_product(b, c))
    assert circle_product(a, circle_inverse(a)) == CIRCLE_ONE
    assert circle_conjugate(a, b) == circle_product(circle_product(b, a), circle_inverse(b))


def test_commutator_minus_one_pairs():
    # among representatives with small denominators, [X, Y] = -I forces X = +-xi_4 against a
    # w-coset element, or two w-coset elements whose angles differ by a quarter turn
    minus = C(0, F(1, 2))
    reps = [C(e, F(j, 16)) for e in (0, 1) for j in range(16)]
    for x, y in product(reps, reps):
        if circle_commutator(x, y) != minus:
            continue
        if x.wflag == 0:
            assert x.theta in (F(1, 4), F(3, 4)) and y.wflag == 1
        elif y.wflag == 0:
            assert y.theta in (F(1, 4), F(3, 4))
        else:
            assert (y.theta - x.theta) % 1 in (F(1, 4), F(3, 4))


def test_embed_examples():
    q8, q16 = GroupId.quaternion(3), GroupId.quaternion(4)
    assert embed_quaternion_group(q8, QuatElem(0, 1)) == C(0, F(1, 4))
    assert embed_quaternion_group(q16, QuatElem(1, 1)) == C(1, F(1, 8))
    assert embed_quaternion_group(q8, QuatElem(0, 2)) == C(0, F(1, 2))
    with pytest.raises(ValueError):
        embed_quaternion_group(GroupId.dihedral(3), QuatElem(0, 1))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_embed_is_injective_homomorphism(m):
    g = GroupId.quaternion(m)
    els = g.elements()
    images = {embed_quaternion_group(g, a) for a in els}
    assert len(images) == g.order
    for a, b in product(els, els):
        ea, eb = embed_quaternion_group(g, a), embed_quaternion_group(g, b)
        assert embed_quaternion_group(g, element_product(g, a, b)) == circle_product(ea, eb)
        assert embed_quaternion_group(g, commutator(g, a, b)) == circle_commutator(ea, eb)
        assert circle_to_quat_elem(g, ea) == a
    assert circle_to_quat_elem(g, C(0, F(1, 3))) is None


def test_binary_octahedral():
    bo = binary_octahedral()
    assert len(bo) == 48
    assert all(x.norm() == ONE for x in bo)
    assert all(x * y in bo for x in bo for y in bo)
    assert all(x.inverse() in bo for x in bo)
    q16 = quaternion_group_set(GroupId.quaternion(4))
    assert len(q16) == 16 and q16 <= bo


def test_normalizes():
    bo = binary_octahedral()
    q8 = quaternion_group_set(GroupId.quaternion(3))
    q16 = quaternion_group_set(GroupId.quaternion(4))
    assert all(normalizes(g, q8) for g in bo)
    assert not normalizes(OCTA_GEN, q16)
    one = next(x for x in bo if x.a == ONE)
    assert normalizes(one, q16) and normalizes(one, bo)
    # the normalizer of Q16 inside BO is Q16 itself
    assert {g for g in bo if normalizes(g, q16)} == q16


@pytest.mark.parametrize("m", [3, 4])
def test_conjugation_permutes_quaternion_group(m):
    g = GroupId.quaternion(m)
    big = GroupId.quaternion(m + 1)
    sub = {embed_quaternion_group(g, a) for a in g.elements()}
    for b in big.elements():
        eb = embed_quaternion_group(big, b)
        assert {circle_conjugate(s, eb) for s in sub} == sub
    if m == 3:
        s8 = quaternion_group_set(g)
        for x in binary_octahedral():
            assert {x * s * x.inverse() for s in s8} == s8
