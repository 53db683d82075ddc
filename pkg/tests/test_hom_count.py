from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilhom.hom_count import (K_formula, Method, N_formula, Nq_formula, VerificationError,
                              components_formula, conjugation_orbit_census,
                              conjugation_orbit_count, covering_division,
                              dihedral_normalizer_permutations, gen_tuple_count,
                              gen_tuple_count_formula, gen_tuple_count_inclusion_exclusion,
                              normalizer_order, normalizer_permutations, orbit_count_formula,
                              partition_identity, q8_automorphisms_abstract, so3_component_count,
                              so3_formulas, stable_summand_counts, su2_component_count,
                              u2_component_count, u2_stabilizer)
from nilhom.quat_group import GroupId, QuatElem

E = QuatElem


def test_gen_tuple_count_examples():
    assert gen_tuple_count(2, 3) == 24
    assert gen_tuple_count(1, 3) == 0
    assert gen_tuple_count(2, 4) == 96
    assert gen_tuple_count(2, 3, "enumeration") == 24
    assert gen_tuple_count(2, 4, Method.BOTH) == 96


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("r", [3, 4, 5])
def test_gen_tuple_count_three_ways(n, r):
    f = gen_tuple_count_formula(n, r)
    assert gen_tuple_count_inclusion_exclusion(n, r) == f
    assert gen_tuple_count(n, r, "enumeration") == f


def test_gen_tuple_inclusion_exclusion_large_n():
    for n in range(1, 9):
        for r in range(3, 7):
            assert gen_tuple_count_inclusion_exclusion(n, r) == gen_tuple_count_formula(n, r)


def test_orbit_count_examples():
    assert conjugation_orbit_count(2, 3) == 1
    assert conjugation_orbit_count(2, 4) == 6
    assert conjugation_orbit_count(3, 3) == 14
    # frozen enumeration results
    assert conjugation_orbit_count(3, 4) == 168
    assert conjugation_orbit_count(2, 5) == 12


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3), (2, 4), (3, 4), (2, 5), (2, 6)])
def test_orbits_are_free(n, r):
    census = conjugation_orbit_census(n, r)
    assert set(census.orbit_sizes) == {normalizer_order(r) // 2}
    assert census.orbits == orbit_count_formula(n, r)


def test_normalizer_orders():
    assert normalizer_order(3) == 48
    assert normalizer_order(4) == 32
    assert len(normalizer_permutations(3)) == 48
    assert len(set(normalizer_permutations(3))) == 24
    assert len(set(normalizer_permutations(4))) == 16


def test_octahedral_action_is_full_automorphism_group():
    assert set(normalizer_permutations(3)) == q8_automorphisms_abstract()
    assert len(q8_automorphisms_abstract()) == 24


def test_dihedral_normalizer_acts_on_klein_group_as_s3():
    perms = set(dihedral_normalizer_permutations(2))
    g = GroupId.dihedral(2)
    inv = [g.index(a) for a in g.elements() if a != E(0, 0)]
    restricted = {tuple(p[i] for i in inv) for p in perms}
    assert len(restricted) == 6


def test_su2_component_examples():
    assert su2_component_count(2, 2).total_nonabelian == 1
    rep = su2_component_count(2, 3, "both")
    assert rep.total_nonabelian == 7 and rep.per_r == {2: 1, 3: 6} and rep.agree
    assert su2_component_count(3, 2, "enumeration").total_nonabelian == 14
    assert su2_component_count(3, 3, "both").total_nonabelian == 182


def test_su2_report_json():
    js = su2_component_count(2, 3).to_json()
    assert js == {"n": 2, "q": 3, "abelian": 1, "nonabelian": 7,
                  "per_r": {"2": 1, "3": 6}, "method": "formula"}


def test_closed_forms_match_orbit_sums():
    for n in range(1, 10):
        for q in range(2, 8):
            total = sum(orbit_count_formula(n, r + 1) for r in range(2, q + 1))
            assert total == components_formula(n, q)


def test_so3_examples():
    assert so3_formulas(2, 2) == (1, 0)
    assert so3_formulas(2, 3)[1] == 3
    assert so3_formulas(3, 2)[0] == 7
    rep = so3_component_count(3, 3, "both")
    assert rep.agree and (rep.M, rep.Mq) == (7, 42)
    assert rep.dihedral == (7, 42) and rep.notes


def test_covering_division_rejects_non_integers():
    assert covering_division(3, 14, 168) == (7, 42)
    with pytest.raises(VerificationError):
        covering_division(3, 13, 168)


def test_u2_examples():
    rep = u2_component_count(2, 2, "both")
    assert (rep.abelian, rep.M, rep.Mq) == (1, 1, 0) and rep.agree
    rep = u2_component_count(2, 3, "both")
    assert (rep.abelian, rep.M, rep.Mq) == (1, 1, 3) and rep.agree
    assert (lambda r: (r.abelian, r.M, r.Mq))(u2_component_count(1, 4)) == (1, 0, 0)
    rep = u2_component_count(3, 3, "enumeration")
    assert (rep.M, rep.Mq) == (7, 42)
    assert set(rep.stabilizer_orders[2]) == {4} and set(rep.stabilizer_orders[3]) == {2}


def test_u2_stabilizer_examples():
    q8, q16 = GroupId.quaternion(3), GroupId.quaternion(4)
    assert u2_stabilizer(q8, [E(0, 1), E(1, 0)]).order == 4
    assert u2_stabilizer(q16, [E(0, 1), E(1, 0)]).order == 2
    with pytest.raises(ValueError):
        u2_stabilizer(q8, [E(0, 2), E(0, 1)])


def test_stable_summand_examples():
    assert K_formula(2, 2) == 1
    assert K_formula(1, 2) == 0
    assert N_formula(2) == 1
    rep = stable_summand_counts(2, 2, "su2", "both")
    assert rep.counts == {"RP3_plus": 1} and rep.agree
    assert stable_summand_counts(1, 2, "su2", "enumeration").counts == {"RP3_plus": 0}
    rep = stable_summand_counts(2, 3, "so3", "both")
    assert rep.counts["SU2/Q8_plus"] == 1 and rep.agree
    with pytest.raises(ValueError):
        stable_summand_counts(2, 2, "u2")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("q", [2, 3])
def test_summands_formula_vs_enumeration(k, q):
    assert stable_summand_counts(k, q, "su2", "both").agree
    assert stable_summand_counts(k, q, "so3", "both").agree


def test_formula_values_are_integers_widely():
    for k in range(1, 12):
        for q in range(2, 8):
            assert K_formula(k, q) >= 0 and Nq_formula(k, q) >= 0
            m, mq = so3_formulas(max(k, 2), q)
            assert m >= 0 and mq >= 0


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("q", [2, 3])
def test_partition_identity(n, q):
    assert partition_identity(n, q).holds


@pytest.mark.parametrize("method", ["enumeration", "both"])
def test_worker_count_does_not_change_results(method):
    one = su2_component_count(3, 3, method, workers=1)
    many = su2_component_count(3, 3, method, workers=3)
    assert one.to_json() == many.to_json()
    assert conjugation_orbit_census(3, 4, workers=2).orbits == 168


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.integers(2, 30))
def test_component_formula_is_sum_of_integer_terms(n, q):
    terms = [orbit_count_formula(n, r + 1) for r in range(2, q + 1)]
    assert all(isinstance(t, Fraction) and t.denominator == 1 for t in terms)
    assert sum(terms) == components_formula(n, q)


def test_bad_arguments():
    with pytest.raises(ValueError):
        su2_component_count(0, 2)
    with pytest.raises(ValueError):
        so3_component_count(1, 2)
    with pytest.raises(ValueError):
        su2_component_count(2, 3, "guess")
