"""Acceptance checks, shared by the CLI and the test-suite.

Each ``criterion_N`` returns a ``Verdict``; a check that raises is reported
as a failure with the exception text rather than propagated.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from . import hom_count as hc
from .f2_groebner import (ORDERS, QuotientOracle, colon_ideal, groebner_basis, hilbert_function,
                          ideal_equal, ideal_part_dims, normal_form)
from .quat_group import GroupId
from .spectral import (b3q16_extension_datum, bcom_extension_datum, bcom_hilbert_expected,
                       bcom_presentation, direct_page_dims, e4_page, page_poincare_series)
from .su2_exact import (OCTA_GEN, binary_octahedral, circle_conjugate, embed_quaternion_group,
                        normalizes, quaternion_group_set)
from .subgroups import generated_subgroup, nil_poset_report


@dataclass
class Verdict:
    criterion: int | str
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0
    time_limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.time_limit:g}s)" if self.time_limit else ""
        return f"[{status}] criterion {self.criterion}: {self.name} in {self.seconds:.2f}s{limit}"

    def to_json(self) -> dict:
        return {"criterion": str(self.criterion), "name": self.name, "passed": self.passed,
                "details": list(self.details), "seconds": round(self.seconds, 3),
                "time_limit": self.time_limit}


class _Check:
    def __init__(self):
        self.failures: list[str] = []
        self.notes: list[str] = []

    def expect(self, cond: bool, message: str):
        if not cond:
            self.failures.append(message)

    def equal(self, got, want, what: str):
        self.expect(got == want, f"{what}: got {got}, expected {want}")


def _run(criterion, name: str, body, time_limit: float | None = None) -> Verdict:
    chk = _Check()
    t0 = time.perf_counter()
    try:
        body(chk)
    except Exception as exc:  # reported, not raised: the verdict is the product
        chk.failures.append(f"{type(exc).__name__}: {exc}")
    dt = time.perf_counter() - t0
    if time_limit is not None and dt > time_limit:
        chk.failures.append(f"took {dt:.2f}s, limit {time_limit:g}s")
    return Verdict(criterion, name, not chk.failures, chk.failures or chk.notes, dt, time_limit)


# -- criteria --------------------------------------------------------------------------------

def criterion_1(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for n, q in product((1, 2, 3), (2, 3, 4)):
            rep = hc.su2_component_count(n, q, hc.Method.BOTH, workers)
            c.expect(rep.agree is True, f"C({n},{q + 1}): enumeration {rep.per_r} disagrees with formula")
            c.equal(rep.total_nonabelian, hc.components_formula(n, q), f"C({n},{q + 1})")
        c.equal(hc.components_formula(2, 2), 1, "C(2,3)")
        c.equal(hc.components_formula(2, 3), 7, "C(2,4)")
        c.equal(hc.components_formula(3, 2), 14, "C(3,3)")
    return _run(1, "SU(2) component counts: formula = orbit enumeration", body, 60.0)


def criterion_2(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for n, r in product((1, 2, 3), (3, 4, 5)):
            f = hc.gen_tuple_count_formula(n, r)
            c.equal(hc.gen_tuple_count_inclusion_exclusion(n, r), f, f"inclusion-exclusion Gen({n},Q2^{r})")
            c.equal(hc.gen_tuple_count_enumeration(n, r, workers), f, f"enumerated Gen({n},Q2^{r})")
        c.equal(hc.gen_tuple_count(2, 3), 24, "Gen(2,Q8)")
        c.equal(hc.gen_tuple_count(2, 4), 96, "Gen(2,Q16)")
    return _run(2, "generating-tuple counts: closed form = closure enumeration", body)


def criterion_3(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for n, r in product((1, 2, 3), (3, 4, 5)):
            census = hc.orbit_census(GroupId.quaternion(r), n, hc.normalizer_permutations(r), workers=workers)
            want = hc.normalizer_order(r) // 2
            bad = sum(v for s, v in census.orbit_sizes.items() if s != want)
            c.equal(bad, 0, f"orbits of wrong size on Gen({n},Q2^{r})")
            c.equal(census.orbits * want, census.tuples, f"orbit count x {want} for Gen({n},Q2^{r})")
        c.equal(set(hc.normalizer_permutations(3)), hc.q8_automorphisms_abstract(),
                "binary octahedral action on Q8 vs abstract Aut(Q8)")
    return _run(3, "freeness of the normalizer action on generating tuples", body)


def criterion_4(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for n, q in product((2, 3, 4), (2, 3, 4)):
            m, mq = hc.so3_formulas(n, q)
            cov = hc.covering_division(n, hc.components_formula(n, 2),
                                       hc.components_formula(n, q) - hc.components_formula(n, 2))
            c.equal(cov, (m, mq), f"covering division of C({n},{q + 1})")
        # (4, 4) would enumerate 2^20 tuples; its counts are covered by the division check above
        for n, q in [(n, q) for n in (2, 3, 4) for q in (2, 3, 4) if (n, q) != (4, 4)]:
            rep = hc.so3_component_count(n, q, hc.Method.BOTH, workers)
            c.expect(rep.agree is True, f"SO(3) n={n} q={q}: {rep.to_json()}")
            u2 = hc.u2_component_count(n, q, hc.Method.BOTH, workers)
            c.expect(u2.agree is True, f"U(2) n={n} q={q}: {u2.to_json()}")
        checked = 0
        for n, q in product((1, 2, 3), (2, 3)):
            g = GroupId.quaternion(q + 1)
            els = g.elements()
            for tup in product(els, repeat=n):
                sub = generated_subgroup(g, tup)
                if sub.is_abelian():
                    continue
                order = hc.u2_stabilizer(g, tup).order
                want = 4 if sub.order == 8 else 2
                checked += 1
                if order != want:
                    c.failures.append(f"stabilizer of {[str(a) for a in tup]} has order {order}, want {want}")
                    break
        c.notes.append(f"stabilizers verified on all {checked} non-commuting tuples for n <= 3, q <= 3")
    return _run(4, "SO(3)/U(2) counts and U(2) stabilizers", body)


def criterion_5(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for k, q in product((1, 2, 3), (2, 3, 4)):
            for target in ("SU2", "SO3"):
                rep = hc.stable_summand_counts(k, q, target, hc.Method.BOTH, workers)
                c.expect(rep.agree is True, f"{target} summands k={k} q={q}: {rep.to_json()}")
        c.equal(hc.K_formula(1, 2), 0, "K(1,3)")
        c.equal(hc.N_formula(1), 0, "N(1)")
    return _run(5, "stable summand counts: formula = identity-free enumeration", body)


def _torus_normalizes(m: int) -> bool:
    small, big = GroupId.quaternion(m), GroupId.quaternion(m + 1)
    sub = {embed_quaternion_group(small, a) for a in small.elements()}
    return all(circle_conjugate(x, embed_quaternion_group(big, y)) in sub
               for y in big.elements() for x in sub)


def criterion_6(workers: int = 1) -> Verdict:
    def body(c: _Check):
        bo = binary_octahedral()
        c.equal(len(bo), 48, "|binary octahedral|")
        c.expect(all(a * b in bo for a in bo for b in bo), "binary octahedral set not closed")
        q8 = quaternion_group_set(GroupId.quaternion(3))
        q16 = quaternion_group_set(GroupId.quaternion(4))
        c.expect(all(normalizes(g, q8) for g in bo), "some element fails to normalize Q8")
        c.expect(not normalizes(OCTA_GEN, q16), "the extra generator normalizes Q16")
        for m in (3, 4, 5):
            c.expect(_torus_normalizes(m), f"Q2^{m + 1} does not normalize Q2^{m}")
    return _run(6, "binary octahedral normalizer checks", body)


def appendix_checks(order: str = "wdegrevlex") -> list[tuple[str, bool, str]]:
    ext = b3q16_extension_datum()
    R, I = ext.ring, ext.ideal
    out = []
    ann = colon_ideal(R, I, ext.k, order)
    out.append(("colon(I, k) = 0", ann.is_zero(), str([str(g) for g in ann.generators])))
    Ik = I.with_generators(ext.k)
    ann2 = colon_ideal(R, Ik, ext.sq1_k, order)
    gb_k = groebner_basis(R, Ik, order)
    y3 = R.var("y3")
    forward = normal_form(y3 * ext.sq1_k, gb_k).is_zero()
    backward = all(normal_form(g, groebner_basis(R, Ik.with_generators(y3), order)).is_zero()
                   for g in ann2.generators)
    same = ideal_equal(R, Ik + ann2, Ik.with_generators(y3), order)
    out.append(("colon(I + (k), sq1k) = (y3)", forward and backward and same,
                str([str(g) for g in ann2.generators])))
    nf = normal_form(ext.d5, gb_k)
    out.append(("reduce(d5, I + (k)) = 0", nf.is_zero(), str(nf)))
    return out


def criterion_7(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for order in ORDERS:
            for name, ok, detail in appendix_checks(order):
                c.expect(ok, f"{order}: {name} failed ({detail})")
                c.notes.append(f"{order}: {name}: {detail}")
    return _run(7, "appendix colon ideals and d5 reduction", body, 5.0)


def criterion_8(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for n in (3, 4, 5, 6):
            R, I = bcom_presentation(n)
            c.equal(hilbert_function(R, I, 12).to_list(), bcom_hilbert_expected(n, 12), f"Hilbert function n={n}")
    return _run(8, "Hilbert functions of the Bcom presentations", body)


def criterion_9(workers: int = 1) -> Verdict:
    def body(c: _Check):
        for q in (2, 3, 4, 5):
            g = GroupId.quaternion(q + 1)
            for r in range(2, q + 1):
                rep = nil_poset_report(g, r)
                c.expect(rep.tree, f"P_{r}({g}) is not a tree")
                c.equal(len(rep.maximals), 1 + 2 ** (q + 1 - r), f"maximals of P_{r}({g})")
                inters = {h.order for h in rep.intersections}
                c.equal(inters, {2 ** (r - 1)}, f"intersection orders in P_{r}({g})")
                pair_orders = {len(a.elements & b.elements) for i, a in enumerate(rep.maximals)
                               for b in rep.maximals[i + 1:]}
                c.equal(pair_orders, {2 ** (r - 1)}, f"pairwise intersections in P_{r}({g})")
        amalgam = nil_poset_report(GroupId.quaternion(4), 3).amalgam
        c.equal(amalgam, "Q₈ ∗_{μ₄} Q₈ ∗_{μ₄} μ₈", "amalgam of P_3(Q16)")
    return _run(9, "nilpotent subgroup posets are trees", body)


def _oracle_agreement(c: _Check, label: str, ext, max_degree: int):
    R, I = ext.ring, ext.ideal
    oa = QuotientOracle(R, I.generators)
    c.equal(hilbert_function(R, I, max_degree).to_list(), oa.dims(max_degree), f"{label}: Hilbert A")
    Ik = I.with_generators(ext.k)
    ok = QuotientOracle(R, Ik.generators)
    c.equal(hilbert_function(R, Ik, max_degree).to_list(), ok.dims(max_degree), f"{label}: Hilbert A/(k)")
    ann = colon_ideal(R, I, ext.k)
    c.equal(ideal_part_dims(R, I.generators, ann.generators, max_degree),
            oa.annihilator_dims(ext.k, max_degree), f"{label}: ann_A(k)")
    if ext.sq1_k:
        ann2 = colon_ideal(R, Ik, ext.sq1_k)
        c.equal(ideal_part_dims(R, Ik.generators, ann2.generators, max_degree),
                ok.annihilator_dims(ext.sq1_k, max_degree), f"{label}: ann_A/(k)(sq1k)")
        Iks = Ik.with_generators(ext.sq1_k)
        c.equal(hilbert_function(R, Iks, max_degree).to_list(),
                QuotientOracle(R, Iks.generators).dims(max_degree), f"{label}: Hilbert A/(k, sq1k)")


def criterion_10(workers: int = 1) -> Verdict:
    def body(c: _Check):
        _oracle_agreement(c, "Bcom Q16 datum", bcom_extension_datum(4), 8)
        b = b3q16_extension_datum()
        _oracle_agreement(c, "B(3,Q16) datum", b, 8)
        e4 = e4_page(b, 10)
        c.equal(page_poincare_series(e4, 10).to_list(), direct_page_dims(b, 4, 10), "E4 of B(3,Q16)")
    return _run(10, "Groebner results agree with linear-algebra oracles", body)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def run_criteria(which=None, workers: int = 1) -> list[Verdict]:
    return [CRITERIA[i](workers) for i in (which or sorted(CRITERIA))]


def verify_appendix() -> list[Verdict]:
    out = []
    for name, ok, detail in appendix_checks():
        out.append(Verdict("appendix", name, ok, [detail]))
    return out
