"""Degree-by-degree linear algebra over F2, with no Groebner bases involved.

``(P/I)_d`` is computed as ``P_d`` modulo the span of ``m * g`` for
generators ``g`` and monomials ``m`` of complementary degree.  Vectors are
Python ints used as bitsets over the monomials of one degree.  Only
weighted-homogeneous generators are supported.
"""
from __future__ import annotations

from functools import cache

from .ring import BinaryPoly, GradedRing, Monomial


@cache
def monomials_of_degree(ring: GradedRing, d: int) -> tuple[Monomial, ...]:
    if any(x <= 0 for x in ring.degrees):
        raise ValueError("oracle needs positive variable degrees")
    out = []

    def rec(i, left, acc):
        if i == ring.nvars:
            if left == 0:
                out.append(tuple(acc))
            return
        w = ring.degrees[i]
        for e in range(left // w + 1):
            acc.append(e)
            rec(i + 1, left - e * w, acc)
            acc.pop()

    if d >= 0:
        rec(0, d, [])
    return tuple(sorted(out))


class _Echelon:
    """Row space with rows keyed by their highest set bit."""

    def __init__(self):
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        rest = 0
        while v:
            p = v.bit_length() - 1
            row = self.rows.get(p)
            if row is None:
                rest |= 1 << p
                v ^= 1 << p
            else:
                v ^= row
        return rest

    def insert(self, v: int) -> bool:
        while v:
            p = v.bit_length() - 1
            row = self.rows.get(p)
            if row is None:
                self.rows[p] = v
                return True
            v ^= row
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


class QuotientOracle:
    """Graded pieces of ``ring / (gens)`` by brute-force linear algebra."""

    def __init__(self, ring: GradedRing, gens):
        self.ring = ring
        self.gens = [g for g in gens if g]
        for g in self.gens:
            if g.ring != ring or not g.is_homogeneous():
                raise ValueError(f"oracle needs homogeneous generators in the ring; got {g}")
        self._ech: dict[int, _Echelon] = {}

    def _index(self, d: int) -> dict[Monomial, int]:
        return _index_of(self.ring, d)

    def vector(self, p: BinaryPoly, d: int) -> int:
        idx = self._index(d)
        v = 0
        for m in p.terms:
            if self.ring.mono_degree(m) != d:
                raise ValueError(f"{p} is not homogeneous of degree {d}")
            v ^= 1 << idx[m]
        return v

    def ideal_part(self, d: int) -> _Echelon:
        if d not in self._ech:
            ech = _Echelon()
            for g in self.gens:
                gd = g.degree()
                for m in monomials_of_degree(self.ring, d - gd):
                    ech.insert(self.vector(g.mul_monomial(m), d))
            self._ech[d] = ech
        return self._ech[d]

    def dim(self, d: int) -> int:
        return len(monomials_of_degree(self.ring, d)) - self.ideal_part(d).rank

    def dims(self, max_degree: int) -> list[int]:
        return [self.dim(d) for d in range(max_degree + 1)]

    def standard_basis(self, d: int) -> list[Monomial]:
        piv = self.ideal_part(d).rows
        return [m for i, m in enumerate(monomials_of_degree(self.ring, d)) if i not in piv]

    def contains(self, p: BinaryPoly) -> bool:
        by_deg: dict[int, set] = {}
        for m in p.terms:
            by_deg.setdefault(self.ring.mono_degree(m), set()).add(m)
        return all(
            self.ideal_part(d).reduce(self.vector(BinaryPoly(self.ring, frozenset(ms)), d)) == 0
            for d, ms in by_deg.items())

    def multiplication_rank(self, f: BinaryPoly, d: int) -> int:
        """Rank of ``x -> f x`` from ``(P/I)_d`` to ``(P/I)_(d + deg f)``."""
        if not f.is_homogeneous():
            raise ValueError("multiplier must be homogeneous")
        if f.is_zero():
            return 0
        target = d + f.degree()
        ideal = self.ideal_part(target)
        image = _Echelon()
        for m in self.standard_basis(d):
            image.insert(ideal.reduce(self.vector(f.mul_monomial(m), target)))
        return image.rank

    def annihilator_dim(self, f: BinaryPoly, d: int) -> int:
        return self.dim(d) - self.multiplication_rank(f, d)

    def annihilator_dims(self, f: BinaryPoly, max_degree: int) -> list[int]:
        return [self.annihilator_dim(f, d) for d in range(max_degree + 1)]

    def cokernel_dim(self, f: BinaryPoly, d: int) -> int:
        """``dim (P/I)_d - rank(f * : (P/I)_(d - deg f) -> (P/I)_d)``."""
        src = d - f.degree()
        return self.dim(d) - (self.multiplication_rank(f, src) if src >= 0 else 0)


@cache
def _index_of(ring: GradedRing, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(ring, d))}


def ideal_part_dims(ring: GradedRing, base_gens, extra_gens, max_degree: int) -> list[int]:
    """``dim ((I + J) / I)_d``: the size of the ideal ``J`` inside ``P/I``."""
    a = QuotientOracle(ring, base_gens)
    b = QuotientOracle(ring, list(base_gens) + list(extra_gens))
    return [a.dim(d) - b.dim(d) for d in range(max_degree + 1)]
