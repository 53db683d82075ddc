"""Buchberger's algorithm over F2 with reduced output.

S-pairs are processed in order of (weighted degree of the lcm, pair index),
so runs are reproducible.  Pairs are discarded by the product criterion and
by Buchberger's chain criterion.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import (BinaryPoly, GradedRing, Monomial, divides, mono_div, mono_lcm, mono_mul,
                   order_key)


@dataclass(frozen=True)
class IdealBasis:
    ring: GradedRing
    generators: tuple[BinaryPoly, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")

    @classmethod
    def of(cls, ring: GradedRing, gens: Iterable[BinaryPoly]) -> "IdealBasis":
        return cls(ring, tuple(gens))

    def __add__(self, other: "IdealBasis") -> "IdealBasis":
        return IdealBasis(self.ring, self.generators + tuple(other.generators))

    def with_generators(self, *gens: BinaryPoly) -> "IdealBasis":
        return IdealBasis(self.ring, self.generators + gens)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: GradedRing
    order: str
    generators: tuple[BinaryPoly, ...]  # sorted by leading monomial, increasing
    reduced: bool = True

    def leads(self) -> list[Monomial]:
        return [g.lead(self.order) for g in self.generators]

    def as_ideal(self) -> IdealBasis:
        return IdealBasis(self.ring, self.generators)

    def is_unit(self) -> bool:
        zero = (0,) * self.ring.nvars
        return any(lt == zero for lt in self.leads())

    def contains(self, p: BinaryPoly) -> bool:
        return normal_form(p, self).is_zero()


# -- reduction on raw term sets -------------------------------------------------------

def _support(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _reduce(terms, basis: Sequence[tuple[Monomial, int, frozenset]], key) -> set:
    """Normal form of ``terms`` against ``(lead, lead support, terms)`` triples."""
    rest: set = set()
    p = set(terms)
    while p:
        m = max(p, key=key)
        ms = _support(m)
        for lt, lts, g in basis:
            if not lts & ~ms and divides(lt, m):
                c = mono_div(m, lt)
                p ^= {mono_mul(t, c) for t in g}
                break
        else:
            p.discard(m)
            rest.add(m)
    return rest


def normal_form(p: BinaryPoly, gb: GroebnerBasis) -> BinaryPoly:
    """Full reduction: no term of the result is divisible by a leading term of ``gb``."""
    if p.ring != gb.ring:
        raise ValueError("polynomial and basis live in different rings")
    key = order_key(gb.ring, gb.order)
    basis = [(lt, _support(lt), g.terms) for lt, g in zip(gb.leads(), gb.generators)]
    return BinaryPoly(p.ring, frozenset(_reduce(p.terms, basis, key)))


# -- Buchberger ---------------------------------------------------------------------------

def _buchberger(ring: GradedRing, polys: Iterable[frozenset], order: str) -> list[tuple[Monomial, int, frozenset]]:
    key = order_key(ring, order)
    G: list[tuple[Monomial, int, frozenset]] = []
    heap: list[tuple[int, int, int]] = []
    pending: set[tuple[int, int]] = set()

    def add(terms: set):
        lt = max(terms, key=key)
        j = len(G)
        G.append((lt, _support(lt), frozenset(terms)))
        for i in range(j):
            lcm = mono_lcm(G[i][0], lt)
            heapq.heappush(heap, (ring.mono_degree(lcm), i, j))
            pending.add((i, j))

    def chain(i: int, j: int, lcm: Monomial) -> bool:
        ls = _support(lcm)
        for k, (ltk, sk, _) in enumerate(G):
            if k == i or k == j or sk & ~ls:
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            if divides(ltk, lcm):
                return True
        return False

    for terms in polys:
        r = _reduce(terms, G, key)
        if r:
            add(r)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lti, si, gi = G[i]
        ltj, sj, gj = G[j]
        if not si & sj:
            continue  # coprime leading terms
        lcm = mono_lcm(lti, ltj)
        if chain(i, j, lcm):
            continue
        ci, cj = mono_div(lcm, lti), mono_div(lcm, ltj)
        s = {mono_mul(t, ci) for t in gi} ^ {mono_mul(t, cj) for t in gj}
        r = _reduce(s, G, key)
        if r:
            add(r)
    return G


def _reduced(ring: GradedRing, G: list[tuple[Monomial, int, frozenset]], order: str) -> list[BinaryPoly]:
    key = order_key(ring, order)
    minimal = []
    for idx, (lt, s, g) in enumerate(G):
        if any(divides(lt2, lt) and (lt2 != lt or idx2 < idx)
               for idx2, (lt2, s2, _) in enumerate(G) if idx2 != idx and not s2 & ~s):
            continue
        minimal.append((lt, s, g))
    out = []
    for idx, (lt, s, g) in enumerate(minimal):
        others = [x for k, x in enumerate(minimal) if k != idx]
        out.append(BinaryPoly(ring, frozenset(_reduce(g, others, key))))
    out.sort(key=lambda p: key(p.lead(order)))
    return out


def groebner_basis(ring: GradedRing, ideal: IdealBasis | Iterable[BinaryPoly],
                   order: str = "wdegrevlex") -> GroebnerBasis:
    gens = ideal.generators if isinstance(ideal, IdealBasis) else tuple(ideal)
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator from a different ring")
    G = _buchberger(ring, (g.terms for g in gens if g), order)
    return GroebnerBasis(ring, order, tuple(_reduced(ring, G, order)))


# -- derived operations -----------------------------------------------------------------------

def exact_divide(g: BinaryPoly, f: BinaryPoly, order: str = "wdegrevlex") -> BinaryPoly:
    """``h`` with ``g = h f``; raises if ``f`` does not divide ``g``."""
    key = order_key(g.ring, order)
    lf = f.lead(order)
    q: set = set()
    r = set(g.terms)
    while r:
        m = max(r, key=key)
        if not divides(lf, m):
            raise ArithmeticError(f"{f} does not divide {g}")
        c = mono_div(m, lf)
        q ^= {c}
        r ^= {mono_mul(t, c) for t in f.terms}
    return BinaryPoly(g.ring, frozenset(q))


def _fresh_name(ring: GradedRing) -> str:
    name = "t"
    while name in ring.names:
        name += "_"
    return name


def _lift(ext: GradedRing, p: BinaryPoly, t_exp: int = 0) -> BinaryPoly:
    return BinaryPoly(ext, frozenset((t_exp, *m) for m in p.terms))


def minimalize(ring: GradedRing, base: IdealBasis, candidates: Iterable[BinaryPoly],
               order: str = "wdegrevlex") -> list[BinaryPoly]:
    """Greedy: keep a candidate only if it is not already in ``base + kept``.
    Candidates are tried in increasing (degree, leading monomial)."""
    key = order_key(ring, order)
    cands = sorted((c for c in candidates if c), key=lambda p: (p.degree(), key(p.lead(order))))
    kept: list[BinaryPoly] = []
    current = groebner_basis(ring, base, order)
    for c in cands:
        r = normal_form(c, current)
        if r:
            kept.append(r)
            current = groebner_basis(ring, base.with_generators(*kept), order)
    return kept


def colon_ideal(ring: GradedRing, ideal: IdealBasis, f: BinaryPoly,
                order: str = "wdegrevlex") -> IdealBasis:
    """Generators of ``(I : f)`` reduced modulo ``I``; an empty list means the
    annihilator of ``f`` in ``P/I`` is zero.

    Method: ``I n (f)`` is the ``t``-free part of a Groebner basis of
    ``t I + (1 + t) f`` under an order eliminating ``t`` (``t`` has weight 0);
    each of its elements is divisible by ``f``, and the quotients generate
    ``I : f``.
    """
    if f.is_zero():
        raise ValueError("colon by zero is the whole ring; f must be nonzero")
    ext = ring.extend(_fresh_name(ring), 0)
    t = BinaryPoly(ext, frozenset({(1,) + (0,) * ring.nvars}))
    one = ext.one()
    gens = [t * _lift(ext, g) for g in ideal.generators if g] + [(one + t) * _lift(ext, f)]
    G = groebner_basis(ext, gens, "elim1:" + order)
    inter = [BinaryPoly(ring, frozenset(m[1:] for m in g.terms))
             for g in G.generators if all(m[0] == 0 for m in g.terms)]
    quotients = [exact_divide(h, f, order) for h in inter]
    gbI = groebner_basis(ring, ideal, order)
    reduced = [normal_form(q, gbI) for q in quotients]
    return IdealBasis(ring, tuple(minimalize(ring, ideal, reduced, order)))


@dataclass(frozen=True)
class HilbertFunction:
    dims: tuple[int, ...]

    def __getitem__(self, d):
        return self.dims[d]

    def __len__(self):
        return len(self.dims)

    def to_list(self) -> list[int]:
        return list(self.dims)


def standard_monomial_count(ring: GradedRing, leads: Sequence[Monomial], max_degree: int) -> list[int]:
    """Monomials of each weighted degree ``<= max_degree`` not divisible by any of ``leads``."""
    if any(d <= 0 for d in ring.degrees):
        raise ValueError("Hilbert functions need positive variable degrees")
    dims = [0] * (max_degree + 1)
    n = ring.nvars
    degs = ring.degrees
    stack = [((0,) * n, 0, 0)]
    while stack:
        m, deg, start = stack.pop()
        if any(divides(lt, m) for lt in leads):
            continue
        dims[deg] += 1
        for v in range(start, n):
            nd = deg + degs[v]
            if nd <= max_degree:
                stack.append((m[:v] + (m[v] + 1,) + m[v + 1:], nd, v))
    return dims


def hilbert_function(ring: GradedRing, ideal: IdealBasis | GroebnerBasis, max_degree: int,
                     order: str = "wdegrevlex") -> HilbertFunction:
    """Dimensions of the graded pieces of ``P/I`` up to ``max_degree``.
    ``I`` must be homogeneous for the weights."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    gb = ideal if isinstance(ideal, GroebnerBasis) else groebner_basis(ring, ideal, order)
    for g in gb.generators:
        if not g.is_homogeneous():
            raise ValueError(f"ideal is not homogeneous: {g}")
    return HilbertFunction(tuple(standard_monomial_count(ring, gb.leads(), max_degree)))


def ideal_equal(ring: GradedRing, a: IdealBasis, b: IdealBasis, order: str = "wdegrevlex") -> bool:
    return groebner_basis(ring, a, order).generators == groebner_basis(ring, b, order).generators
