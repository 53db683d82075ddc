"""Weighted polynomial rings over F2 and their elements.

A monomial is a tuple of exponents in the ring's variable order; a
polynomial is the frozenset of its monomials (every coefficient is 1, and
addition is symmetric difference).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Callable, Iterable

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class GradedRing:
    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for n, d in zip(self.names, self.degrees):
            if d < 0:
                raise ValueError(f"variable {n} has negative degree {d}")

    @classmethod
    def of(cls, spec: Iterable[tuple[str, int]]) -> "GradedRing":
        spec = list(spec)
        return cls(tuple(n for n, _ in spec), tuple(d for _, d in spec))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def var(self, name: str) -> "BinaryPoly":
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return BinaryPoly(self, frozenset({tuple(e)}))

    def one(self) -> "BinaryPoly":
        return BinaryPoly(self, frozenset({(0,) * self.nvars}))

    def zero(self) -> "BinaryPoly":
        return BinaryPoly(self, frozenset())

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def header(self) -> str:
        return ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))

    def extend(self, name: str, degree: int, front: bool = True) -> "GradedRing":
        if front:
            return GradedRing((name, *self.names), (degree, *self.degrees))
        return GradedRing((*self.names, name), (*self.degrees, degree))


# -- monomial orders ---------------------------------------------------------------

def _revlex_tail(m: Monomial):
    return tuple(-e for e in reversed(m))


@cache
def order_key(ring: GradedRing, order: str) -> Callable[[Monomial], tuple]:
    """Memoized sort key whose maximum is the leading monomial.

    ``wdegrevlex`` grades by the ring's weights; ``degrevlex`` by plain total
    degree (Singular's ``dp``).  Ties are broken reverse-lexicographically, so
    the last variable is the cheapest.
    """
    if order.startswith("elim1:"):
        # first variable eliminated: compare its exponent before anything else
        base = order_key(GradedRing(ring.names[1:], ring.degrees[1:]), order[len("elim1:"):])
        raw = lambda m: (m[0], base(m[1:]))
    elif order == "wdegrevlex":
        degs = ring.degrees
        raw = lambda m: (sum(e * d for e, d in zip(m, degs)), _revlex_tail(m))
    elif order == "degrevlex":
        raw = lambda m: (sum(m), _revlex_tail(m))
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    memo: dict = {}

    def key(m: Monomial) -> tuple:
        v = memo.get(m)
        if v is None:
            v = memo[m] = raw(m)
        return v

    return key


ORDERS = ("wdegrevlex", "degrevlex")


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


# -- polynomials -------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryPoly:
    ring: GradedRing
    terms: frozenset

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "BinaryPoly"):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "BinaryPoly") -> "BinaryPoly":
        self._check(other)
        return BinaryPoly(self.ring, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPoly") -> "BinaryPoly":
        self._check(other)
        out: set = set()
        for a in self.terms:
            for b in other.terms:
                out ^= {mono_mul(a, b)}
        return BinaryPoly(self.ring, frozenset(out))

    def __pow__(self, e: int) -> "BinaryPoly":
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def mul_monomial(self, m: Monomial) -> "BinaryPoly":
        return BinaryPoly(self.ring, frozenset(mono_mul(t, m) for t in self.terms))

    def degrees(self) -> set[int]:
        return {self.ring.mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Largest weighted degree of a term; ``-1`` for zero."""
        return max(self.degrees(), default=-1)

    def lead(self, order: str = "wdegrevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order_key(self.ring, order))

    def sorted_terms(self, order: str = "wdegrevlex") -> list[Monomial]:
        return sorted(self.terms, key=order_key(self.ring, order), reverse=True)

    def format(self, order: str = "wdegrevlex") -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(self.ring, m) for m in self.sorted_terms(order))

    def __str__(self):
        return self.format()


def format_monomial(ring: GradedRing, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def from_monomials(ring: GradedRing, monos: Iterable[Monomial]) -> BinaryPoly:
    out: set = set()
    for m in monos:
        out ^= {tuple(m)}
    return BinaryPoly(ring, frozenset(out))
