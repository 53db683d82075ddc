"""Generalized quaternion, cyclic and dihedral 2-groups with exact arithmetic.

Every element is stored as ``w**eps * xi**k`` where ``xi`` generates the
torus part.  For ``Q2^m`` the torus part is ``mu_{2^(m-1)}`` and
``w**2 = -I = xi**(2^(m-2))``; for ``D2^m`` (the quotient of ``Q2^(m+1)`` by
``{+-I}``) we have ``w**2 = 1``; ``C2^m`` has no ``w`` at all.

The pair ``(eps, k)`` is canonical, so equality of elements is equality of
fields.  Elements also have a dense integer index ``eps * h + k`` (``h`` the
torus order) which the enumeration code uses with precomputed tables.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cache


class Family(enum.Enum):
    QUATERNION = "Q"
    CYCLIC = "C"
    DIHEDRAL = "D"


@dataclass(frozen=True, order=True)
class QuatElem:
    eps: int
    k: int

    def __str__(self):
        return f"{self.eps}:{self.k}"

    @classmethod
    def parse(cls, text: str) -> "QuatElem":
        m = re.fullmatch(r"\s*([01])\s*:\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"malformed element {text!r}; expected 'e:k'")
        return cls(int(m.group(1)), int(m.group(2)))


IDENTITY = QuatElem(0, 0)


@dataclass(frozen=True)
class GroupId:
    family: Family
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.family is Family.QUATERNION and self.m < 3:
            raise ValueError("quaternion groups need m >= 3")

    @classmethod
    def quaternion(cls, m: int) -> "GroupId":
        return cls(Family.QUATERNION, m)

    @classmethod
    def cyclic(cls, m: int) -> "GroupId":
        return cls(Family.CYCLIC, m)

    @classmethod
    def dihedral(cls, m: int) -> "GroupId":
        return cls(Family.DIHEDRAL, m)

    @classmethod
    def parse(cls, text: str) -> "GroupId":
        m = re.fullmatch(r"\s*([QCD])2\^(\d+)\s*", text)
        if m is None:
            raise ValueError(f"malformed group id {text!r}; expected Q2^m, C2^m or D2^m")
        return cls(Family(m.group(1)), int(m.group(2)))

    def __str__(self):
        return f"{self.family.value}2^{self.m}"

    @property
    def order(self) -> int:
        return 2**self.m

    @property
    def torus_order(self) -> int:
        """Modulus of the ``k`` field."""
        if self.family is Family.CYCLIC:
            return 2**self.m
        return 2 ** (self.m - 1)

    @property
    def has_w(self) -> bool:
        return self.family is not Family.CYCLIC

    @property
    def minus_one(self) -> QuatElem:
        """The central element ``-I``; only meaningful for quaternion groups."""
        if self.family is not Family.QUATERNION:
            raise ValueError(f"{self} has no distinguished -I")
        return QuatElem(0, 2 ** (self.m - 2))

    def validate(self, a: QuatElem) -> None:
        if a.eps not in (0, 1) or (a.eps == 1 and not self.has_w):
            raise ValueError(f"{a} is not an element of {self}")
        if not 0 <= a.k < self.torus_order:
            raise ValueError(f"{a} is not an element of {self}")

    def elements(self) -> list[QuatElem]:
        """All elements in lexicographic ``(eps, k)`` order."""
        h = self.torus_order
        eps_range = (0, 1) if self.has_w else (0,)
        return [QuatElem(e, k) for e in eps_range for k in range(h)]

    def index(self, a: QuatElem) -> int:
        return a.eps * self.torus_order + a.k

    def element(self, i: int) -> QuatElem:
        h = self.torus_order
        return QuatElem(i // h, i % h)


def _w_square_shift(g: GroupId) -> int:
    if g.family is Family.QUATERNION:
        return 2 ** (g.m - 2)
    return 0


def element_product(g: GroupId, a: QuatElem, b: QuatElem) -> QuatElem:
    """Product using ``w xi^k = xi^-k w`` and the family's value of ``w**2``."""
    g.validate(a)
    g.validate(b)
    h = g.torus_order
    if b.eps == 0:
        return QuatElem(a.eps, (a.k + b.k) % h)
    # w^e1 xi^k1 w xi^k2 = w^(e1+1) xi^(k2-k1)
    if a.eps == 0:
        return QuatElem(1, (b.k - a.k) % h)
    return QuatElem(0, (b.k - a.k + _w_square_shift(g)) % h)


def element_inverse(g: GroupId, a: QuatElem) -> QuatElem:
    g.validate(a)
    h = g.torus_order
    if a.eps == 0:
        return QuatElem(0, (-a.k) % h)
    # (w xi^k)^2 = w^2, so the inverse is w^-2 * w xi^k
    return QuatElem(1, (a.k + _w_square_shift(g)) % h)


def commutator(g: GroupId, a: QuatElem, b: QuatElem) -> QuatElem:
    """``a b a^-1 b^-1``."""
    ab = element_product(g, a, b)
    return element_product(g, element_product(g, ab, element_inverse(g, a)), element_inverse(g, b))


def conjugate(g: GroupId, x: QuatElem, by: QuatElem) -> QuatElem:
    """``by * x * by^-1``."""
    return element_product(g, element_product(g, by, x), element_inverse(g, by))


def element_order(g: GroupId, a: QuatElem) -> int:
    n, p = 1, a
    while p != IDENTITY:
        p = element_product(g, p, a)
        n += 1
    return n


def project_to_dihedral(g: GroupId, a: QuatElem) -> QuatElem:
    """Image of ``a`` under ``Q2^m -> Q2^m / {+-I} = D2^(m-1)``."""
    if g.family is not Family.QUATERNION:
        raise ValueError("projection is defined on quaternion groups only")
    g.validate(a)
    return QuatElem(a.eps, a.k % 2 ** (g.m - 2))


def dihedral_quotient(g: GroupId) -> GroupId:
    return GroupId.dihedral(g.m - 1)


def embed(small: GroupId, big: GroupId, a: QuatElem) -> QuatElem:
    """Standard inclusion ``Q2^m -> Q2^m'`` (or ``C2^m -> C2^m'``), ``xi -> xi^(2^(m'-m))``."""
    if small.family is not big.family or big.m < small.m:
        raise ValueError(f"no standard inclusion {small} -> {big}")
    small.validate(a)
    return QuatElem(a.eps, a.k * (big.torus_order // small.torus_order))


# -- dense tables used by the enumerators --------------------------------------

@cache
def mul_table(g: GroupId) -> tuple[tuple[int, ...], ...]:
    els = g.elements()
    return tuple(tuple(g.index(element_product(g, a, b)) for b in els) for a in els)


@cache
def inv_table(g: GroupId) -> tuple[int, ...]:
    return tuple(g.index(element_inverse(g, a)) for a in g.elements())


def format_elements(els) -> list[str]:
    return [str(e) for e in sorted(els)]
