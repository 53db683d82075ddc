"""Exact arithmetic inside SU(2).

Two carriers are used:

* ``CircleElem`` for the torus normalizer ``T u wT``: a ``w`` flag and a
  rational angle, ``w**flag * diag(e^{2 pi i theta}, e^{-2 pi i theta})``.
* ``ExtQuaternion`` for unit quaternions with coordinates in ``Q(sqrt 2)``,
  which is enough for the binary octahedral group.

Matrices are identified with quaternions through
``[[alpha, beta], [-conj(beta), conj(alpha)]] <-> alpha + beta*j``, so
``xi_4 <-> i`` and ``w <-> -j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .quat_group import Family, GroupId, QuatElem

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CircleElem:
    wflag: int
    theta: Fraction

    def __post_init__(self):
        if self.wflag not in (0, 1):
            raise ValueError("wflag must be 0 or 1")
        object.__setattr__(self, "theta", Fraction(self.theta) % 1)

    def __str__(self):
        return f"w^{self.wflag} * angle {self.theta.numerator}/{self.theta.denominator}"


CIRCLE_ONE = CircleElem(0, Fraction(0))


def circle_product(a: CircleElem, b: CircleElem) -> CircleElem:
    if b.wflag == 0:
        return CircleElem(a.wflag, a.theta + b.theta)
    # w^e x w y = w^(e+1) conj(x) y, and w^2 = -I has angle 1/2
    theta = b.theta - a.theta
    if a.wflag == 1:
        return CircleElem(0, theta + HALF)
    return CircleElem(1, theta)


def circle_inverse(a: CircleElem) -> CircleElem:
    if a.wflag == 0:
        return CircleElem(0, -a.theta)
    return CircleElem(1, a.theta + HALF)


def circle_commutator(a: CircleElem, b: CircleElem) -> CircleElem:
    return circle_product(circle_product(circle_product(a, b), circle_inverse(a)), circle_inverse(b))


def circle_conjugate(x: CircleElem, by: CircleElem) -> CircleElem:
    """``by * x * by^-1``."""
    return circle_product(circle_product(by, x), circle_inverse(by))


def embed_quaternion_group(g: GroupId, a: QuatElem) -> CircleElem:
    if g.family is not Family.QUATERNION:
        raise ValueError("expected a quaternion group")
    g.validate(a)
    return CircleElem(a.eps, Fraction(a.k, g.torus_order))


def circle_to_quat_elem(g: GroupId, c: CircleElem) -> QuatElem | None:
    """Inverse of ``embed_quaternion_group``; ``None`` if ``c`` lies outside ``g``."""
    k = c.theta * g.torus_order
    if k.denominator != 1:
        return None
    return QuatElem(c.wflag, int(k))


# -- Q(sqrt 2) ----------------------------------------------------------------

@dataclass(frozen=True)
class QSqrt2:
    """``p + q*sqrt(2)`` with rational ``p, q``."""

    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    def __add__(self, other):
        return QSqrt2(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        return QSqrt2(self.p - other.p, self.q - other.q)

    def __neg__(self):
        return QSqrt2(-self.p, -self.q)

    def __mul__(self, other):
        return QSqrt2(self.p * other.p + 2 * self.q * other.q, self.p * other.q + self.q * other.p)

    def __str__(self):
        return f"({self.p},{self.q})"

    def is_zero(self):
        return self.p == 0 and self.q == 0


ZERO = QSqrt2()
ONE = QSqrt2(1)
INV_SQRT2 = QSqrt2(0, HALF)


@dataclass(frozen=True)
class ExtQuaternion:
    a: QSqrt2
    b: QSqrt2
    c: QSqrt2
    d: QSqrt2

    def __mul__(self, o):
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return ExtQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self):
        return ExtQuaternion(-self.a, -self.b, -self.c, -self.d)

    def conjugate(self):
        return ExtQuaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> QSqrt2:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self):
        # unit quaternions only
        if self.norm() != ONE:
            raise ValueError("inverse is only implemented for unit quaternions")
        return self.conjugate()

    def __str__(self):
        return " ".join(str(x) for x in (self.a, self.b, self.c, self.d))


def _q(a, b=0, c=0, d=0) -> ExtQuaternion:
    wrap = lambda x: x if isinstance(x, QSqrt2) else QSqrt2(x)
    return ExtQuaternion(wrap(a), wrap(b), wrap(c), wrap(d))


Q_ONE = _q(1)
Q_I = _q(0, 1)
Q_J = _q(0, 0, 1)
Q_K = _q(0, 0, 0, 1)

# the three generators of the binary octahedral group, in quaternion form
XI8 = _q(INV_SQRT2, INV_SQRT2)
W = _q(0, 0, -1)
# 1/2 [[1+i, -1+i], [1+i, 1-i]] = 1/2 (1 + i) + 1/2 (-1 + i) j
OCTA_GEN = _q(HALF, HALF, -HALF, HALF)


# exact cos/sin of 2 pi t for t with denominator dividing 8
_HALF_SQRT2 = QSqrt2(0, HALF)
_COS8 = [ONE, _HALF_SQRT2, ZERO, -_HALF_SQRT2, -ONE, -_HALF_SQRT2, ZERO, _HALF_SQRT2]


def _cos_sin(theta: Fraction) -> tuple[QSqrt2, QSqrt2]:
    t = theta * 8
    if t.denominator != 1:
        raise ValueError(f"angle {theta} is not a multiple of 1/8; not representable over Q(sqrt 2)")
    t = int(t) % 8
    return _COS8[t], _COS8[(t - 2) % 8]


def circle_to_quaternion(c: CircleElem) -> ExtQuaternion:
    cos, sin = _cos_sin(c.theta)
    x = ExtQuaternion(cos, sin, ZERO, ZERO)
    return W * x if c.wflag else x


def quat_elem_to_quaternion(g: GroupId, a: QuatElem) -> ExtQuaternion:
    """Exact quaternion of an element of ``Q8`` or ``Q16``."""
    return circle_to_quaternion(embed_quaternion_group(g, a))


def close_under_product(gens: Iterable[ExtQuaternion], limit: int = 10_000) -> frozenset[ExtQuaternion]:
    gens = list(gens)
    seen = {Q_ONE}
    frontier = [Q_ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise RuntimeError("closure did not terminate; arithmetic bug")
        frontier = nxt
    return frozenset(seen)


def binary_octahedral() -> frozenset[ExtQuaternion]:
    group = close_under_product([XI8, W, OCTA_GEN], limit=48)
    if len(group) != 48:
        raise RuntimeError(f"binary octahedral closure produced {len(group)} elements")
    return group


def quaternion_group_set(g: GroupId) -> frozenset[ExtQuaternion]:
    return frozenset(quat_elem_to_quaternion(g, a) for a in g.elements())


def normalizes(g: ExtQuaternion, sub) -> bool:
    ginv = g.inverse()
    return all(g * s * ginv in sub for s in sub)
