"""Block normalization of nil-2 tuples of monomial unitary matrices.

Indices are 1-based throughout, as are permutations, which are stored in
one-line form: ``perm[j - 1]`` is the image of ``j``.  A monomial unitary
``(perm, phases)`` sends ``e_j`` to ``exp(2 pi i phases[j-1]) e_perm(j)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Perm = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    parts: tuple[frozenset, ...]

    def __post_init__(self):
        seen: set = set()
        for p in self.parts:
            if not p:
                raise ValueError("empty part")
            if seen & p:
                raise ValueError("parts overlap")
            seen |= p
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"parts do not cover 1..{len(seen)}")
        ordered = tuple(sorted((frozenset(p) for p in self.parts), key=min))
        object.__setattr__(self, "parts", ordered)

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> "SetPartition":
        return cls(tuple(frozenset(p) for p in parts))

    @property
    def m(self) -> int:
        return sum(len(p) for p in self.parts)

    def block_of(self, i: int) -> frozenset:
        for p in self.parts:
            if i in p:
                return p
        raise KeyError(i)

    def refines(self, other: "SetPartition") -> bool:
        return all(any(p <= q for q in other.parts) for p in self.parts)

    def to_json(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


def coarsest_partition(d: Sequence) -> SetPartition:
    """Group equal angles (mod 1)."""
    groups: dict[Fraction, list[int]] = {}
    for i, x in enumerate(d, 1):
        groups.setdefault(Fraction(x) % 1, []).append(i)
    return SetPartition.of(groups.values())


def partition_infimum(ps: Sequence[SetPartition]) -> SetPartition:
    if not ps:
        raise ValueError("need at least one partition")
    m = ps[0].m
    if any(p.m != m for p in ps):
        raise ValueError("partitions of different sets")
    blocks: dict[tuple, list[int]] = {}
    for i in range(1, m + 1):
        blocks.setdefault(tuple(p.block_of(i) for p in ps), []).append(i)
    return SetPartition.of(blocks.values())


def permutation_sign(perm: Perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def consecutivizing_permutation(p: SetPartition, require_even: bool = False) -> Perm:
    """``pi`` sending every part onto a run of consecutive integers.

    Parts are laid out by decreasing size, ties broken by smallest element;
    inside a part the original order is kept.  With ``require_even`` an odd
    result is fixed by swapping two images inside the first part of size at
    least 2 (if every part is a singleton the identity is returned, which is
    even).
    """
    order = sorted(p.parts, key=lambda q: (-len(q), min(q)))
    image = [0] * p.m
    nxt = 1
    for q in order:
        for i in sorted(q):
            image[i - 1] = nxt
            nxt += 1
    if require_even and permutation_sign(tuple(image)) < 0:
        big = next((q for q in order if len(q) >= 2), None)
        if big is None:
            return tuple(range(1, p.m + 1))
        a, b = sorted(big)[:2]
        image[a - 1], image[b - 1] = image[b - 1], image[a - 1]
    return tuple(image)


@dataclass(frozen=True)
class MonomialUnitary:
    perm: Perm
    phases: tuple[Fraction, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")
        if len(self.phases) != len(self.perm):
            raise ValueError("one phase per column required")
        object.__setattr__(self, "phases", tuple(Fraction(x) % 1 for x in self.phases))

    @classmethod
    def diagonal(cls, angles: Sequence) -> "MonomialUnitary":
        return cls(tuple(range(1, len(angles) + 1)), tuple(angles))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "MonomialUnitary":
        return cls(tuple(perm), (0,) * len(perm))

    @property
    def m(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "MonomialUnitary") -> "MonomialUnitary":
        # (x y) e_j = x (b_j e_t(j)) = a_t(j) b_j e_s(t(j))
        perm = tuple(self.perm[t - 1] for t in other.perm)
        phases = tuple(other.phases[j] + self.phases[other.perm[j] - 1] for j in range(self.m))
        return MonomialUnitary(perm, phases)

    def inverse(self) -> "MonomialUnitary":
        perm = [0] * self.m
        phases = [Fraction(0)] * self.m
        for j, i in enumerate(self.perm, 1):
            perm[i - 1] = j
            phases[i - 1] = -self.phases[j - 1]
        return MonomialUnitary(tuple(perm), tuple(phases))

    def is_diagonal(self) -> bool:
        return self.perm == tuple(range(1, self.m + 1))

    def is_identity(self) -> bool:
        return self.is_diagonal() and not any(self.phases)

    def supported_on(self, p: SetPartition) -> bool:
        """Block-diagonal for ``p``, i.e. an element of ``U(p)``."""
        return all(self.perm[j - 1] in p.block_of(j) for j in range(1, self.m + 1))

    def conjugate_by_permutation(self, pi: Perm) -> "MonomialUnitary":
        """``P x P^-1`` for the permutation matrix ``P e_j = e_pi(j)``."""
        p = MonomialUnitary.permutation(pi)
        return p @ self @ p.inverse()

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "phases": [str(x) for x in self.phases]}


def commutator(x: MonomialUnitary, y: MonomialUnitary) -> MonomialUnitary:
    return x @ y @ x.inverse() @ y.inverse()


class PreconditionError(ValueError):
    pass


class InvariantFailure(RuntimeError):
    pass


@dataclass
class BlockNormalization:
    partition: SetPartition
    permutation: Perm
    tuple: list[MonomialUnitary]

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(), "permutation": list(self.permutation),
                "tuple": [x.to_json() for x in self.tuple]}


def nil2_block_normalize(xs: Sequence[MonomialUnitary], require_even: bool = False) -> BlockNormalization:
    """Diagonalize all commutators at once and conjugate the tuple into
    block form ``U(a_1) x ... x U(a_k)`` with consecutive blocks."""
    if not xs:
        raise PreconditionError("empty tuple")
    m = xs[0].m
    if any(x.m != m for x in xs):
        raise PreconditionError("matrices of different sizes")
    comms = [commutator(a, b) for i, a in enumerate(xs) for b in xs[i + 1:]]
    for c in comms:
        if not c.is_diagonal():
            raise PreconditionError("a commutator is not diagonal")
        for x in xs:
            if commutator(c, x) != MonomialUnitary.diagonal([0] * m):
                raise PreconditionError("a commutator is not central: tuple is not nil-2")
    parts = [coarsest_partition(c.phases) for c in comms] or [SetPartition.of([range(1, m + 1)])]
    a = partition_infimum(parts)
    for x in xs:
        if not x.supported_on(a):
            raise InvariantFailure(f"{x} is not block-supported on {a.to_json()}")
    pi = consecutivizing_permutation(a, require_even)
    return BlockNormalization(a, pi, [x.conjugate_by_permutation(pi) for x in xs])
