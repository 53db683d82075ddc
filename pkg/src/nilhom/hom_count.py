"""Counting nilpotent n-tuples in SU(2), SO(3) and U(2).

Every count is available two ways: from the closed formulas, and from
brute-force enumeration of tuples in the finite groups ``Q_{2^r}`` and
``D_{2^r}``.  Orbits are counted with the explicit normalizer action (the
binary octahedral group for ``Q8``, ``Q_{2^(r+1)}`` otherwise); since the
action is free modulo the centre, counting reduces to a division, and the
enumeration verifies that every orbit really has the expected size.

Tuples are enumerated in lexicographic ``(eps, k)`` order with the first
coordinate split across workers; all reducers are commutative, so results
do not depend on the worker count.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, partial
from itertools import product

from ._parallel import slice_map
from .quat_group import GroupId, QuatElem, conjugate, embed, mul_table, project_to_dihedral
from .subgroups import (QuatLike, _from_mask, _lcs_masks, _to_mask, all_subgroups, classify_subgroup,
                        closure_mask, maximal_subgroups)
from .su2_exact import binary_octahedral, quat_elem_to_quaternion


class Method(str, enum.Enum):
    FORMULA = "formula"
    ENUMERATION = "enumeration"
    BOTH = "both"


class VerificationError(RuntimeError):
    """A formula and an enumeration disagree, or a structural claim fails."""


def _as_int(x: Fraction, what: str) -> int:
    if Fraction(x).denominator != 1:
        raise VerificationError(f"{what} = {x} is not an integer")
    return int(x)


# -- closed formulas ---------------------------------------------------------------------

def gen_tuple_count_formula(n: int, r: int) -> int:
    """``|Gen(n, Q_{2^r})| = 2^((r-2)n+1) (2^n-1) (2^(n-1)-1)``."""
    return 2 ** ((r - 2) * n + 1) * (2**n - 1) * (2 ** (n - 1) - 1)


def gen_tuple_count_inclusion_exclusion(n: int, r: int) -> int:
    """Inclusion-exclusion over the actual maximal subgroups of ``Q_{2^r}``."""
    g = GroupId.quaternion(r)
    maxes = [h.elements for h in maximal_subgroups(g)]
    total = g.order**n
    for size in range(1, len(maxes) + 1):
        for combo in _subsets(maxes, size):
            inter = frozenset.intersection(*combo)
            total += (-1) ** size * len(inter) ** n
    return total


def _subsets(items, size):
    from itertools import combinations
    return combinations(items, size)


def normalizer_order(r: int) -> int:
    """``|N_SU(2)(Q_{2^r})|``: 48 for ``Q8``, ``2^(r+1)`` beyond."""
    return 48 if r == 3 else 2 ** (r + 1)


def orbit_count_formula(n: int, r: int) -> Fraction:
    return Fraction(gen_tuple_count_formula(n, r), normalizer_order(r) // 2)


def components_formula(n: int, q: int) -> int:
    """``C(n, q+1)``: non-abelian components of ``Hom(F_n / Gamma^(q+1), SU(2))``."""
    first = Fraction(2**n * (2**n - 1) * (2 ** (n - 1) - 1), 4 * 3)
    second = (2**n - 1) * (2 ** ((q - 2) * (n - 1)) - 1) * Fraction(2 ** (2 * n), 8)
    return _as_int(first + second, f"C({n},{q + 1})")


def so3_formulas(n: int, q: int) -> tuple[int, int]:
    """``(M(n), M(n, q))``."""
    m = Fraction((2**n - 1) * (2 ** (n - 1) - 1), 3)
    mq = (2**n - 1) * (2 ** ((q - 2) * (n - 1)) - 1) * Fraction(2**n, 4)
    return _as_int(m, f"M({n})"), _as_int(mq, f"M({n},{q})")


def _summand_term(k: int, r: int) -> Fraction:
    return Fraction((2**r - 1) ** k - 3 * (2 ** (r - 1) - 1) ** k + 2 * (2 ** (r - 2) - 1) ** k, 2**r)


def K_formula(k: int, q: int) -> int:
    """``K(k, q+1)``: ``RP^3_+`` wedge summands for SU(2)."""
    val = Fraction(7**k, 24) - Fraction(3**k, 8) + Fraction(1, 12)
    val += sum((_summand_term(k, r) for r in range(4, q + 2)), Fraction(0))
    return _as_int(val, f"K({k},{q + 1})")


def N_formula(k: int) -> int:
    return _as_int(Fraction(3 ** (k - 1) - 1, 2), f"N({k})")


def Nq_formula(k: int, q: int) -> int:
    return _as_int(sum((_summand_term(k, r) for r in range(3, q + 1)), Fraction(0)), f"N({k},{q})")


# -- normalizer actions --------------------------------------------------------------------

@cache
def normalizer_permutations(r: int) -> tuple[tuple[int, ...], ...]:
    """Permutations of the element indices of ``Q_{2^r}`` induced by conjugation
    by each element of ``N_SU(2)(Q_{2^r})`` (one permutation per element, so
    ``+-g`` give the same permutation)."""
    g = GroupId.quaternion(r)
    els = g.elements()
    if r == 3:
        quats = [quat_elem_to_quaternion(g, a) for a in els]
        lookup = {x: i for i, x in enumerate(quats)}
        perms = []
        for b in sorted(binary_octahedral(), key=str):
            binv = b.inverse()
            perms.append(tuple(lookup[b * x * binv] for x in quats))
        return tuple(perms)
    big = GroupId.quaternion(r + 1)
    perms = []
    for y in big.elements():
        perm = []
        for a in els:
            c = conjugate(big, embed(g, big, a), y)
            if c.k % 2:
                raise VerificationError(f"{y} does not normalize {g}")
            perm.append(g.index(QuatElem(c.eps, c.k // 2)))
        perms.append(tuple(perm))
    return tuple(perms)


def q8_automorphisms_abstract() -> set[tuple[int, ...]]:
    """``Aut(Q8)`` by brute force: send ``(i, j)`` to any pair of non-commuting
    order-4 elements and extend multiplicatively."""
    g = GroupId.quaternion(3)
    mul = mul_table(g)
    i_, j_ = g.index(QuatElem(0, 1)), g.index(QuatElem(1, 0))
    words = {}
    for e in range(g.order):
        for a, b in product(range(4), range(2)):
            x = 0
            for _ in range(a):
                x = mul[x][i_]
            for _ in range(b):
                x = mul[x][j_]
            words.setdefault(x, (a, b))
    order4 = [x for x in range(g.order) if mul[x][x] != 0 and mul[mul[x][x]][mul[x][x]] == 0]
    auts = set()
    for ii, jj in product(order4, repeat=2):
        if mul[ii][jj] == mul[jj][ii]:
            continue
        img = []
        for x in range(g.order):
            a, b = words[x]
            y = 0
            for _ in range(a):
                y = mul[y][ii]
            for _ in range(b):
                y = mul[y][jj]
            img.append(y)
        if len(set(img)) == g.order and all(
                img[mul[x][y]] == mul[img[x]][img[y]] for x in range(g.order) for y in range(g.order)):
            auts.add(tuple(img))
    return auts


@cache
def dihedral_normalizer_permutations(r: int) -> tuple[tuple[int, ...], ...]:
    """Action of ``N_PU(2)(D_{2^r})`` on ``D_{2^r} = Q_{2^(r+1)} / {+-I}``, one
    permutation per element of the SU(2)-level normalizer of ``Q_{2^(r+1)}``."""
    qg = GroupId.quaternion(r + 1)
    dg = GroupId.dihedral(r)
    lift = [qg.index(QuatElem(d.eps, d.k)) for d in dg.elements()]
    perms = []
    for p in normalizer_permutations(r + 1):
        perms.append(tuple(dg.index(project_to_dihedral(qg, qg.element(p[i]))) for i in lift))
    return tuple(perms)


# -- orbit census ------------------------------------------------------------------------------

@dataclass
class OrbitCensus:
    """Generating tuples of a group under a normalizer action."""

    group: GroupId
    n: int
    tuples: int = 0
    orbits: int = 0
    orbit_sizes: Counter = field(default_factory=Counter)

    def merge(self, other: "OrbitCensus") -> "OrbitCensus":
        self.tuples += other.tuples
        self.orbits += other.orbits
        self.orbit_sizes.update(other.orbit_sizes)
        return self


def _forbidden(g: GroupId, avoid: str) -> frozenset[int]:
    if avoid == "none":
        return frozenset()
    if avoid == "identity":
        return frozenset({0})
    if avoid == "center":
        # {I, -I} in Q, just the identity in D
        return frozenset({0, g.index(g.minus_one)}) if g.family.value == "Q" else frozenset({0})
    raise ValueError(f"unknown avoid mode {avoid!r}")


def _census_slice(g: GroupId, n: int, perms, avoid: str, first: int) -> OrbitCensus:
    full = (1 << g.order) - 1
    bad = _forbidden(g, avoid)
    out = OrbitCensus(g, n)
    if first in bad:
        return out
    rest = [x for x in range(g.order) if x not in bad]
    for tail in product(rest, repeat=n - 1):
        tup = (first, *tail)
        mask = 0
        for x in tup:
            mask |= 1 << x
        if closure_mask(g, mask) != full:
            continue
        orbit = {tuple(p[x] for x in tup) for p in perms}
        out.tuples += 1
        out.orbit_sizes[len(orbit)] += 1
        if tup == min(orbit):
            out.orbits += 1
    return out


def orbit_census(g: GroupId, n: int, perms, avoid: str = "none", workers: int = 1) -> OrbitCensus:
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = slice_map(partial(_census_slice, g, n, perms, avoid), range(g.order), workers)
    total = OrbitCensus(g, n)
    for p in parts:
        total.merge(p)
    return total


def _check_free(census: OrbitCensus, expected: int) -> None:
    wrong = {s: c for s, c in census.orbit_sizes.items() if s != expected}
    if wrong:
        raise VerificationError(
            f"orbits on Gen({census.n}, {census.group}) of unexpected sizes {wrong}; expected {expected}")


def gen_tuple_count_enumeration(n: int, r: int, workers: int = 1) -> int:
    g = GroupId.quaternion(r)
    return orbit_census(g, n, ((tuple(range(g.order))),), workers=workers).tuples


def gen_tuple_count(n: int, r: int, method: Method | str = Method.FORMULA, workers: int = 1) -> int:
    if n < 1 or r < 3:
        raise ValueError("need n >= 1 and r >= 3")
    method = Method(method)
    formula = gen_tuple_count_formula(n, r)
    if method is Method.FORMULA:
        return formula
    counted = gen_tuple_count_enumeration(n, r, workers)
    if method is Method.BOTH and counted != formula:
        raise VerificationError(f"|Gen({n}, Q_2^{r})|: formula {formula} != enumeration {counted}")
    return counted


def conjugation_orbit_census(n: int, r: int, avoid: str = "none", workers: int = 1) -> OrbitCensus:
    census = orbit_census(GroupId.quaternion(r), n, normalizer_permutations(r), avoid, workers)
    _check_free(census, normalizer_order(r) // 2)
    return census


def conjugation_orbit_count(n: int, r: int, workers: int = 1) -> int:
    """Orbits of ``Gen(n, Q_{2^r})`` under its SU(2)-normalizer; raises if the
    action modulo the centre is not free."""
    if n < 1 or r < 3:
        raise ValueError("need n >= 1 and r >= 3")
    return conjugation_orbit_census(n, r, workers=workers).orbits


# -- whole-space enumeration of SU(2) classes ----------------------------------------------

@cache
def _standardizer(g: GroupId, mask: int):
    """For a non-abelian subgroup ``mu_{2^r} u w xi^p mu_{2^r}`` of ``g``, return
    ``(r, index map into Q_{2^(r+1)})``.  Conjugating by ``xi^(p/2)`` (an element of
    ``Q_{2^(m+1)}``) sends ``w xi^k`` to ``w xi^(k-p)`` and fixes the torus."""
    desc = classify_subgroup(_from_mask(g, mask))
    if not isinstance(desc, QuatLike):
        return None
    std = GroupId.quaternion(desc.r + 1)
    step = g.torus_order // std.torus_order
    h = g.torus_order
    table = {}
    for i in range(g.order):
        if not mask >> i & 1:
            continue
        a = g.element(i)
        k = (a.k - desc.p) % h if a.eps else a.k
        table[i] = std.index(QuatElem(a.eps, k // step))
    return desc.r, table


def _class_slice(g: GroupId, n: int, first: int):
    classes: dict[int, set] = {}
    tuples = Counter()
    commuting = 0
    for tail in product(range(g.order), repeat=n - 1):
        tup = (first, *tail)
        mask = 0
        for x in tup:
            mask |= 1 << x
        sub = closure_mask(g, mask)
        if len(_lcs_masks(g, sub)) <= 2:
            commuting += 1
            continue
        r, table = _standardizer(g, sub)
        std = tuple(table[x] for x in tup)
        canon = min(tuple(p[x] for x in std) for p in normalizer_permutations(r + 1))
        classes.setdefault(r, set()).add(canon)
        tuples[r] += 1
    return classes, tuples, commuting


@dataclass
class ClassEnumeration:
    """Non-commuting tuples of ``Q_{2^(q+1)}^n`` up to SU(2) conjugation."""

    n: int
    q: int
    classes: dict[int, set]  # class r -> canonical representatives inside Q_{2^(r+1)}
    tuples_by_class: Counter
    commuting: int

    def per_r(self) -> dict[int, int]:
        return {r: len(self.classes.get(r, ())) for r in range(2, self.q + 1)}


def enumerate_classes(n: int, q: int, workers: int = 1) -> ClassEnumeration:
    g = GroupId.quaternion(q + 1)
    parts = slice_map(partial(_class_slice, g, n), range(g.order), workers)
    classes: dict[int, set] = {}
    tuples = Counter()
    commuting = 0
    for cl, tp, cm in parts:
        for r, s in cl.items():
            classes.setdefault(r, set()).update(s)
        tuples.update(tp)
        commuting += cm
    return ClassEnumeration(n, q, classes, tuples, commuting)


# -- SU(2) ------------------------------------------------------------------------------------

@dataclass
class TupleClassReport:
    n: int
    q: int
    abelian_components: int
    per_r: dict[int, int]
    total_nonabelian: int
    method: Method
    agree: bool | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n, "q": self.q,
            "abelian": self.abelian_components,
            "nonabelian": self.total_nonabelian,
            "per_r": {str(r): v for r, v in sorted(self.per_r.items())},
            "method": self.method.value,
        }
        if self.agree is not None:
            out["agree"] = self.agree
        return out


def _per_r_formula(n: int, q: int) -> dict[int, int]:
    return {r: _as_int(orbit_count_formula(n, r + 1), f"orbits on Gen({n},Q_2^{r + 1})")
            for r in range(2, q + 1)}


def su2_component_count(n: int, q: int, method: Method | str = Method.FORMULA,
                        workers: int = 1) -> TupleClassReport:
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    method = Method(method)
    formula_per_r = _per_r_formula(n, q)
    closed = components_formula(n, q)
    if sum(formula_per_r.values()) != closed:
        raise VerificationError(f"C({n},{q + 1}) closed form {closed} != sum of orbit terms")
    if method is Method.FORMULA:
        return TupleClassReport(n, q, 1, formula_per_r, closed, method)
    per_r = enumerate_classes(n, q, workers).per_r()
    total = sum(per_r.values())
    agree = None
    if method is Method.BOTH:
        agree = per_r == formula_per_r and total == closed
    return TupleClassReport(n, q, 1, per_r, total, method, agree)


# -- SO(3) ------------------------------------------------------------------------------------

@dataclass
class SO3Report:
    n: int
    q: int
    M: int
    Mq: int
    method: Method
    covering: tuple[int, int] | None = None
    dihedral: tuple[int, int] | None = None
    agree: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"n": self.n, "q": self.q, "M": self.M, "M_q": self.Mq, "method": self.method.value}
        if self.covering is not None:
            out["covering_division"] = list(self.covering)
        if self.dihedral is not None:
            out["dihedral_enumeration"] = list(self.dihedral)
        if self.agree is not None:
            out["agree"] = self.agree
        if self.notes:
            out["notes"] = self.notes
        return out


def covering_division(n: int, q8_classes: int, higher_classes: int) -> tuple[int, int]:
    """SU(2) component counts to SO(3): a ``Q8`` component covers its image
    ``2^(n-2)`` times, any larger ``Q_{2^r}`` component ``2^(n-1)`` times."""
    m = Fraction(q8_classes, 1) / Fraction(2) ** (n - 2)
    mq = Fraction(higher_classes, 1) / Fraction(2) ** (n - 1)
    return _as_int(m, "covering division of the Q8 classes"), _as_int(mq, "covering division of the higher classes")


def dihedral_census(n: int, r: int, avoid: str = "none", workers: int = 1) -> OrbitCensus:
    """Generating tuples of ``D_{2^r}`` up to conjugation in PU(2)."""
    census = orbit_census(GroupId.dihedral(r), n, dihedral_normalizer_permutations(r), avoid, workers)
    perms = dihedral_normalizer_permutations(r)
    kernel = sum(1 for p in perms if p == tuple(range(len(p))))
    _check_free(census, len(perms) // kernel)
    return census


DIHEDRAL_NOTE = ("N_PU(2)(D_4) acts on Z/2 x Z/2 through the binary octahedral group modulo +-I "
                 "(24 elements, kernel D_4 of order 4, so S_3 on the three involutions); "
                 "N_PU(2)(D_2^r) for r >= 3 is the image of Q_2^(r+2)")


def so3_component_count(n: int, q: int, method: Method | str = Method.FORMULA,
                        workers: int = 1) -> SO3Report:
    if n < 2 or q < 2:
        raise ValueError("need n >= 2 and q >= 2")
    method = Method(method)
    m, mq = so3_formulas(n, q)
    if method is Method.FORMULA:
        rep = SO3Report(n, q, m, mq, method)
        rep.covering = covering_division(n, components_formula(n, 2),
                                         components_formula(n, q) - components_formula(n, 2))
        return rep
    su2 = su2_component_count(n, q, Method.ENUMERATION, workers)
    cov = covering_division(n, su2.per_r[2], su2.total_nonabelian - su2.per_r[2])
    dih_m = dihedral_census(n, 2, workers=workers).orbits
    dih_mq = sum(dihedral_census(n, r, workers=workers).orbits for r in range(3, q + 1))
    rep = SO3Report(n, q, cov[0], cov[1], method, covering=cov, dihedral=(dih_m, dih_mq),
                    notes=[DIHEDRAL_NOTE])
    if method is Method.BOTH:
        rep.agree = cov == (m, mq) == (dih_m, dih_mq)
    return rep


# -- U(2) -------------------------------------------------------------------------------------

@dataclass
class StabilizerResult:
    signs: list[tuple[int, ...]]
    generated: str

    @property
    def order(self) -> int:
        return len(self.signs)


def _sign_images(r: int, std: tuple[int, ...]):
    """All ``(eps_i x_i)`` for sign vectors ``eps``, as index tuples in ``Q_{2^(r+1)}``."""
    g = GroupId.quaternion(r + 1)
    mul = mul_table(g)
    minus = g.index(g.minus_one)
    for signs in product((1, -1), repeat=len(std)):
        yield signs, tuple(mul[x][minus] if s < 0 else x for x, s in zip(std, signs))


def u2_stabilizer(g: GroupId, tup) -> StabilizerResult:
    """Sign vectors ``eps`` with ``(eps_i x_i)`` conjugate in SU(2) to ``(x_i)``."""
    idx = [g.index(a) for a in tup]
    mask = closure_mask(g, _to_mask(g, tup))
    if len(_lcs_masks(g, mask)) <= 2:
        raise ValueError("u2_stabilizer needs a non-commuting tuple")
    r, table = _standardizer(g, mask)
    std = tuple(table[x] for x in idx)
    orbit = {tuple(p[x] for x in std) for p in normalizer_permutations(r + 1)}
    signs = [s for s, img in _sign_images(r, std) if img in orbit]
    return StabilizerResult(signs, "Q" + str(2 ** (r + 1)))


@dataclass
class U2Report:
    n: int
    q: int
    abelian: int
    M: int
    Mq: int
    method: Method
    agree: bool | None = None
    stabilizer_orders: dict[int, Counter] | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "q": self.q, "abelian": self.abelian,
               "type_Z2xZ2": self.M, "type_Z2": self.Mq, "method": self.method.value}
        if self.agree is not None:
            out["agree"] = self.agree
        if self.stabilizer_orders is not None:
            out["stabilizer_orders"] = {str(r): {str(k): v for k, v in sorted(c.items())}
                                        for r, c in sorted(self.stabilizer_orders.items())}
        return out


def u2_component_count(n: int, q: int, method: Method | str = Method.FORMULA,
                       workers: int = 1) -> U2Report:
    """``(1, M(n), M(n,q))`` components of types ``Hom(Z^n, U(2))``,
    ``(S^1)^n x_{(Z/2)^2} PU(2)`` and ``(S^1)^n x_{Z/2} PU(2)``."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    method = Method(method)
    if n == 1:
        return U2Report(1, q, 1, 0, 0, method, True if method is Method.BOTH else None)
    m, mq = so3_formulas(n, q)
    if method is Method.FORMULA:
        return U2Report(n, q, 1, m, mq, method)
    classes = enumerate_classes(n, q, workers).classes
    stabs: dict[int, Counter] = {}
    weighted = Counter()  # stabilizer order -> sum over classes of |Stab| / 2^n
    for r, reps in classes.items():
        perms = normalizer_permutations(r + 1)
        for rep in reps:
            stab = sum(1 for _, img in _sign_images(r, rep)
                       if min(tuple(p[x] for x in img) for p in perms) == rep)
            stabs.setdefault(r, Counter())[stab] += 1
            weighted[stab] += Fraction(stab, 2**n)
    unexpected = {s for s in weighted if s not in (2, 4)}
    if unexpected:
        raise VerificationError(f"stabilizers of unexpected order {unexpected}")
    rep = U2Report(n, q, 1, _as_int(weighted[4], "U(2) count (Z/2)^2"),
                   _as_int(weighted[2], "U(2) count Z/2"), method, stabilizer_orders=stabs)
    if method is Method.BOTH:
        rep.agree = (rep.M, rep.Mq) == (m, mq)
    return rep


# -- stable summands ------------------------------------------------------------------------

@dataclass
class StableSummandReport:
    k: int
    q: int
    target: str
    counts: dict[str, int]
    method: Method
    agree: bool | None = None

    def to_json(self) -> dict:
        out = {"k": self.k, "q": self.q, "target": self.target, "counts": dict(self.counts),
               "method": self.method.value}
        if self.agree is not None:
            out["agree"] = self.agree
        return out


def stable_summand_counts(k: int, q: int, target: str, method: Method | str = Method.FORMULA,
                          workers: int = 1) -> StableSummandReport:
    if k < 1 or q < 2:
        raise ValueError("need k >= 1 and q >= 2")
    target = target.upper()
    method = Method(method)
    if target == "SU2":
        formula = {"RP3_plus": K_formula(k, q)}
    elif target == "SO3":
        formula = {"SU2/Q8_plus": N_formula(k), "SU2/mu4_plus": Nq_formula(k, q)}
    else:
        raise ValueError(f"unknown target {target!r}")
    if method is Method.FORMULA:
        return StableSummandReport(k, q, target, formula, method)

    if target == "SU2":
        counted = {"RP3_plus": sum(conjugation_orbit_census(k, r, "identity", workers).orbits
                                   for r in range(3, q + 2))}
    else:
        q8 = conjugation_orbit_census(k, 3, "center", workers).orbits
        higher = sum(conjugation_orbit_census(k, r, "center", workers).orbits for r in range(4, q + 2))
        cov = (_as_int(Fraction(q8) / Fraction(2) ** (k - 2), "N(k) covering division"),
               _as_int(Fraction(higher) / Fraction(2) ** (k - 1), "N(k,q) covering division"))
        dih = (dihedral_census(k, 2, "identity", workers).orbits,
               sum(dihedral_census(k, r, "identity", workers).orbits for r in range(3, q + 1)))
        if cov != dih:
            raise VerificationError(f"SO(3) summands: covering division {cov} != dihedral enumeration {dih}")
        counted = {"SU2/Q8_plus": cov[0], "SU2/mu4_plus": cov[1]}
    agree = counted == formula if method is Method.BOTH else None
    return StableSummandReport(k, q, target, counted, method, agree)


# -- partition identity -------------------------------------------------------------------------

@dataclass
class PartitionIdentity:
    n: int
    q: int
    total: int
    commuting: int
    by_class: dict[int, int]        # enumerated tuples generating a class-r subgroup
    predicted: dict[int, int]       # (number of such subgroups) x |Gen(n, Q_{2^(r+1)})|

    @property
    def holds(self) -> bool:
        return (self.total == self.commuting + sum(self.by_class.values())
                and self.by_class == self.predicted)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "total": self.total, "commuting": self.commuting,
                "by_class": {str(r): v for r, v in sorted(self.by_class.items())},
                "predicted": {str(r): v for r, v in sorted(self.predicted.items())},
                "holds": self.holds}


def partition_identity(n: int, q: int, workers: int = 1) -> PartitionIdentity:
    """``|Q_{2^(q+1)}|^n`` split into commuting tuples and tuples generating
    each non-abelian subgroup, against the subgroup lattice."""
    g = GroupId.quaternion(q + 1)
    enum_ = enumerate_classes(n, q, workers)
    copies = Counter()
    for h in all_subgroups(g):
        d = classify_subgroup(h)
        if isinstance(d, QuatLike):
            copies[d.r] += 1
    predicted = {r: copies[r] * gen_tuple_count_formula(n, r + 1) for r in range(2, q + 1)}
    by_class = {r: enum_.tuples_by_class.get(r, 0) for r in range(2, q + 1)}
    return PartitionIdentity(n, q, g.order**n, enum_.commuting, by_class, predicted)
