"""Subgroups of a fixed 2-group: closure, central series, classification, posets.

Subgroups are compared by element set only; the descriptor is cached
metadata.  Internally a subgroup is a bitmask over element indices of the
ambient group (see ``GroupId.index``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import combinations
from typing import Iterable, Union

from .quat_group import Family, GroupId, QuatElem, inv_table, mul_table

_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def subscript(n: int) -> str:
    return str(n).translate(_SUBSCRIPT)


# -- descriptors -----------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    """The torus subgroup ``mu_{2^s}``."""

    s: int

    def name(self):
        return "1" if self.s == 0 else "μ" + subscript(2**self.s)

    def __str__(self):
        return f"Cyclic({self.s})"


@dataclass(frozen=True)
class Order4WPair:
    """``{+-I, +-w xi^p}`` with ``xi`` the ambient torus generator."""

    p: int

    def name(self):
        return "Z/4"

    def __str__(self):
        return f"Order4WPair(x=xi^{self.p})"


@dataclass(frozen=True)
class QuatLike:
    """``mu_{2^r} u w xi^p mu_{2^r}``, a copy of ``Q_{2^(r+1)}``."""

    r: int
    p: int

    def name(self):
        return "Q" + subscript(2 ** (self.r + 1))

    def __str__(self):
        return f"QuatLike({self.r}, x=xi^{self.p})"


SubgroupDescriptor = Union[Cyclic, Order4WPair, QuatLike]


@dataclass(frozen=True)
class Subgroup:
    ambient: GroupId
    elements: frozenset
    descriptor: SubgroupDescriptor | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        return _to_mask(self.ambient, self.elements)

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        return self.elements < other.elements

    def name(self) -> str:
        desc = self.descriptor or classify_subgroup(self)
        return desc.name()

    def is_abelian(self) -> bool:
        return nilpotency_class(self) <= 1


# -- bitmask plumbing ---------------------------------------------------------------

def _to_mask(g: GroupId, els: Iterable[QuatElem]) -> int:
    mask = 0
    for e in els:
        mask |= 1 << g.index(e)
    return mask


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _from_mask(g: GroupId, mask: int, descriptor=None) -> Subgroup:
    return Subgroup(g, frozenset(g.element(i) for i in _bits(mask)), descriptor)


@cache
def closure_mask(g: GroupId, gen_mask: int) -> int:
    """Bitmask of the subgroup generated by the elements in ``gen_mask``."""
    mul = mul_table(g)
    gens = _bits(gen_mask)
    seen = 1  # identity has index 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = mul[x]
            for s in gens:
                y = row[s]
                if not seen >> y & 1:
                    seen |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return seen


def generated_subgroup(g: GroupId, tup: Iterable[QuatElem]) -> Subgroup:
    tup = list(tup)
    if not tup:
        raise ValueError("need at least one generator")
    for a in tup:
        g.validate(a)
    return _from_mask(g, closure_mask(g, _to_mask(g, tup)))


def _commutator_mask(g: GroupId, a_mask: int, b_mask: int) -> int:
    mul, inv = mul_table(g), inv_table(g)
    gens = 0
    for a in _bits(a_mask):
        for b in _bits(b_mask):
            gens |= 1 << mul[mul[mul[a][b]][inv[a]]][inv[b]]
    return closure_mask(g, gens)


@cache
def _lcs_masks(g: GroupId, mask: int) -> tuple[int, ...]:
    series = [mask]
    while series[-1] != 1:
        nxt = _commutator_mask(g, series[-1], mask)
        if nxt == series[-1]:
            raise ValueError("subgroup is not nilpotent")
        series.append(nxt)
    return tuple(series)


def lower_central_series(h: Subgroup) -> tuple[list[Subgroup], int]:
    """``Gamma^1 = h, Gamma^(i+1) = [Gamma^i, h]`` down to the trivial group, and the class."""
    masks = _lcs_masks(h.ambient, h.mask)
    series = [_from_mask(h.ambient, m) for m in masks]
    return series, len(series) - 1


def nilpotency_class(h: Subgroup) -> int:
    return len(_lcs_masks(h.ambient, h.mask)) - 1


# -- classification -------------------------------------------------------------------

def classify_subgroup(h: Subgroup) -> SubgroupDescriptor:
    g = h.ambient
    if g.family is not Family.QUATERNION:
        raise ValueError("classification is defined for quaternion ambients")
    hmod = g.torus_order
    torus = sorted(e.k for e in h.elements if e.eps == 0)
    wks = sorted(e.k for e in h.elements if e.eps == 1)
    s = len(torus).bit_length() - 1
    if 2**s != len(torus) or torus != [j * (hmod >> s) for j in range(2**s)]:
        raise ValueError(f"torus part of {sorted(map(str, h.elements))} is not some mu_2^s")
    if not wks:
        desc = Cyclic(s)
    elif s == 1 and len(wks) == 2:
        desc = Order4WPair(wks[0])
    elif s >= 2 and len(wks) == len(torus):
        desc = QuatLike(s, wks[0])
    else:
        raise ValueError(f"subgroup {sorted(map(str, h.elements))} matches no known case")
    if descriptor_elements(g, desc) != h.elements:
        raise ValueError(f"descriptor {desc} does not regenerate the subgroup")
    return desc


def descriptor_elements(g: GroupId, desc: SubgroupDescriptor) -> frozenset:
    hmod = g.torus_order
    if isinstance(desc, Cyclic):
        step = hmod >> desc.s
        return frozenset(QuatElem(0, j * step) for j in range(2**desc.s))
    if isinstance(desc, Order4WPair):
        half = hmod // 2
        return frozenset({QuatElem(0, 0), QuatElem(0, half),
                          QuatElem(1, desc.p % hmod), QuatElem(1, (desc.p + half) % hmod)})
    step = hmod >> desc.r
    return frozenset([QuatElem(0, j * step) for j in range(2**desc.r)]
                     + [QuatElem(1, (desc.p + j * step) % hmod) for j in range(2**desc.r)])


def classified(h: Subgroup) -> Subgroup:
    return Subgroup(h.ambient, h.elements, classify_subgroup(h))


# -- subgroup lattice ---------------------------------------------------------------

@cache
def _all_subgroup_masks(g: GroupId) -> tuple[int, ...]:
    """Every subgroup, found by adjoining one element at a time until nothing new appears."""
    found = {1}
    queue = [1]
    while queue:
        h = queue.pop()
        for x in range(g.order):
            if h >> x & 1:
                continue
            k = closure_mask(g, h | 1 << x)
            if k not in found:
                found.add(k)
                queue.append(k)
    return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))


def all_subgroups(g: GroupId) -> list[Subgroup]:
    return [_from_mask(g, m) for m in _all_subgroup_masks(g)]


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    masks = list(masks)
    return [a for a in masks if not any(a != b and a & b == a for b in masks)]


def _sort_key(h: Subgroup):
    # torus subgroups last, then by descriptor parameters
    d = h.descriptor
    if isinstance(d, Cyclic):
        return (1, d.s, 0)
    if isinstance(d, Order4WPair):
        return (0, 1, d.p)
    return (0, d.r, d.p)


def maximal_subgroups(g: GroupId) -> list[Subgroup]:
    if g.family is not Family.QUATERNION:
        raise ValueError("expected a quaternion group")
    full = (1 << g.order) - 1
    proper = [m for m in _all_subgroup_masks(g) if m != full]
    subs = [classified(_from_mask(g, m)) for m in _maximal_masks(proper)]
    return sorted(subs, key=_sort_key)


def maximal_nilclass_subgroups(g: GroupId, r: int) -> list[Subgroup]:
    """Maximal subgroups of nilpotency class ``< r`` in ``g = Q_{2^(q+1)}``, ``2 <= r <= q``."""
    if g.family is not Family.QUATERNION:
        raise ValueError("expected a quaternion group")
    q = g.m - 1
    if not 2 <= r <= q:
        raise ValueError(f"class bound r={r} out of range 2..{q} for {g}")
    low = [m for m in _all_subgroup_masks(g) if len(_lcs_masks(g, m)) - 1 < r]
    subs = [classified(_from_mask(g, m)) for m in _maximal_masks(low)]
    return sorted(subs, key=_sort_key)


def normalizer_in_ambient(g: GroupId, h: Subgroup) -> Subgroup:
    mul, inv = mul_table(g), inv_table(g)
    hm = h.mask
    hb = _bits(hm)
    norm = 0
    for x in range(g.order):
        image = 0
        for y in hb:
            image |= 1 << mul[mul[x][y]][inv[x]]
        if image == hm:
            norm |= 1 << x
    return _from_mask(g, norm)


# -- the poset P_r(G) ---------------------------------------------------------------

@dataclass
class NilPoset:
    ambient: GroupId
    r: int
    maximals: list[Subgroup]
    intersections: list[Subgroup]
    edges: list[tuple[int, int]]  # (lower node, upper node), indices into nodes
    tree: bool
    amalgam: str

    @property
    def nodes(self) -> list[Subgroup]:
        return self.maximals + self.intersections

    def to_json(self) -> dict:
        nodes = []
        for i, h in enumerate(self.nodes):
            nodes.append({
                "id": i,
                "name": h.name(),
                "order": h.order,
                "descriptor": str(h.descriptor or classify_subgroup(h)),
                "maximal": i < len(self.maximals),
                "elements": sorted(str(e) for e in sorted(h.elements)),
            })
        return {
            "group": str(self.ambient),
            "r": self.r,
            "nodes": nodes,
            "edges": [list(e) for e in self.edges],
            "tree": self.tree,
            "amalgam": self.amalgam,
        }


def _is_tree(n_nodes: int, edges: list[tuple[int, int]]) -> bool:
    if len(edges) != n_nodes - 1:
        return False
    parent = list(range(n_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def nil_poset_report(g: GroupId, r: int) -> NilPoset:
    maximals = maximal_nilclass_subgroups(g, r)
    inters: list[Subgroup] = []
    for a, b in combinations(maximals, 2):
        c = classified(Subgroup(g, a.elements & b.elements))
        if c not in inters and c not in maximals:
            inters.append(c)
    nodes = maximals + inters
    edges = []
    for i, lo in enumerate(nodes):
        for j, hi in enumerate(nodes):
            if lo < hi and not any(lo < mid < hi for mid in nodes):
                edges.append((i, j))
    tree = _is_tree(len(nodes), edges)
    if len(inters) == 1:
        sep = f" ∗_{{{inters[0].name()}}} "
        amalgam = sep.join(h.name() for h in maximals)
    else:
        amalgam = "; ".join(f"{nodes[a].name()} ⊂ {nodes[b].name()}" for a, b in edges)
    return NilPoset(g, r, maximals, inters, edges, tree, amalgam)
