"""Pages of the spectral sequence of a central extension by Z/2.

The ``E_2`` page is ``A[u]`` with ``u`` in total degree 1 and ``d_2(u) = k``.
Then ``E_3 = A/(k)[u^2] + u ann_A(k)[u^2]``, and when ``ann_A(k) = 0`` the
next page is ``E_4 = A/(k, Sq^1 k)[u^4] + u^2 ann_{A/(k)}(Sq^1 k)[u^4]``.
Only total degrees are tracked.

``e4_page`` takes ``Sq^1 k`` as input rather than deriving it from Steenrod
data on every generator, since that data is not always available.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib.resources import files

from .f2_groebner import (BinaryPoly, GradedRing, HilbertFunction, IdealBasis, QuotientOracle,
                          colon_ideal, groebner_basis, hilbert_function, normal_form,
                          read_ideal_file)
from .f2_groebner.ring import mono_div


class UnsupportedCase(RuntimeError):
    """The page formula needs a hypothesis that fails for this input."""


def sq1(ring: GradedRing, p: BinaryPoly, table: dict[str, BinaryPoly] | None = None) -> BinaryPoly:
    """``Sq^1`` extended as a derivation: degree-1 generators go to their
    squares, other generators are looked up in ``table`` (only when they
    occur to an odd power, since ``Sq^1(x^2) = 0``)."""
    table = table or {}
    out = ring.zero()
    for m in p.terms:
        for i, e in enumerate(m):
            if e % 2 == 0:
                continue
            name = ring.names[i]
            if ring.degrees[i] == 1:
                image = ring.var(name) * ring.var(name)
            elif name in table:
                image = table[name]
            else:
                raise KeyError(f"no Sq^1 value supplied for generator {name!r}")
            unit = tuple(1 if j == i else 0 for j in range(ring.nvars))
            out = out + image.mul_monomial(mono_div(m, unit))
    return out


@dataclass
class ExtensionDatum:
    ring: GradedRing
    ideal: IdealBasis
    k: BinaryPoly
    sq1_k: BinaryPoly | None = None
    d5: BinaryPoly | None = None
    name: str = ""

    def __post_init__(self):
        if not self.k.is_homogeneous() or self.k.degree() != 2:
            raise ValueError(f"k must be homogeneous of degree 2, got {self.k}")
        if self.sq1_k is not None and self.sq1_k and (not self.sq1_k.is_homogeneous() or self.sq1_k.degree() != 3):
            raise ValueError(f"sq1_k must be homogeneous of degree 3, got {self.sq1_k}")


@dataclass
class PageReport:
    page: int
    ring: GradedRing
    quotient: IdealBasis          # presents the u^0 column
    annihilator: IdealBasis       # generators of the shifted column, modulo `ambient`
    ambient: IdealBasis           # ring in which the annihilator lives
    u_period: int
    poincare: HilbertFunction
    checks: dict[str, bool] = field(default_factory=dict)
    ring_structure_authoritative: bool = False
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        gb = groebner_basis(self.ring, self.quotient)
        return {
            "page": self.page,
            "ring": self.ring.header(),
            "quotient_gb": [g.format() for g in gb.generators],
            "annihilator": [g.format() for g in self.annihilator.generators],
            "u_period": self.u_period,
            "poincare": self.poincare.to_list(),
            "checks": dict(self.checks),
            "ring_structure_authoritative": self.ring_structure_authoritative,
            "notes": list(self.notes),
        }


def _column_dims(report: PageReport, max_degree: int) -> tuple[list[int], list[int]]:
    q = hilbert_function(report.ring, report.quotient, max_degree).to_list()
    amb = hilbert_function(report.ring, report.ambient, max_degree).to_list()
    red = hilbert_function(report.ring, report.ambient + report.annihilator, max_degree).to_list()
    return q, [a - b for a, b in zip(amb, red)]


def page_poincare_series(report: PageReport, max_degree: int) -> HilbertFunction:
    """Total-degree dimensions: the quotient in u-columns ``0 mod p`` and the
    annihilator in columns ``p/2 mod p``."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    q, ann = _column_dims(report, max_degree)
    p = report.u_period
    dims = []
    for d in range(max_degree + 1):
        total = sum(q[d - e] for e in range(0, d + 1, p))
        total += sum(ann[d - e] for e in range(p // 2, d + 1, p))
        dims.append(total)
    return HilbertFunction(tuple(dims))


def _finish(report: PageReport, max_degree: int) -> PageReport:
    report.poincare = page_poincare_series(report, max_degree)
    return report


def e3_page(ext: ExtensionDatum, max_degree: int = 10) -> PageReport:
    quotient = ext.ideal.with_generators(ext.k)
    ann = colon_ideal(ext.ring, ext.ideal, ext.k)
    rep = PageReport(3, ext.ring, quotient, ann, ext.ideal, 2, HilbertFunction(()))
    gb = groebner_basis(ext.ring, ext.ideal)
    rep.checks["ann_k_zero"] = ann.is_zero()
    rep.checks["ann_generators_kill_k"] = all(normal_form(g * ext.k, gb).is_zero() for g in ann.generators)
    return _finish(rep, max_degree)


def e4_page(ext: ExtensionDatum, max_degree: int = 10) -> PageReport:
    if ext.sq1_k is None:
        raise ValueError("e4_page needs sq1_k")
    ann_k = colon_ideal(ext.ring, ext.ideal, ext.k)
    if not ann_k.is_zero():
        raise UnsupportedCase("k is a zero divisor in A; the E4 formula does not apply")
    base = ext.ideal.with_generators(ext.k)
    gb_base = groebner_basis(ext.ring, base)
    if ext.sq1_k.is_zero():
        quotient = base
        ann = IdealBasis(ext.ring, (ext.ring.one(),))
    else:
        quotient = base.with_generators(ext.sq1_k)
        ann = colon_ideal(ext.ring, base, ext.sq1_k)
    rep = PageReport(4, ext.ring, quotient, ann, base, 4, HilbertFunction(()))
    rep.checks["ann_k_zero"] = True
    rep.checks["ann_generators_kill_sq1k"] = all(
        normal_form(g * ext.sq1_k, gb_base).is_zero() for g in ann.generators)
    if ext.d5 is not None:
        rep.checks["d5_vanishes_mod_k"] = normal_form(ext.d5, gb_base).is_zero()
    rep.notes.append("vector-space structure only; the candidate ring structure is not authoritative")
    return _finish(rep, max_degree)


# -- independent oracle ----------------------------------------------------------------------

def direct_page_dims(ext: ExtensionDatum, page: int, max_degree: int) -> list[int]:
    """Page dimensions from homology computed degree by degree with linear algebra."""
    oa = QuotientOracle(ext.ring, ext.ideal.generators)
    if page == 3:
        def column(j, s):
            return oa.cokernel_dim(ext.k, s) if j % 2 == 0 else oa.annihilator_dim(ext.k, s)
    elif page == 4:
        if ext.sq1_k is None:
            raise ValueError("page 4 needs sq1_k")
        if any(oa.annihilator_dim(ext.k, s) for s in range(max_degree + 1)):
            raise UnsupportedCase("E3 has odd columns; the E4 oracle does not cover this case")
        ok = QuotientOracle(ext.ring, list(ext.ideal.generators) + [ext.k])
        f = ext.sq1_k

        def column(j, s):
            if j % 2:
                return 0
            if f.is_zero():
                return ok.dim(s)
            return ok.cokernel_dim(f, s) if j % 4 == 0 else ok.annihilator_dim(f, s)
    else:
        raise ValueError("only pages 3 and 4 are supported")
    return [sum(column(j, d - j) for j in range(d + 1)) for d in range(max_degree + 1)]


# -- concrete presentations ---------------------------------------------------------------------

def _y_names(count: int) -> list[str]:
    return [f"y{i}" for i in range(1, count + 1)]


def bcom_presentation(n: int) -> tuple[GradedRing, IdealBasis]:
    """Presentation of ``H^*(B_com Q_{2^n}; F_2)``."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n == 3:
        ring = GradedRing.of([(y, 1) for y in _y_names(3)] + [("z", 2)])
        ys = [ring.var(y) for y in _y_names(3)]
        gens = [ys[i] * ys[j] for i in range(3) for j in range(i + 1, 3)]
        gens.append(sum((y * y for y in ys), ring.zero()))
        return ring, IdealBasis(ring, tuple(gens))
    ny = 2 ** (n - 2)
    ring = GradedRing.of([("x1", 1), ("x2", 2)] + [(y, 1) for y in _y_names(ny)] + [("z", 2)])
    x1, x2 = ring.var("x1"), ring.var("x2")
    ys = [ring.var(y) for y in _y_names(ny)]
    gens = [x1 * x1]
    gens += [x * y for x in (x1, x2) for y in ys]
    gens += [ys[i] * ys[j] for i in range(ny) for j in range(i + 1, ny)]
    gens.append(x2 + sum((y * y for y in ys), ring.zero()))
    return ring, IdealBasis(ring, tuple(gens))


def bcom_hilbert_expected(n: int, max_degree: int) -> list[int]:
    c = 2 ** (n - 2) + 1
    return [1] + [c] * max_degree


def bcom_extension_datum(n: int) -> ExtensionDatum:
    """The extension whose ``E_3`` page recovers ``H^*(B_com Q_{2^n})``: base ring
    without ``z``, ``k = x2 + sum y_i^2`` (``sum y_i^2`` when ``n = 3``) and
    ``Sq^1 k`` computed with ``Sq^1 x2 = 0``."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n == 3:
        ring = GradedRing.of([(y, 1) for y in _y_names(3)])
        ys = [ring.var(y) for y in _y_names(3)]
        gens = [ys[i] * ys[j] for i in range(3) for j in range(i + 1, 3)]
        k = sum((y * y for y in ys), ring.zero())
    else:
        ny = 2 ** (n - 2)
        ring = GradedRing.of([("x1", 1), ("x2", 2)] + [(y, 1) for y in _y_names(ny)])
        x1, x2 = ring.var("x1"), ring.var("x2")
        ys = [ring.var(y) for y in _y_names(ny)]
        gens = [x1 * x1] + [x * y for x in (x1, x2) for y in ys]
        gens += [ys[i] * ys[j] for i in range(ny) for j in range(i + 1, ny)]
        k = x2 + sum((y * y for y in ys), ring.zero())
    table = {"x2": ring.zero()} if n > 3 else {}
    return ExtensionDatum(ring, IdealBasis(ring, tuple(gens)), k, sq1(ring, k, table),
                          name=f"Bcom Q2^{n}")


def b3q16_extension_datum() -> ExtensionDatum:
    """``H^*(B Gamma / mu_2)`` with its k-invariant, ``Sq^1 k`` and the ``d_5`` candidate."""
    data = read_ideal_file(files("nilhom") / "data" / "appendix.ideal")
    return ExtensionDatum(data.ring, data.ideal, data.named["k"], data.named["sq1k"],
                          data.named.get("d5"), name="B(3,Q16)")
