import pytest
from hypothesis import given, settings, strategies as st

from nilhom.f2_groebner import (ORDERS, BinaryPoly, GradedRing, IdealBasis, ParseError,
                                QuotientOracle, colon_ideal, exact_divide, format_ideal_file,
                                groebner_basis, hilbert_function, ideal_equal, minimalize,
                                monomials_of_degree, normal_form, parse_ideal_text,
                                parse_polynomial, parse_ring_header, read_ideal_file)
from nilhom.spectral import b3q16_extension_datum

R3 = GradedRing.of([("y1", 1), ("y2", 1), ("y3", 1)])
SMALL = GradedRing.of([("x", 1), ("y", 1), ("z", 1), ("w", 2)])


def poly(ring, text):
    return parse_polynomial(ring, text)


def ideal(ring, *texts):
    return IdealBasis(ring, tuple(poly(ring, t) for t in texts))


@pytest.fixture(scope="module")
def appendix():
    return b3q16_extension_datum()


# -- parsing -----------------------------------------------------------------------------------

def test_parse_examples(appendix):
    p = poly(R3, "y1*y2 + y3^2")
    assert len(p.terms) == 2
    assert poly(R3, "y1 + y1").is_zero()
    assert poly(R3, "3*y1 + 2*y2") == poly(R3, "y1")
    assert poly(R3, "y1 - y2") == poly(R3, "y1 + y2")
    assert poly(R3, "1") == R3.one() and poly(R3, "0") == R3.zero()
    assert poly(R3, " y1 ^ 2 * y2 ") == poly(R3, "y1*y1*y2")
    k = poly(appendix.ring, "z + b1 + y1^2 + b2 + y2^2")
    assert k == appendix.k and k.is_homogeneous() and k.degree() == 2


@pytest.mark.parametrize("text,pos", [("y1 + q", 5), ("y1 +", 4), ("y1 ** y2", 4), ("y1 $ y2", 3),
                                      ("y1^", 3), ("(y1)", 0)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        poly(R3, text)
    assert exc.value.pos == pos
    assert "position" in str(exc.value)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), max_size=6))
def test_format_parse_round_trip(monos):
    p = BinaryPoly(R3, frozenset())
    for m in monos:
        p = p + BinaryPoly(R3, frozenset({m}))
    for order in ORDERS:
        assert poly(R3, p.format(order)) == p


def test_ring_header():
    r = parse_ring_header("ring: y1:1, b1:2")
    assert r.names == ("y1", "b1") and r.degrees == (1, 2)
    assert parse_ring_header("x:1,z:2").degrees == (1, 2)
    for bad in ("ring: y1", "ring: y1:0", "ring: y1:1, y1:1", "ring: 1y:1"):
        with pytest.raises((ParseError, ValueError)):
            parse_ring_header(bad)


# -- Groebner bases ----------------------------------------------------------------------------

def test_gb_examples(appendix):
    x = GradedRing.of([("x", 1)])
    assert groebner_basis(x, ideal(x, "x")).generators == (poly(x, "x"),)
    gb = groebner_basis(R3, ideal(R3, "y1 + y2", "y1*y2"))
    assert set(gb.generators) == {poly(R3, "y1 + y2"), poly(R3, "y2^2")}
    for order in ORDERS:
        gb = groebner_basis(appendix.ring, appendix.ideal, order)
        assert len(appendix.ideal.generators) == 11
        assert all(normal_form(g, gb).is_zero() for g in appendix.ideal.generators)


def test_gb_is_idempotent_and_reduced(appendix):
    for order in ORDERS:
        gb = groebner_basis(appendix.ring, appendix.ideal, order)
        again = groebner_basis(appendix.ring, gb.as_ideal(), order)
        assert again.generators == gb.generators
        leads = gb.leads()
        for i, g in enumerate(gb.generators):
            for j, lt in enumerate(leads):
                if i != j:
                    assert not any(all(a <= b for a, b in zip(lt, m)) for m in g.terms)
            assert g.is_homogeneous()


def test_normal_form_examples(appendix):
    gb_k = groebner_basis(appendix.ring, appendix.ideal.with_generators(appendix.k))
    assert normal_form(appendix.d5, gb_k).is_zero()
    gb = groebner_basis(appendix.ring, appendix.ideal)
    assert normal_form(appendix.ring.one(), gb) == appendix.ring.one()
    assert normal_form(poly(appendix.ring, "y1*y2"), gb).is_zero()
    assert not gb.is_unit()
    assert groebner_basis(R3, ideal(R3, "y1", "y1 + 1")).is_unit()


def test_membership_agrees_with_linear_algebra(appendix):
    ring = appendix.ring
    gb = groebner_basis(ring, appendix.ideal)
    oracle = QuotientOracle(ring, appendix.ideal.generators)
    for d in range(0, 7):
        for m in monomials_of_degree(ring, d):
            p = BinaryPoly(ring, frozenset({m}))
            assert gb.contains(p) == oracle.contains(p)
            nf = normal_form(p, gb)
            assert normal_form(nf, gb) == nf
            assert oracle.contains(p + nf)


def test_appendix_hilbert_function(appendix):
    ring = appendix.ring
    hf = hilbert_function(ring, appendix.ideal, 8).to_list()
    assert hf[:3] == [1, 3, 5]
    assert hf == QuotientOracle(ring, appendix.ideal.generators).dims(8)


def test_hilbert_examples():
    x = GradedRing.of([("x", 1)])
    assert hilbert_function(x, ideal(x, "x^2"), 4).to_list() == [1, 1, 0, 0, 0]
    r = GradedRing.of([("y1", 1), ("y2", 1), ("y3", 1), ("z", 2)])
    i = ideal(r, "y1*y2", "y1*y3", "y2*y3", "y1^2 + y2^2 + y3^2")
    assert hilbert_function(r, i, 10).to_list() == [1] + [3] * 10
    with pytest.raises(ValueError):
        hilbert_function(R3, ideal(R3, "y1 + y2^2"), 3)


def test_orders_give_same_hilbert_function(appendix):
    a = hilbert_function(appendix.ring, appendix.ideal, 8, "wdegrevlex")
    b = hilbert_function(appendix.ring, appendix.ideal, 8, "degrevlex")
    assert a == b


# -- colon ideals -------------------------------------------------------------------------------

def test_colon_examples(appendix):
    ring = appendix.ring
    for order in ORDERS:
        assert colon_ideal(ring, appendix.ideal, appendix.k, order).is_zero()
        ann = colon_ideal(ring, appendix.ideal.with_generators(appendix.k), appendix.sq1_k, order)
        assert [g.format() for g in ann.generators] == ["y3"]
    assert colon_ideal(R3, IdealBasis(R3, ()), R3.one()).is_zero()
    with pytest.raises(ValueError):
        colon_ideal(R3, IdealBasis(R3, ()), R3.zero())


def test_colon_small_examples():
    # (x^2 y) : x = (x y), and modulo nothing else
    r = GradedRing.of([("x", 1), ("y", 1)])
    ann = colon_ideal(r, ideal(r, "x^2*y"), poly(r, "x"))
    assert ideal_equal(r, ann + ideal(r, "x^2*y"), ideal(r, "x*y"))
    # x + y is coprime to both factors of x y, so it is a non-zero-divisor
    assert colon_ideal(r, ideal(r, "x*y"), poly(r, "x + y")).is_zero()
    ann = colon_ideal(r, ideal(r, "x*y", "x^2"), poly(r, "x"))
    assert ideal_equal(r, ann + ideal(r, "x*y", "x^2"), ideal(r, "x", "y"))


def colon_matches_oracle(ring, base, f, max_degree):
    ann = colon_ideal(ring, base, f)
    gbI = groebner_basis(ring, base)
    for g in ann.generators:
        assert normal_form(g * f, gbI).is_zero()
    oracle = QuotientOracle(ring, base.generators)
    h_base = hilbert_function(ring, gbI, max_degree)
    h_ann = hilbert_function(ring, base + ann, max_degree)
    for d in range(max_degree + 1):
        assert h_base[d] - h_ann[d] == oracle.annihilator_dim(f, d)


def test_colon_matches_linear_algebra_on_appendix(appendix):
    ring = appendix.ring
    colon_matches_oracle(ring, appendix.ideal, appendix.k, 8)
    colon_matches_oracle(ring, appendix.ideal.with_generators(appendix.k), appendix.sq1_k, 8)


def test_sq1k_annihilator_in_e2(appendix):
    ann = colon_ideal(appendix.ring, appendix.ideal, appendix.sq1_k)
    assert [g.format() for g in ann.generators] == ["y3"]
    colon_matches_oracle(appendix.ring, appendix.ideal, appendix.sq1_k, 7)


@st.composite
def homogeneous(draw, ring, degrees=(1, 2, 3)):
    d = draw(st.sampled_from(degrees))
    monos = monomials_of_degree(ring, d)
    chosen = draw(st.sets(st.sampled_from(monos), min_size=1, max_size=4))
    return BinaryPoly(ring, frozenset(chosen))


@settings(max_examples=40, deadline=None)
@given(st.lists(homogeneous(SMALL), min_size=1, max_size=4), homogeneous(SMALL, (1, 2)))
def test_random_ideals_against_oracle(gens, f):
    base = IdealBasis(SMALL, tuple(gens))
    gb = groebner_basis(SMALL, base)
    oracle = QuotientOracle(SMALL, gens)
    assert hilbert_function(SMALL, gb, 6).to_list() == oracle.dims(6)
    assert all(oracle.contains(g) for g in gb.generators)
    assert groebner_basis(SMALL, gb.as_ideal()).generators == gb.generators
    other = groebner_basis(SMALL, base, "degrevlex")
    assert hilbert_function(SMALL, other, 6) == hilbert_function(SMALL, gb, 6)
    if not gb.contains(f):
        colon_matches_oracle(SMALL, base, f, 5)


def test_exact_divide_and_minimalize():
    r = GradedRing.of([("x", 1), ("y", 1)])
    f = poly(r, "x + y")
    assert exact_divide(poly(r, "x^2 + y^2"), f) == f
    with pytest.raises(ArithmeticError):
        exact_divide(poly(r, "x^2 + x*y + y^2"), f)
    kept = minimalize(r, IdealBasis(r, ()), [poly(r, "x"), poly(r, "x*y"), poly(r, "y^2")])
    assert kept == [poly(r, "x"), poly(r, "y^2")]


# -- ideal files ---------------------------------------------------------------------------------

def test_ideal_file_round_trip(tmp_path, appendix):
    text = format_ideal_file(appendix.ring, appendix.ideal.generators,
                             {"k": appendix.k, "sq1k": appendix.sq1_k})
    path = tmp_path / "a.ideal"
    path.write_text("# comment line\n" + text, encoding="utf-8")
    back = read_ideal_file(path)
    assert back.ring == appendix.ring
    assert back.ideal.generators == appendix.ideal.generators
    assert back.named["k"] == appendix.k and back.named["sq1k"] == appendix.sq1_k


def test_ideal_file_errors():
    with pytest.raises(ParseError):
        parse_ideal_text("y1*y2\n")
    with pytest.raises(ParseError) as exc:
        parse_ideal_text("ring: y1:1\ny1 + q\n", "f.ideal")
    assert "f.ideal:2" in str(exc.value)
    assert parse_ideal_text("ring: y1:1\n\n# only comments\n").ideal.is_zero()
    # a name that is also a variable is not a label
    f = parse_ideal_text("ring: y1:1, k:1\nk + y1\nd5: y1^2\n")
    assert f.ideal.generators == (parse_polynomial(f.ring, "k + y1"),) and "d5" in f.named
