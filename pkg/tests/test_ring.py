import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_tutte.ring import (
    SIGNED_VARS,
    UNSIGNED_VARS,
    LaurentZ,
    ParseError,
    PolyZ,
    UsageError,
    format_poly,
    laurent_reexpress,
    parse_laurent,
    parse_poly,
    poly_substitute,
    quarter_to_t,
)

P = parse_poly
v = PolyZ.var

exps = st.tuples(*[st.integers(0, 2)] * 8)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(PolyZ)
small_exps = st.tuples(*[st.integers(0, 1)] * 8)
small_polys = st.dictionaries(small_exps, st.integers(-3, 3), max_size=3).map(PolyZ)
laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentZ)


def test_difference_of_squares():
    x, y = v("x+"), v("y+")
    assert (x + y) * (x - y) == P("x+^2 - y+^2")


def test_identities():
    p = P("3*x+*B- - y-^2")
    assert p + 0 == p
    assert p * 1 == p
    assert p + PolyZ.const(0) == p


def test_binomial_cube():
    assert (v("A+") + v("B+")) ** 3 == P("A+^3 + 3*A+^2*B+ + 3*A+*B+^2 + B+^3")


def test_zero_coefficients_dropped():
    p = P("x+ - x+")
    assert p.is_zero() and not p.terms


def test_varset_mismatch():
    with pytest.raises(UsageError):
        v("x+") + PolyZ.var("x", UNSIGNED_VARS)


def test_substitute_cubes():
    p = P("y+*y-")
    out = poly_substitute(p, {"y+": v("y+") ** 3, "y-": v("y-") ** 3})
    assert out == P("y+^3*y-^3")


def test_substitute_identity_and_annihilate():
    p = P("x+*B- + y+*A-")
    assert poly_substitute(p, {}) == p
    assert poly_substitute(p, {"x+": 0, "y+": 0}).is_zero()


def test_substitute_missing_image():
    p = P("x+*y-")
    with pytest.raises(UsageError):
        poly_substitute(p, {"x+": PolyZ.var("x", UNSIGNED_VARS)})


def test_big_coefficient_roundtrip():
    c = 101497138129454
    p = PolyZ.const(c) * v("x+") * c
    assert p.coefficient({"x+": 1}) == c * c
    assert P(format_poly(p)) == p


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys, st.lists(small_polys, min_size=8, max_size=8))
def test_substitution_is_homomorphism(a, b, images):
    m = dict(zip(SIGNED_VARS, images))
    s = lambda p: poly_substitute(p, m)
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_format_parse_roundtrip(p):
    assert P(str(p)) == p


@settings(max_examples=80, deadline=None)
@given(laurents)
def test_laurent_format_parse_roundtrip(p):
    assert parse_laurent(str(p)) == p


def test_format_examples():
    assert str(P("y+ A-  +  B- x+")) == "x+*B- + y+*A-"
    assert str(P("0")) == "0"
    assert str(P("1")) == "1"
    assert str(P("2 x+^2 B-")) == "2*x+^2*B-"


@pytest.mark.parametrize("bad", ["x+^", "x+ + * y+", "q+", "x+^-1", "(x+)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_grlex_order():
    p = P("A+ + x+^2 + x+*y+ + 1")
    assert str(p) == "x+^2 + x+*y+ + A+ + 1"


# ---------------------------------------------------------------- Laurent

A = lambda k, c=1: LaurentZ({k: c})


def test_kink_normalisation():
    assert A(-3, -1) * A(3, -1) == 1


def test_breadth():
    assert (A(19) + A(-9)).breadth() == 28
    with pytest.raises(ArithmeticError):
        LaurentZ().breadth()


def test_negative_power_of_monomial():
    assert A(-3, -1) ** -2 == A(6)
    with pytest.raises(UsageError):
        (A(1) + A(2)) ** -1


def test_reexpress_to_t():
    q = laurent_reexpress(A(-8) - A(-12, 2), -1, "q")
    assert quarter_to_t(q) == parse_laurent("t^2 - 2*t^3", "t")
    assert quarter_to_t(LaurentZ.const(1).reexpress(-1, "q")) == LaurentZ.const(1, "t")
    with pytest.raises(ArithmeticError):
        quarter_to_t(A(-2).reexpress(-1, "q"))


def test_laurent_shift():
    p = parse_laurent("A^2 - 3")
    assert p.shift(-3, -1) == parse_laurent("-A^-1 + 3*A^-3")


def test_dense_coefficients():
    assert parse_laurent("A^2 - A^-1").coefficients() == [-1, 0, 0, 1]


def test_laurent_var_mismatch():
    with pytest.raises(UsageError):
        LaurentZ.const(1, "A") + LaurentZ.const(1, "t")
