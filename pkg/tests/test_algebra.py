import pytest
from hypothesis import given, strategies as st

from altlink.algebra import (
    HalfInt,
    LaurentPoly,
    equal_up_to_unit,
    format_poly,
    parse_poly,
    poly_add,
    poly_is_monic,
    poly_mul_monomial,
    poly_symmetrize,
)
from altlink.errors import NotSymmetrizable, ZeroPolynomial

t = LaurentPoly.monomial(1, 1)
one = LaurentPoly.constant(1)


def P(text):
    return parse_poly(text)


polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPoly)


class TestHalfInt:
    def test_parse_and_str(self):
        assert str(HalfInt.parse("3/2")) == "3/2"
        assert str(HalfInt.parse("-1/2")) == "-1/2"
        assert str(HalfInt.parse("2")) == "2"
        assert HalfInt.parse("4/2") == 2

    def test_rejects_other_denominators(self):
        with pytest.raises(ValueError):
            HalfInt.parse("1/3")

    def test_arithmetic(self):
        h = HalfInt(1)
        assert h + h == 1
        assert (h + 1).twice == 3
        assert -h < 0 < h
        assert not h.is_integer
        assert HalfInt(4).is_integer and int(HalfInt(4)) == 2

    def test_int_of_half_raises(self):
        with pytest.raises(ValueError):
            int(HalfInt(1))


class TestPolyAdd:
    def test_inverse(self):
        half = LaurentPoly.monomial(1, HalfInt(1))
        assert poly_add(half, -half) == LaurentPoly()
        assert not poly_add(half, -half)

    def test_direct(self):
        assert poly_add(t - 1, one + P("t^-1")) == P("t + t^-1")

    def test_identity(self):
        p = LaurentPoly.monomial(3, HalfInt(3))
        assert poly_add(p, LaurentPoly()) == p


class TestMulMonomial:
    def test_shift(self):
        assert poly_mul_monomial(t - 1, 1, HalfInt(-1)) == P("t^(1/2) - t^(-1/2)")

    def test_negate(self):
        p = P("2*t^3 - t")
        assert poly_mul_monomial(p, -1, 0) == -p

    def test_zero(self):
        assert poly_mul_monomial(LaurentPoly(), 1, HalfInt(5)) == LaurentPoly()

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            poly_mul_monomial(t, 2, 0)


class TestSymmetrize:
    def test_centering(self):
        assert poly_symmetrize(t * t - t) == P("t^(1/2) - t^(-1/2)")

    def test_sign_fix(self):
        assert poly_symmetrize(-P("t - 1 + t^-1")) == P("t - 1 + t^-1")

    def test_even_gap(self):
        assert poly_symmetrize(t * t + 1) == P("t + t^-1")

    def test_asymmetric_support(self):
        with pytest.raises(NotSymmetrizable):
            poly_symmetrize(P("t^3 + t + 1"))

    def test_zero_passes_through(self):
        assert poly_symmetrize(LaurentPoly()) == LaurentPoly()


class TestMonic:
    def test_examples(self):
        assert poly_is_monic(P("t - 1 + t^-1"))
        assert not poly_is_monic(P("2*t - 3 + 2*t^-1"))
        assert poly_is_monic(one)

    def test_zero(self):
        with pytest.raises(ZeroPolynomial):
            poly_is_monic(LaurentPoly())


def test_equal_up_to_unit_distinguishes():
    assert not equal_up_to_unit(P("t - 1 + t^-1"), P("-t + 3 - t^-1"))
    assert equal_up_to_unit(P("t^3 + t + 1"), P("-t - t^-1 - t^-2"))


class TestFormat:
    @pytest.mark.parametrize("text", [
        "t^1 - 1 + t^-1", "2*t^(3/2) - t^(1/2)", "-t^2 + 3 - t^-2", "0", "1",
    ])
    def test_round_trip(self, text):
        assert format_poly(parse_poly(text)) == text

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_poly("t^^2")


class TestDivexact:
    def test_exact(self):
        p = (t - 1) * (t + 1)
        assert p.divexact(t - 1) == t + 1

    def test_inexact(self):
        with pytest.raises(ValueError):
            (t * t + 1).divexact(t - 1)

    def test_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            t.divexact(LaurentPoly())


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_symmetrize_idempotent(p):
    try:
        s = poly_symmetrize(p)
    except NotSymmetrizable:
        return
    assert poly_symmetrize(s) == s
    assert equal_up_to_unit(s, p)


@given(polys, st.integers(-6, 6), st.sampled_from([1, -1]))
def test_unit_multiples_are_equal(p, shift, sign):
    assert equal_up_to_unit(p, poly_mul_monomial(p, sign, HalfInt(shift)))


@given(polys, st.integers(-6, 6), st.sampled_from([1, -1]))
def test_monomial_inverse(p, shift, sign):
    q = poly_mul_monomial(poly_mul_monomial(p, sign, HalfInt(shift)), sign, HalfInt(-shift))
    assert q == p


@given(polys, polys)
def test_divexact_inverts_mul(a, b):
    if b:
        assert (a * b).divexact(b) == a


@given(polys)
def test_format_round_trip(p):
    assert parse_poly(format_poly(p)) == p
