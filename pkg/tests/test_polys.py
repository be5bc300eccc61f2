"""Unit and property tests for the exact polynomial layer."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lucanomials.polys import (
    ONE,
    S,
    T,
    ZERO,
    NotDivisibleError,
    Poly,
    PolyParseError,
    divide_exact,
    parse,
    render,
)

exponents = st.integers(min_value=0, max_value=5)
coefficients = st.integers(min_value=-30, max_value=30)
poly_strategy = st.dictionaries(st.tuples(exponents, exponents), coefficients, max_size=6).map(Poly)
nonzero_polys = poly_strategy.filter(bool)
points = st.integers(min_value=-4, max_value=4)


class TestArithmetic:
    def test_add_distinct_monomials(self):
        assert S + T == parse("s + t")

    def test_add_cancellation(self):
        assert parse("s^2 + t") + parse("-t") == parse("s^2")

    def test_mul_distributes_over_variables(self):
        assert S * (S + T) == parse("s^2 + s*t")

    def test_mul_expansion(self):
        # (s^2 + t)(s^3 + 2st) expanded by hand term by term.
        assert parse("s^2 + t") * parse("s^3 + 2*s*t") == parse("s^5 + 3*s^3*t + 2*s*t^2")

    def test_pow(self):
        assert (S + T) ** 2 == parse("s^2 + 2*s*t + t^2")
        assert ZERO**0 == ONE

    def test_int_coercion(self):
        assert 1 + S - 1 == S
        assert 3 * T == parse("3*t")

    @given(poly_strategy)
    def test_additive_identity(self, p):
        assert ZERO + p == p

    @given(poly_strategy)
    def test_multiplicative_identity(self, p):
        assert ONE * p == p

    @given(poly_strategy, poly_strategy)
    def test_add_commutes(self, p, q):
        assert p + q == q + p

    @given(poly_strategy, poly_strategy)
    def test_mul_commutes(self, p, q):
        assert p * q == q * p

    @given(poly_strategy, poly_strategy, poly_strategy)
    def test_add_associates(self, p, q, r):
        assert (p + q) + r == p + (q + r)

    @given(poly_strategy, poly_strategy, poly_strategy)
    def test_mul_associates(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(poly_strategy, poly_strategy, poly_strategy)
    def test_distributivity(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(poly_strategy)
    def test_sub_is_add_neg(self, p):
        assert p - p == ZERO

    @given(poly_strategy, poly_strategy)
    def test_equal_polys_hash_equal(self, p, q):
        if p == q:
            assert hash(p) == hash(q)


class TestCanonicalForm:
    def test_no_zero_terms_stored(self):
        assert (T - T).terms == {}
        assert Poly({(1, 1): 0, (2, 0): 3}).terms == {(2, 0): 3}

    def test_duplicate_monomials_merge(self):
        assert Poly([((1, 0), 2), ((1, 0), 3)]) == parse("5*s")

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly({(-1, 0): 1})


class TestEval:
    def test_sum_of_coefficients(self):
        assert parse("s^2 + t").evaluate(1, 1) == 2

    def test_single_monomial(self):
        assert S.evaluate(2, -1) == 2

    def test_lucas_style_value(self):
        assert parse("s^3 + 2*s*t").evaluate(1, 1) == 3

    @given(poly_strategy, poly_strategy, points, points)
    def test_ring_homomorphism(self, p, q, s0, t0):
        assert (p + q).evaluate(s0, t0) == p.evaluate(s0, t0) + q.evaluate(s0, t0)
        assert (p * q).evaluate(s0, t0) == p.evaluate(s0, t0) * q.evaluate(s0, t0)


class TestDivideExact:
    def test_factor_removal(self):
        assert divide_exact(parse("s^2 + s*t"), S) == parse("s + t")

    @given(poly_strategy)
    def test_unit_divisor(self, p):
        assert divide_exact(p, ONE) == p

    def test_not_divisible(self):
        # Long division: (s^2 + t) * s = s^3 + st != s^3 + 2st.
        with pytest.raises(NotDivisibleError):
            divide_exact(parse("s^3 + 2*s*t"), parse("s^2 + t"))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(ONE, ZERO)

    def test_zero_numerator(self):
        assert divide_exact(ZERO, parse("s + t")) == ZERO

    def test_divisor_constant_in_s(self):
        assert divide_exact(parse("2*t^2 + 2*s*t"), parse("2*t")) == parse("t + s")

    def test_non_monic_exact(self):
        assert divide_exact(parse("6*s^2 + 6*s*t"), parse("2*s + 2*t")) == parse("3*s")

    def test_non_monic_integer_obstruction(self):
        # Quotient would be t/2; the leading integer division fails fast.
        with pytest.raises(NotDivisibleError):
            divide_exact(parse("s*t + t^2"), parse("2*s + 2*t"))

    @given(poly_strategy, nonzero_polys)
    def test_product_quotient_roundtrip(self, p, q):
        assert divide_exact(p * q, q) == p


class TestIsNonneg:
    def test_positive(self):
        assert parse("s^2 + t").is_nonneg()

    def test_mixed_signs(self):
        assert not parse("s - t").is_nonneg()

    def test_zero_polynomial(self):
        assert ZERO.is_nonneg()


class TestTextForm:
    def test_parse_simple(self):
        assert dict(parse("s^2 + t").terms) == {(2, 0): 1, (0, 1): 1}

    def test_render_zero(self):
        assert render(ZERO) == "0"
        assert parse("0") == ZERO

    def test_parse_full_term(self):
        assert dict(parse("3*s*t^2 - 1").terms) == {(1, 2): 3, (0, 0): -1}

    def test_parse_accepts_optional_stars(self):
        assert parse("st") == parse("s*t")
        assert parse("2*st^2") == parse("2*s*t^2")
        assert parse("s t") == parse("s*t")

    def test_leading_minus(self):
        assert parse("-s^2 + t") == T - S * S

    def test_render_order_is_graded_lex(self):
        assert render(parse("t + s^3 + s*t")) == "s^3 + s*t + t"

    @pytest.mark.parametrize(
        "text,position",
        [("s +", 2), ("^2", 0), ("s^x", 2), ("3*", 2), ("2x", 1)],
    )
    def test_parse_error_reports_position(self, text, position):
        with pytest.raises(PolyParseError) as excinfo:
            parse(text)
        assert excinfo.value.position == position

    @given(poly_strategy)
    def test_parse_render_roundtrip(self, p):
        assert parse(render(p)) == p

    @given(poly_strategy)
    def test_render_is_canonical_fixed_point(self, p):
        assert render(parse(render(p))) == render(p)


class TestJsonForm:
    def test_roundtrip(self):
        p = parse("3*s*t^2 - 1")
        assert Poly.from_json_dict(p.to_json_dict()) == p

    def test_big_coefficients_survive(self):
        p = Poly({(1, 1): 10**30, (0, 0): -(2**64)})
        encoded = p.to_json_dict()
        assert all(isinstance(term["c"], str) for term in encoded["terms"])
        assert Poly.from_json_dict(encoded) == p

    def test_malformed(self):
        with pytest.raises(ValueError):
            Poly.from_json_dict({"terms": [{"s": 1}]})
