"""Exact rational polynomial arithmetic: ring axioms, evaluation, encoding."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbichrom.rationalpoly import ONE, X, ZERO, RationalPoly, x_minus_one_pow

fractions_st = st.fractions(
    min_value=-9, max_value=9, max_denominator=6
)
polys_st = st.lists(fractions_st, min_size=0, max_size=9).map(RationalPoly)
points_st = st.fractions(min_value=-5, max_value=5, max_denominator=4)


class TestCanonicalForm:
    def test_trailing_zeros_are_stripped(self):
        assert RationalPoly([1, 2, 0, 0]) == RationalPoly([1, 2])
        assert RationalPoly([0, 0]) == ZERO
        assert RationalPoly([]).degree() == -1

    def test_degree_and_leading_coefficient(self):
        p = RationalPoly([3, 0, Fraction(1, 2)])
        assert p.degree() == 2
        assert p.leading_coefficient() == Fraction(1, 2)
        assert ZERO.degree() == -1

    def test_scalar_equality(self):
        assert RationalPoly([5]) == 5
        assert RationalPoly([Fraction(1, 3)]) == Fraction(1, 3)
        assert ZERO == 0
        assert ONE == 1
        assert X != 1

    @given(polys_st)
    def test_hash_consistent_with_equality(self, p):
        assert hash(p) == hash(RationalPoly(list(p.coeffs)))


class TestRingAxioms:
    @given(polys_st, polys_st)
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(polys_st, polys_st, polys_st)
    def test_addition_associates(self, p, q, r):
        assert (p + q) + r == p + (q + r)

    @given(polys_st)
    def test_additive_identity_and_inverse(self, p):
        assert p + ZERO == p
        assert p + (-p) == ZERO
        assert p - p == ZERO

    @given(polys_st, polys_st)
    def test_multiplication_commutes(self, p, q):
        assert p * q == q * p

    @given(polys_st, polys_st, polys_st)
    def test_multiplication_associates(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(polys_st)
    def test_multiplicative_identity(self, p):
        assert p * ONE == p
        assert p * ZERO == ZERO

    @given(polys_st, polys_st, polys_st)
    def test_distributivity(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys_st, polys_st)
    def test_degree_of_product_adds(self, p, q):
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree() == p.degree() + q.degree()

    @given(polys_st, st.integers(min_value=-7, max_value=7))
    def test_scalar_multiplication_matches_constant_poly(self, p, c):
        assert c * p == RationalPoly([c]) * p
        assert p * c == c * p


class TestEvaluation:
    @given(polys_st, polys_st, points_st)
    def test_evaluation_respects_ring_operations(self, p, q, x):
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)
        assert (-p)(x) == -p(x)

    @given(polys_st)
    def test_constant_term_is_value_at_zero(self, p):
        assert p(0) == p.coefficient(0)

    def test_returns_exact_fractions(self):
        p = RationalPoly([Fraction(1, 3), Fraction(1, 2)])
        value = p(Fraction(1, 5))
        assert value == Fraction(1, 3) + Fraction(1, 10)
        assert isinstance(value, Fraction)


class TestPower:
    @given(polys_st, st.integers(min_value=0, max_value=4))
    def test_matches_repeated_multiplication(self, p, k):
        expected = ONE
        for _ in range(k):
            expected = expected * p
        assert p ** k == expected

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            X ** -1

    @given(st.integers(min_value=0, max_value=9))
    def test_x_minus_one_pow_binomial_coefficients(self, d):
        p = x_minus_one_pow(d)
        assert p.degree() == d
        for i in range(d + 1):
            assert p.coefficient(i) == (-1) ** (d - i) * math.comb(d, i)

    def test_x_minus_one_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            x_minus_one_pow(-1)


class TestSerialization:
    @given(polys_st)
    def test_round_trip_is_identity(self, p):
        den, ints = p.to_den_coeffs()
        assert RationalPoly.from_den_coeffs(den, ints) == p

    @given(polys_st)
    def test_common_denominator_is_lcm_of_reduced_denominators(self, p):
        den, ints = p.to_den_coeffs()
        assert den >= 1
        assert all(isinstance(c, int) for c in ints)
        denominators = [c.denominator for c in p.coeffs]
        if denominators:
            assert den == math.lcm(*denominators)
        else:
            assert den == 1
        assert [Fraction(c, den) for c in ints] == list(p.coeffs)

    def test_zero_poly_encoding(self):
        assert ZERO.to_den_coeffs() == (1, [])
        assert RationalPoly.from_den_coeffs(1, []) == ZERO

    def test_known_encoding(self):
        p = Fraction(1, 3) * RationalPoly([0, 2, -3, 1])
        assert p.to_den_coeffs() == (3, [0, 2, -3, 1])

    def test_rejects_nonpositive_denominator(self):
        with pytest.raises(ValueError):
            RationalPoly.from_den_coeffs(0, [1])
