"""Laurent polynomial / rational function unit tests."""

import pytest
from hypothesis import given, strategies as st

from skeinkit.errors import DegreeError, ExactnessError
from skeinkit.poly import (
    A, ONE, ZERO, LaurentPoly, QPresentation, RationalFn,
    exact_divide, to_q, truncate,
)

DELTA = LaurentPoly.from_dict({2: -1, -2: -1})

polys = st.builds(
    LaurentPoly.from_dict,
    st.dictionaries(st.integers(-8, 8), st.integers(-30, 30), max_size=6),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


class TestRing:
    @given(polys, polys, polys)
    def test_add_mul_axioms(self, p, q, r):
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys)
    def test_units(self, p):
        assert p + ZERO == p
        assert p * ONE == p
        assert p - p == ZERO
        assert p * ZERO == ZERO

    @given(polys)
    def test_int_coercion(self, p):
        assert p + 0 == p
        assert 1 * p == p
        assert 2 * p == p + p
        assert p - 1 == p - ONE

    @given(nonzero_polys, nonzero_polys)
    def test_degrees_multiplicative(self, p, q):
        assert (p * q).min_degree() == p.min_degree() + q.min_degree()
        assert (p * q).max_degree() == p.max_degree() + q.max_degree()

    @given(polys)
    def test_mirror_involution(self, p):
        assert p.mirror().mirror() == p

    @given(nonzero_polys, nonzero_polys)
    def test_mirror_ring_hom(self, p, q):
        assert (p * q).mirror() == p.mirror() * q.mirror()
        assert (p + q).mirror() == p.mirror() + q.mirror()

    @given(polys, st.integers(0, 5))
    def test_pow_matches_repeated_mul(self, p, n):
        expected = ONE
        for _ in range(n):
            expected = expected * p
        assert p ** n == expected

    def test_negative_pow_units_only(self):
        g = LaurentPoly.monomial(-1, 3)          # framing-style unit
        assert g ** -1 == LaurentPoly.monomial(-1, -3)
        assert g ** -2 == LaurentPoly.monomial(1, -6)
        with pytest.raises(ExactnessError):
            DELTA ** -1

    def test_zero_degree_undefined(self):
        with pytest.raises(DegreeError):
            ZERO.min_degree()
        with pytest.raises(DegreeError):
            ZERO.max_degree()


class TestExactDivide:
    @given(nonzero_polys, nonzero_polys)
    def test_roundtrip(self, p, q):
        assert exact_divide(p * q, q) == p

    def test_not_divisible(self):
        with pytest.raises(ExactnessError):
            exact_divide(A + 1, DELTA)
        with pytest.raises(ExactnessError):
            exact_divide(2 * ONE, 3 * ONE)

    def test_by_zero(self):
        with pytest.raises(ExactnessError):
            exact_divide(ONE, ZERO)


class TestRationalFn:
    def test_equality_is_cross_multiplied(self):
        half = RationalFn(DELTA, 2 * DELTA)
        assert half == RationalFn(ONE, 2 * ONE)
        assert half != RationalFn(ONE, 3 * ONE)

    @given(nonzero_polys, nonzero_polys)
    def test_mul_keeps_unreduced_factors(self, p, q):
        r = RationalFn(p, q) * RationalFn(q, p)
        assert r == 1
        # unreduced on purpose: the representation keeps both factors
        assert r.num == p * q

    def test_degree(self):
        assert RationalFn(ONE, DELTA).min_degree() == 2
        assert RationalFn(DELTA, ONE).min_degree() == -2
        with pytest.raises(DegreeError):
            RationalFn(ZERO, ONE).min_degree()

    def test_zero_denominator_rejected(self):
        with pytest.raises(ExactnessError):
            RationalFn(ONE, ZERO)

    def test_add(self):
        r = RationalFn(ONE, DELTA) + RationalFn(ONE, DELTA)
        assert r == RationalFn(2 * ONE, DELTA)


class TestTruncate:
    def test_geometric(self):
        r = RationalFn(ONE, ONE - A)
        assert truncate(r, 3) == ONE + A + A * A

    def test_reciprocal_loop_value(self):
        # 1/delta = 1/(-A^-2 - A^2) expands from its low end at degree +2.
        r = RationalFn(ONE, DELTA)
        assert truncate(r, 2) == LaurentPoly.monomial(-1, 2)
        assert truncate(r, 6) == LaurentPoly.from_dict({2: -1, 6: 1})

    @given(nonzero_polys, nonzero_polys, st.integers(1, 8))
    def test_multiply_back_window(self, p, q, k):
        """(truncate(p/q, k) * q - p) has no support below d(p/q) + k + d(q)."""
        # force a unit low coefficient so the expansion stays integral
        low = q.min_degree()
        q = LaurentPoly(tuple((e, 1 if e == low else c) for e, c in q.terms))
        r = RationalFn(p, q)
        t = truncate(r, k)
        diff = t * q - p
        if not diff.is_zero:
            assert diff.min_degree() >= r.min_degree() + k + q.min_degree()

    def test_non_integer_series_rejected(self):
        with pytest.raises(ExactnessError):
            truncate(RationalFn(ONE, 2 * ONE + A), 3)

    def test_zero_and_empty(self):
        assert truncate(RationalFn(ZERO, ONE), 5) == ZERO
        assert truncate(RationalFn(ONE, ONE), 0) == ZERO


class TestQPresentation:
    def test_frozen_example(self):
        qp = to_q(LaurentPoly.from_dict({4: -1, -4: -1}))
        assert qp.sign == -1
        assert qp.quarter_shift == 4
        assert qp.coeffs == (1, 0, 0, 0, 1)
        assert qp.is_q_integral
        assert qp.q_coeffs() == (-1, [1, 0, 1])

    def test_loop_value(self):
        qp = to_q(DELTA)
        assert (qp.sign, qp.quarter_shift, qp.coeffs) == (-1, 2, (1, 0, 1))
        assert not qp.is_q_integral          # sits on half-integer q powers

    def test_zero(self):
        qp = to_q(ZERO)
        assert qp.coeffs == ()
        assert qp.as_poly() == ZERO

    def test_odd_support_rejected(self):
        with pytest.raises(ExactnessError):
            to_q(A)

    @given(polys)
    def test_roundtrip(self, p):
        even = LaurentPoly(tuple((2 * e, c) for e, c in p.terms))
        assert to_q(even).as_poly() == even

    @given(nonzero_polys)
    def test_leading_coeff_positive(self, p):
        even = LaurentPoly(tuple((2 * e, c) for e, c in p.terms))
        qp = to_q(even)
        assert qp.coeffs[0] > 0
        assert qp.coeffs[-1] != 0
        assert qp.sign in (1, -1)

    def test_coeff_at_halfq(self):
        qp = to_q(DELTA)  # lowest q term at q^(-1/2): min_halfq = -1
        assert qp.min_halfq == -1
        assert qp.coeff_at_halfq(-1) == 1
        assert qp.coeff_at_halfq(0) == 0
        assert qp.coeff_at_halfq(1) == 1
        assert qp.coeff_at_halfq(99) == 0


class TestRendering:
    @pytest.mark.parametrize("d,text", [
        ({}, "0"),
        ({0: 1}, "1"),
        ({0: -3}, "-3"),
        ({1: 1}, "A"),
        ({1: -1}, "-A"),
        ({-1: 2}, "2*A^-1"),
        ({2: -1, -2: -1}, "-A^-2-A^2"),
        ({7: 1, 3: 1, -1: 1, -9: -1}, "-A^-9+A^-1+A^3+A^7"),
        ({0: 2, 4: -5}, "2-5*A^4"),
    ])
    def test_canonical(self, d, text):
        assert str(LaurentPoly.from_dict(d)) == text
