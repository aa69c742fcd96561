from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncgq.constants import CONNECTION_PRINTED, LAMBDA_C, MU, RHO, TWO_Q2
from ncgq.scalars import (
    DegenerateDenominator,
    GaussianRational,
    PoleError,
    PolyQ,
    RationalFunctionQ,
    format_gaussian,
    parse_gaussian,
    q_root,
    rf,
)

I = q_root("i")


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


class TestGaussianRational:
    def test_mu_at_root(self):
        # 1 - q^-2 with q^2 = -1
        q = I
        assert GaussianRational(1) - (q * q).inverse() == gr(2)
        assert MU.evaluate_at(q) == gr(2)

    def test_two_q_squared_vanishes_at_root(self):
        assert TWO_Q2.evaluate_at(I) == gr(0)

    def test_lambda_constant_at_root(self):
        # (1+2q+2q^2)/(-2+2q^2+q^3) at q = i
        assert LAMBDA_C.evaluate_at(I) == GaussianRational("2/17", "-9/17")

    @given(gaussians, gaussians, gaussians)
    @settings(max_examples=1000, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)

    @given(nonzero_gaussians)
    @settings(max_examples=1000, deadline=None)
    def test_multiplicative_inverse(self, a):
        assert a * a.inverse() == gr(1)

    def test_division_by_zero(self):
        with pytest.raises(DegenerateDenominator):
            gr(1) / gr(0)

    @given(gaussians)
    def test_serialization_roundtrip(self, a):
        assert parse_gaussian(format_gaussian(a)) == a

    def test_format_examples(self):
        assert format_gaussian(gr(0)) == "0"
        assert format_gaussian(GaussianRational("-11/17", "7/17")) == "-11/17+7/17*i"
        assert format_gaussian(GaussianRational(0, -1)) == "-1*i"

    def test_root_powers(self):
        for mode in ("i", "-i"):
            q = q_root(mode)
            assert q ** 4 == gr(1)
            assert q ** 2 != gr(1)


class TestRationalFunctionQ:
    def test_trivial_cancellation(self):
        f = rf([1, 1], [1, 1])  # (1+q)/(1+q)
        assert f.evaluate_at(1) == gr(1)
        assert f == RationalFunctionQ.constant(1)

    def test_rho_at_root(self):
        assert RHO.evaluate_at(I) == GaussianRational("3/2", "1/2")

    def test_connection_entry_at_one(self):
        # (4+6+5+3)/(5-4+2)
        assert CONNECTION_PRINTED[("a", "a")].evaluate_at(1) == gr(6)

    def test_pole_error(self):
        f = rf([1], [1, 1])  # 1/(1+q)
        with pytest.raises(PoleError):
            f.evaluate_at(-1)

    def test_denominator_monic_and_reduced(self):
        f = rf([2, 2], [4])  # (2+2q)/4 -> (1/2 + q/2)
        assert f.den == PolyQ([1])
        g = rf([0, 1, 1], [0, 1])  # q(1+q)/q -> 1+q
        assert g.num == PolyQ([1, 1])
        assert g.den == PolyQ([1])

    @given(st.lists(rationals, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=4))
    @settings(max_examples=100)
    def test_evaluation_is_homomorphism(self, a, b):
        fa = PolyQ(a)
        fb = PolyQ(b)
        if not fb:
            return
        f = RationalFunctionQ(fa)
        g = RationalFunctionQ(fb)
        if not g.den.evaluate(I) or not g.num.evaluate(I):
            return
        q0 = I
        assert (f + g).evaluate_at(q0) == f.evaluate_at(q0) + g.evaluate_at(q0)
        assert (f * g).evaluate_at(q0) == f.evaluate_at(q0) * g.evaluate_at(q0)
        assert (f / g).evaluate_at(q0) == f.evaluate_at(q0) / g.evaluate_at(q0)

    def test_polynomial_gcd_reduction(self):
        # (q^2-1)/(q-1) reduces to q+1
        f = rf([-1, 0, 1], [-1, 1])
        assert f.num == PolyQ([1, 1])
        assert f.den == PolyQ([1])
