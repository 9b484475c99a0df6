import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from incgamneg.gammasupport import NearIntegerSplit, near_integer_decompose
from incgamneg.results import DomainError, Method, Status
from incgamneg.series import gstar_exact_negint, gstar_series_neg_eps, gstar_series_pos
from incgamneg.uae import dawson

from conftest import mp_gstar, rel_err


class TestSeriesPos:
    def test_a1(self):
        r = gstar_series_pos(1.0, 2.0)
        assert r.converged
        assert rel_err(r.value, (mpmath.e**2 - 1) / 2) <= 1e-15

    def test_a2(self):
        assert abs(gstar_series_pos(2.0, 1.0).value - 1.0) <= 1e-15

    def test_half_ties_to_dawson(self):
        # gamma*(1/2, -x) = 2 e^x F(sqrt x) / sqrt(pi x)
        v = gstar_series_pos(0.5, 1.0).value
        via_dawson = 2.0 * math.e * dawson(1.0) / math.sqrt(math.pi)
        with mpmath.workdps(40):
            exact = mpmath.erfi(1)  # F(1) = sqrt(pi)/2 e^-1 erfi(1)
        assert rel_err(v, exact) <= 1e-15
        assert abs(v - via_dawson) <= 4e-16 * v
        assert v == pytest.approx(1.6504257588, abs=1e-10)

    @given(st.floats(min_value=1e-6, max_value=500.0), st.floats(min_value=1e-3, max_value=500.0))
    def test_partial_sums_increase_and_value_positive(self, a, x):
        trace: list[float] = []
        r = gstar_series_pos(a, x, trace=trace)
        # strictly increasing in exact arithmetic; in floating point a term
        # below half an ulp leaves the sum unchanged
        assert all(b >= c for b, c in zip(trace[1:], trace[:-1]))
        assert trace[1] > trace[0]
        assert r.value >= 0.0
        if r.status is Status.OK:
            assert r.value > 0.0

    @given(st.floats(min_value=1e-3, max_value=200.0), st.floats(min_value=1e-3, max_value=100.0))
    def test_term_bound(self, a, x):
        assert gstar_series_pos(a, x).terms <= 400

    @given(st.floats(min_value=1e-3, max_value=500.0), st.floats(min_value=1e-3, max_value=500.0))
    def test_against_reference(self, a, x):
        r = gstar_series_pos(a, x)
        if r.status is Status.OK:
            assert rel_err(r.value, mp_gstar(a, -x)) <= 1e-14

    def test_domain(self):
        with pytest.raises(DomainError):
            gstar_series_pos(-1.0, 1.0)


class TestSeriesNegEps:
    def test_limit_matches_monomial(self):
        for eps in (1e-15, -1e-15):
            r = gstar_series_neg_eps(NearIntegerSplit(3, eps), -2.0)
            assert abs(r.value + 8.0) <= 1e-13 * 8.0

    def test_small_n0(self):
        r = gstar_series_neg_eps(near_integer_decompose(-0.3), -1.0)
        assert rel_err(r.value, mp_gstar(-0.3, -1.0)) <= 1e-15

    def test_near_pole(self):
        a = -2.0 + 1e-8
        s = near_integer_decompose(a)
        assert s.n == 2
        r = gstar_series_neg_eps(s, -5.0)
        assert rel_err(r.value, mp_gstar(a, -5.0)) <= 1e-13

    def test_eps_zero_rejected(self):
        with pytest.raises(DomainError):
            gstar_series_neg_eps(NearIntegerSplit(3, 0.0), -2.0)

    @given(st.floats(min_value=-5.0, max_value=-1e-9), st.floats(min_value=-100.0, max_value=-1e-3))
    def test_against_reference(self, a, z):
        # the function can be a few hundred times smaller than its series
        # terms here, so the bound is the library-wide one
        s = near_integer_decompose(a)
        if s.eps == 0.0:
            return
        r = gstar_series_neg_eps(s, z)
        if r.status is Status.OK:
            assert rel_err(r.value, mp_gstar(a, z)) <= 5e-13

    @given(st.floats(min_value=-500.0, max_value=-1e-9), st.floats(min_value=-1.5, max_value=-1e-3))
    def test_against_reference_small_z(self, a, z):
        s = near_integer_decompose(a)
        if s.eps == 0.0:
            return
        r = gstar_series_neg_eps(s, z)
        if r.status is Status.OK:
            assert rel_err(r.value, mp_gstar(a, z)) <= 1e-13

    @given(st.integers(min_value=0, max_value=5), st.floats(min_value=-100.0, max_value=-1e-3),
           st.sampled_from([1e-12, -1e-12]))
    def test_eps_continuity(self, n, z, eps):
        # the function itself moves by about eps * d/da away from z^n, so the
        # check is against the true value and against linear approach to z^n
        r = gstar_series_neg_eps(NearIntegerSplit(n, eps), z)
        with mpmath.workdps(40):
            a_exact = mpmath.mpf(-n) + mpmath.mpf(eps)
        assert rel_err(r.value, mp_gstar(a_exact, z)) <= 1e-13
        far = gstar_series_neg_eps(NearIntegerSplit(n, 1000 * eps), z).value
        zn = z**n
        d_near, d_far = r.value - zn, far - zn
        if abs(d_far) > 1e-9 * abs(zn):
            assert d_near / d_far == pytest.approx(1e-3, rel=2e-2)


class TestExactNegint:
    def test_zero(self):
        r = gstar_exact_negint(0, -7.0)
        assert r.value == 1.0 and r.method is Method.EXACT_NEGINT

    def test_cube(self):
        assert gstar_exact_negint(3, -2.0).value == -8.0

    def test_overflow(self):
        r = gstar_exact_negint(500, -500.0)
        assert r.status is Status.OVERFLOW
        assert r.value == 1.7976931348623157e308  # even power: positive sentinel

    def test_underflow(self):
        r = gstar_exact_negint(301, -0.01)
        assert r.status is Status.UNDERFLOW and r.value == 0.0
        assert math.copysign(1.0, r.value) == -1.0

    @given(st.integers(min_value=0, max_value=280), st.floats(min_value=-500.0, max_value=-1e-3))
    def test_within_half_ulp_of_exact(self, n, z):
        r = gstar_exact_negint(n, z)
        exact = mpmath.mpf(z) ** n
        if r.status is Status.OK:
            err = abs(mpmath.mpf(r.value) - exact) / mpmath.mpf(math.ulp(r.value))
            assert err <= 0.5 + 1e-9
