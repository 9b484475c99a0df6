import math
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from incgamneg.oracle import (
    DoubleDouble,
    OracleUnavailable,
    gstar_quadrature,
    oracle_gstar,
    oracle_gstar_batch,
    quadrature_trace,
)
from incgamneg.oracle import dd

from conftest import mp_gstar

A_GRID = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 300.0]
Z_GRID = [-1.0, -5.0, -20.0, -50.0, -100.0, -300.0]


def mp_rel(v, exact) -> float:
    with mpmath.workdps(50):
        exact = mpmath.mpf(exact)
        return float(abs((v.to_mpf() - exact) / exact))


class TestSeriesOracle:
    def test_a_one(self):
        v = oracle_gstar(1.0, -2.0)
        with mpmath.workdps(50):
            assert mp_rel(v, mpmath.expm1(2) / 2) <= 1e-30
        assert v.est_error <= 1e-25

    def test_negint_exact(self):
        v = oracle_gstar(-3.0, -2.0)
        assert float(v.value.hi) == -8.0 and v.value.lo == 0.0

    def test_half_cross_route(self):
        # gamma*(1/2, -9) = 2 e^9 F(3) / (3 sqrt(pi)),  F = Dawson's integral
        with mpmath.workdps(50):
            f3 = mpmath.sqrt(mpmath.pi) / 2 * mpmath.exp(-9) * mpmath.erfi(3)
            half = 2 * mpmath.exp(9) * f3 / (3 * mpmath.sqrt(mpmath.pi))
            # gamma*(a-1, z) = z gamma*(a, z) + e^{-z} / Gamma(a)
            minus_half = -9 * half + mpmath.exp(9) / mpmath.sqrt(mpmath.pi)
        assert mp_rel(oracle_gstar(0.5, -9.0), half) <= 1e-25
        v = oracle_gstar(-0.5, -9.0)
        assert mp_rel(v, minus_half) <= 1e-25
        # the same identity with both oracle values
        with mpmath.workdps(50):
            chained = -9 * oracle_gstar(0.5, -9.0).to_mpf() + mpmath.exp(9) / mpmath.sqrt(mpmath.pi)
        assert mp_rel(v, chained) <= 1e-25

    @given(st.floats(-500.0, 500.0), st.floats(-500.0, -1e-3))
    def test_against_mpmath(self, a, z):
        try:
            v = oracle_gstar(a, z)
        except OracleUnavailable:
            return
        assert v.est_error <= 1e-25
        assert mp_rel(v, mp_gstar(a, z, 60)) <= max(1e-25, 10 * v.est_error)

    def test_batch_matches_scalar(self):
        pts = [(2.5, -3.0), (-7.25, -40.0), (-4.0, -3.0), (120.0, -480.0)]
        batch = oracle_gstar_batch([p[0] for p in pts], [p[1] for p in pts])
        for (a, z), b in zip(pts, batch):
            s = oracle_gstar(a, z)
            assert b is not None
            assert b.value == s.value

    def test_domain(self):
        with pytest.raises(ValueError):
            oracle_gstar(1.0, 1.0)


class TestQuadrature:
    def test_a_one(self):
        v = gstar_quadrature(1.0, -2.0)
        with mpmath.workdps(30):
            assert mp_rel(v, mpmath.expm1(2) / 2) <= 1e-13

    def test_a_two(self):
        assert mp_rel(gstar_quadrature(2.0, -1.0), 1) <= 1e-13

    def test_cross_oracle_example(self):
        q = gstar_quadrature(7.3, -33.0)
        s = oracle_gstar(7.3, -33.0)
        assert mp_rel(q, s.to_mpf()) <= 1e-12

    @pytest.mark.parametrize("a", A_GRID)
    @pytest.mark.parametrize("z", Z_GRID)
    def test_cross_oracle_grid(self, a, z):
        q = gstar_quadrature(a, z)
        s = oracle_gstar(a, z)
        assert mp_rel(q, s.to_mpf()) <= 1e-12

    def test_fixed_interval(self):
        v = gstar_quadrature(3.0, -4.0, t_max=4.5)
        assert mp_rel(v, mp_gstar(3.0, -4.0)) <= 1e-13

    @pytest.mark.parametrize("a,z", [(0.5, -20.0), (5.0, -100.0), (50.0, -50.0), (2.0, -300.0)])
    def test_geometric_convergence(self, a, z):
        steps = quadrature_trace(a, z, halvings=6)
        with mpmath.workdps(40):
            ref = mp_gstar(a, z) * mpmath.gamma(a) * mpmath.exp(z)
        errs = [abs(float((s.value - ref) / ref)) for s in steps]
        # asymptotic regime: from the first error below 1e-2 to the double floor
        ratios = []
        for e0, e1 in zip(errs, errs[1:]):
            if e0 < 1e-2 and e1 > 1e-14:
                ratios.append(e0 / e1)
        assert ratios, errs
        assert min(ratios) >= 1e3, errs

    @pytest.mark.parametrize("a,z", [(0.05, -1.0), (1.0, 0.0), (-1.0, -2.0)])
    def test_domain(self, a, z):
        with pytest.raises(ValueError):
            gstar_quadrature(a, z)


class TestDoubleDouble:
    def rand_dd(self, rng: random.Random):
        hi = rng.uniform(1.0, 2.0) * 2.0 ** rng.randint(-30, 30) * rng.choice((-1, 1))
        lo = rng.uniform(-0.5, 0.5) * math.ulp(hi)
        return DoubleDouble(*dd.quick_two_sum(hi, lo))

    def test_ops_against_fractions(self):
        rng = random.Random(11)
        for _ in range(3000):
            x, y = self.rand_dd(rng), self.rand_dd(rng)
            fx, fy = x.to_fraction(), y.to_fraction()
            for got, exact in (
                (x + y, fx + fy),
                (x - y, fx - fy),
                (x * y, fx * fy),
                (x / y, fx / fy),
            ):
                assert abs(got.lo) <= math.ulp(got.hi) / 2
                if exact != 0:
                    err = abs(got.to_fraction() - exact) / abs(exact)
                    assert err <= Fraction(2) ** -100

    @given(st.floats(-1e150, 1e150), st.floats(-1e150, 1e150))
    def test_two_sum_exact(self, a, b):
        s, e = dd.two_sum(a, b)
        assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)

    @given(st.floats(-1e150, 1e150), st.floats(-1e150, 1e150))
    def test_two_prod_exact(self, a, b):
        p, e = dd.two_prod(a, b)
        if abs(p) > 1e-290 or a == 0.0 or b == 0.0:
            assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)

    def test_add_sub_roundtrip_1e6(self):
        rng = np.random.default_rng(5)
        n = 1_000_000

        def draw():
            hi = rng.uniform(1.0, 2.0, n) * np.exp2(rng.integers(-20, 21, n)) * rng.choice([-1.0, 1.0], n)
            lo = rng.uniform(-0.5, 0.5, n) * np.spacing(np.abs(hi))
            return dd.quick_two_sum(hi, lo)

        ah, al = draw()
        bh, bl = draw()
        sh, sl = dd.add(ah, al, bh, bl)
        rh, rl = dd.add(sh, sl, -bh, -bl)
        # exact enough: rh - ah is exact (Sterbenz), the lo difference is tiny
        diff = (rh - ah) + (rl - al)
        # double-double ulp at the larger operand's binade: 2^-104 relative
        scale = np.maximum(np.abs(ah), np.abs(bh))
        ulp_dd = np.spacing(np.spacing(scale))
        assert np.all(np.abs(diff) <= ulp_dd)

    def test_coercion_and_float(self):
        x = DoubleDouble.from_float(1.5)
        assert float(x + 1) == 2.5
        assert float(3 - x) == 1.5
        assert float(2 / DoubleDouble.from_float(4.0)) == 0.5
        assert float(abs(-x)) == 1.5

    def test_fraction_roundtrip(self):
        q = Fraction(1, 3)
        x = DoubleDouble.from_fraction(q)
        assert abs(x.to_fraction() - q) <= Fraction(2) ** -106
