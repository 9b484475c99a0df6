import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from incgamneg.config import Config
from incgamneg.gammasupport import TABLES, trig_pi
from incgamneg.recurrence import gstar_from_normalized, normalized_step_down
from incgamneg.results import DomainError, Status
from incgamneg.core import EvalPoint, predict_range_status, RangeStatus
from incgamneg.uae import (
    TPath,
    UaeFrame,
    alpha_coefficients,
    dawson,
    dawson_cf,
    eta_from_lambda,
    gstar_uae,
    make_frame,
    normalized_uae,
    t_large_eta,
    t_small_eta,
    uae_bracket,
)

from conftest import mp_gstar, mp_gtilde, rel_err


def mp_eta(lam):
    with mpmath.workdps(40):
        lam = mpmath.mpf(lam)
        r = mpmath.sqrt(2 * (lam - 1 - mpmath.log(lam)))
        return r if lam > 1 else -r


def mp_lambda(eta: float) -> float:
    """Invert the eta map at high precision."""
    with mpmath.workdps(40):
        e = mpmath.mpf(eta)
        g = lambda lam: lam - 1 - mpmath.log(lam) - e * e / 2  # noqa: E731
        start = 1 + e if e > -0.5 else mpmath.mpf("0.3")
        lam = mpmath.findroot(g, start)
        return float(lam)


def mp_gamma_star(a):
    with mpmath.workdps(40):
        a = mpmath.mpf(a)
        return mpmath.sqrt(a / (2 * mpmath.pi)) * mpmath.exp(a) * a ** (-a) * mpmath.gamma(a)


def dawson_maclaurin(x):
    """Sum (-1)^n 2^n x^(2n+1) / (1*3*...*(2n+1)) at 60 digits."""
    with mpmath.workdps(60):
        x = mpmath.mpf(x)
        term = x
        s = x
        n = 0
        while abs(term) > mpmath.mpf(10) ** -60 * abs(s):
            n += 1
            term *= -2 * x * x / (2 * n + 1)
            s += term
        return s


class TestEta:
    def test_one(self):
        assert eta_from_lambda(1.0) == 0.0

    @pytest.mark.parametrize("lam", [2.0, 0.5])
    def test_examples(self, lam):
        assert rel_err(eta_from_lambda(lam), mp_eta(lam)) < 1e-15

    def test_example_digits(self):
        assert eta_from_lambda(2.0) == pytest.approx(0.7833937, abs=1e-7)
        assert eta_from_lambda(0.5) == pytest.approx(-0.6215258, abs=1e-7)

    @pytest.mark.parametrize("lam", [0.0, -1.0])
    def test_domain(self, lam):
        with pytest.raises(DomainError):
            eta_from_lambda(lam)

    def test_defining_identity_random(self):
        rng = np.random.default_rng(7)
        lams = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), 100_000))
        # include the cancellation region next to 1
        lams[:2000] = 1.0 + rng.uniform(-1e-3, 1e-3, 2000)
        worst = 0.0
        with mpmath.workdps(40):
            for lam in lams:
                lam = float(lam)
                if lam == 1.0:
                    continue
                eta = eta_from_lambda(lam)
                assert math.copysign(1.0, eta) == math.copysign(1.0, lam - 1.0)
                rhs = mpmath.mpf(lam) - 1 - mpmath.log(mpmath.mpf(lam))
                lhs = mpmath.mpf(eta) ** 2 / 2
                ulp = math.ulp(float(rhs))
                worst = max(worst, float(abs(lhs - rhs)) / ulp)
        assert worst <= 4.0

    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    def test_monotone(self, l1, l2):
        if l1 < l2:
            assert eta_from_lambda(l1) <= eta_from_lambda(l2)

    def test_frame_fields(self):
        f = make_frame(10.0, 25.0)
        assert f.lam == 2.5
        assert f.gamma_star_a == pytest.approx(float(mp_gamma_star(10.0)), rel=1e-15)


class TestDawson:
    def test_zero(self):
        assert dawson(0.0) == 0.0

    def test_tiny(self):
        assert abs(dawson(1e-8) - 1e-8) <= math.ulp(1e-8)

    def test_one(self):
        v = dawson(1.0)
        assert v == pytest.approx(0.5380795069, abs=1e-10)
        assert rel_err(v, dawson_maclaurin(1.0)) < 1e-15

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0])
    def test_ode(self, x):
        h = 1e-5
        d = (dawson(x + h) - dawson(x - h)) / (2 * h)
        assert abs(d - (1.0 - 2.0 * x * dawson(x))) <= 1e-8

    @given(st.floats(-30.0, 30.0))
    def test_odd_bitexact(self, x):
        assert dawson(-x) == -dawson(x)
        assert dawson_cf(-x)[0] == -dawson_cf(x)[0]

    @pytest.mark.parametrize("x", np.linspace(0.01, 30.0, 40).tolist())
    def test_cf_converges(self, x):
        _, iters = dawson_cf(x)
        assert iters < 500


def ode_residual(t_of_eta, a: float, eta: float, h: float = 1e-5) -> float:
    """dT/deta + a eta T - a (f(eta) Gamma*(a) - 1) with a central difference."""
    dt = (t_of_eta(eta + h) - t_of_eta(eta - h)) / (2 * h)
    lam = mp_lambda(eta)
    f = eta / (lam - 1.0)
    gs = float(mp_gamma_star(a))
    return dt + a * eta * t_of_eta(eta) - a * (f * gs - 1.0)


def frame_at_eta(a: float, eta: float) -> UaeFrame:
    lam = mp_lambda(eta)
    return UaeFrame(a, a * lam, lam, eta, float(mp_gamma_star(a)))


class TestSmallEta:
    def test_eta_zero_structure(self):
        a = 10.0
        cfg = Config()
        alpha = alpha_coefficients(a, cfg.n_small_eta)
        t = t_small_eta(a, 0.0, cfg)
        assert t.path is TPath.SMALL_ETA
        assert t.value == pytest.approx(alpha[0] * a / (a - alpha[1]), rel=1e-15)
        with mpmath.workdps(40):
            inv = 1 / mp_gamma_star(a)
        assert abs(1.0 - alpha[1] / a - float(inv)) <= 1e-13

    @pytest.mark.parametrize("a", [5.0, 7.5, 40.0, 300.0])
    def test_alpha_one_reciprocal_gamma_star(self, a):
        alpha = alpha_coefficients(a, Config().n_small_eta)
        assert abs(1.0 - alpha[1] / a - float(1 / mp_gamma_star(a))) <= 1e-13

    def test_ode(self):
        a = 10.0
        r = ode_residual(lambda e: t_small_eta(a, e).value, a, 0.5)
        assert abs(r) <= 1e-8

    def test_against_large_path(self):
        a = 10.0
        fr = frame_at_eta(a, 0.9)
        small = t_small_eta(a, fr.eta).value
        large = t_large_eta(fr).value
        br, _ = uae_bracket(fr)
        assert abs(small - large) / a <= 1e-12 * abs(br)

    def test_domain(self):
        with pytest.raises(DomainError):
            t_small_eta(3.0, 0.1)


class TestLargeEta:
    def test_c0_example(self):
        lam = 2.0
        eta = eta_from_lambda(lam)
        c0 = 1.0 / (lam - 1.0) - 1.0 / eta
        with mpmath.workdps(40):
            exact = 1 - 1 / mp_eta(lam)
        assert rel_err(c0, exact) <= 1e-15
        assert c0 == pytest.approx(-0.2764974, abs=1e-7)
        ev = TABLES.c_evaluators[0]
        # the order-zero evaluator reproduces C0
        acc = 0.0
        for c in reversed(ev.mu_coeffs):
            acc = acc * (lam - 1.0) + c
        assert acc / (lam - 1.0) + ev.eta_coeff / eta == pytest.approx(c0, rel=1e-15)

    def test_c0_limit(self):
        fr = make_frame(5.0, 5.0 * 1e6)
        t = t_large_eta(fr, Config(eta_switch=0.5))
        assert abs(t.value) < 1.0 / fr.eta * 2

    def test_ode(self):
        a = 50.0
        eta = eta_from_lambda(3.0)
        r = ode_residual(lambda e: t_large_eta(frame_at_eta(a, e)).value, a, eta)
        assert abs(r) <= 1e-8


class TestPathAgreement:
    @pytest.mark.parametrize("a", [5.0, 10.0, 50.0, 200.0])
    def test_bracket_agreement(self, a):
        small = Config(eta_switch=2.0)
        large = Config(eta_switch=0.5)
        worst = 0.0
        for aeta in np.linspace(0.8, 1.2, 9):
            for eta in (aeta, -aeta):
                fr = frame_at_eta(a, float(eta))
                b1, t1 = uae_bracket(fr, small)
                b2, t2 = uae_bracket(fr, large)
                assert t1.path is TPath.SMALL_ETA and t2.path is TPath.LARGE_ETA
                worst = max(worst, abs(b1 - b2) / abs(b1))
        assert worst <= 1e-12


class TestGstarUae:
    @pytest.mark.parametrize("n,z", [(5, 3.0), (8, 40.0), (20, 17.0)])
    def test_integer_collapse(self, n, z):
        r = gstar_uae(make_frame(float(n), z))
        assert r.value == pytest.approx((-z) ** n, rel=1e-15)

    def test_oracle_example(self):
        r = gstar_uae(make_frame(50.5, 200.0))
        assert r.status is Status.OK
        assert rel_err(r.value, mp_gstar(-50.5, -200.0)) <= 5e-13

    def test_overflow(self):
        r = gstar_uae(make_frame(450.25, 30.0))
        assert predict_range_status(EvalPoint(-450.25, -30.0)) is RangeStatus.WILL_OVERFLOW
        assert r.status is Status.OVERFLOW

    @given(st.floats(5.0, 300.0), st.floats(2.0, 300.0))
    def test_normalized_consistency(self, a, z):
        fr = make_frame(a, z)
        r1 = gstar_uae(fr)
        r2 = gstar_from_normalized(normalized_uae(fr))
        if r1.status is Status.OK and r2.status is Status.OK and r1.value != 0.0:
            assert abs(r1.value - r2.value) <= 2e-15 * abs(r1.value)

    @given(st.floats(5.0, 300.0), st.floats(2.0, 300.0))
    def test_normalized_consistency_term_scale(self, a, z):
        # the two paths round the sin term differently; measured against the
        # power term they differ only in the last bits
        fr = make_frame(a, z)
        r1 = gstar_uae(fr)
        r2 = gstar_from_normalized(normalized_uae(fr))
        if r1.status is Status.OK and r2.status is Status.OK:
            _, c = trig_pi(a)
            scale = max(abs(r1.value), abs(c) * math.exp(min(a * math.log(z), 709.0)))
            assert abs(r1.value - r2.value) <= 2e-15 * scale

    def test_normalized_oracle_generic(self):
        nv = normalized_uae(make_frame(8.25, 150.0))
        assert rel_err(nv.gtilde, mp_gtilde(8.25, 150.0)) <= 1e-12

    def test_normalized_oracle_integer(self):
        # the definition is 0/0 at integer a; the normalized function is
        # analytic there, so a point 1e-30 away is the reference
        nv = normalized_uae(make_frame(8.0, 150.0))
        with mpmath.workdps(90):
            near = mp_gtilde(mpmath.mpf(8) + mpmath.mpf(10) ** -30, 150.0, dps=90)
        assert rel_err(nv.gtilde, near) <= 1e-12

    def test_three_steps_down(self):
        nv = normalized_uae(make_frame(6.3, 120.0))
        for j in (2, 1, 0):
            nv = normalized_step_down(nv, 3.3 + j)
        assert nv.a_pos == 3.3
        r = gstar_from_normalized(nv)
        assert rel_err(r.value, mp_gstar(-3.3, -120.0)) <= 1e-12
