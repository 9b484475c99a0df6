import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from incgamneg import gstar
from incgamneg.recurrence import (
    NormalizedValue,
    gstar_from_normalized,
    normalized_forward_residual,
    normalized_step_down,
    rr2_residual,
    rr4_residual,
)
from incgamneg.results import DomainError, Status
from incgamneg.uae import make_frame, normalized_uae

from conftest import mp_gstar, mp_gtilde, rel_err

INV_PI = 1.0 / math.pi


def triple(a: float, z: float):
    return [gstar(-(a + k), -z).value for k in range(3)]


class TestRR4:
    @pytest.mark.parametrize("n,z", [(0, 3.0), (4, 17.5), (20, 2.25)])
    def test_monomial_triple(self, n, z):
        g = [(-z) ** (n + k) for k in range(3)]
        assert abs(rr4_residual(float(n), z, *g)) <= 1e-14

    def test_dispatcher_outputs(self):
        assert abs(rr4_residual(7.3, 12.5, *triple(7.3, 12.5))) <= 1e-11

    def test_linear_in_perturbation(self):
        a, z = 7.3, 12.5
        g0, g1, g2 = triple(a, z)
        t1 = (z + a + 1) * g1
        scale = max(abs(g2), abs(t1), abs(z * (a + 1) * g0))
        base = rr4_residual(a, z, g0, g1, g2)
        pert = rr4_residual(a, z, g0, g1 * (1 + 1e-6), g2)
        # the scale moves with g1 as well, hence the loose relative bound
        assert pert - base == pytest.approx(1e-6 * t1 / scale, rel=1e-4)

    def test_all_zero(self):
        assert rr4_residual(1.0, 1.0, 0.0, 0.0, 0.0) == 0.0


class TestRR2:
    @given(st.floats(min_value=0.01, max_value=400.0), st.floats(min_value=0.01, max_value=500.0))
    def test_dispatcher_outputs(self, a, z):
        # on a 2**-30 grid so that a + 1 is exact
        a = round(a * 2.0**30) * 2.0**-30
        assume(a != math.floor(a))
        r0, r1 = gstar(-a, -z), gstar(-(a + 1.0), -z)
        assume(r0.status is Status.OK and r1.status is Status.OK)
        assert abs(rr2_residual(a, z, r0.value, r1.value)) <= 1e-11

    def test_exact_values_give_small_residual(self):
        a, z = 2.25, 3.5
        g0, g1 = float(mp_gstar(-a, -z)), float(mp_gstar(-a - 1, -z))
        assert abs(rr2_residual(a, z, g0, g1)) <= 1e-15


class TestStepDown:
    def test_fixed_structure(self):
        nv = normalized_step_down(NormalizedValue(7.5, 30.0, INV_PI))
        assert nv.gtilde == 0.0 and nv.a_pos == 6.5

    def test_domain(self):
        with pytest.raises(DomainError):
            normalized_step_down(NormalizedValue(1.0, 3.0, 0.2))

    @given(st.floats(min_value=1.001, max_value=500.0), st.floats(min_value=1e-3, max_value=500.0),
           st.floats(min_value=-1e3, max_value=1e3))
    def test_forward_identity(self, a, z, g):
        nv = normalized_step_down(NormalizedValue(a, z, g))
        assert abs(normalized_forward_residual(nv.a_pos, z, nv.gtilde, g)) <= 2e-16

    def test_three_steps_match_reference(self):
        a0, z = 9.3, 150.0
        nv = normalized_uae(make_frame(a0, z))
        for j in (2, 1, 0):
            nv = normalized_step_down(nv, 6.3 + j)
        assert nv.a_pos == 6.3
        assert rel_err(nv.gtilde, mp_gtilde(6.3, z)) <= 1e-12

    def test_perturbation_damped(self):
        # absolute perturbations scale by prod(b_j / z) over the chain
        z, target = 100.0, 0.7
        start = normalized_uae(make_frame(target + 6, z))
        bumped = NormalizedValue(start.a_pos, z, start.gtilde + 1e-6)
        prod = 1.0
        a, b = start, bumped
        for j in range(5, -1, -1):
            a = normalized_step_down(a, target + j)
            b = normalized_step_down(b, target + j)
            prod *= (target + j) / z
        diff = abs(b.gtilde - a.gtilde)
        assert diff <= 1.01 * prod * 1e-6 + 1e-17
        assert prod < 1e-9


class TestFromNormalized:
    def test_half_integer_zero(self):
        r = gstar_from_normalized(NormalizedValue(3.5, 10.0, 0.0))
        assert r.value == 0.0

    def test_recursion_path_matches_reference(self):
        nv = normalized_uae(make_frame(6.5, 120.0))
        for b in (5.5, 4.5, 3.5, 2.5):
            nv = normalized_step_down(nv, b)
        r = gstar_from_normalized(nv)
        assert r.status is Status.OK
        assert rel_err(r.value, mp_gstar(-2.5, -120.0)) <= 1e-12

    def test_large_power_term_alone_is_not_an_overflow(self):
        # z^a alone is about e^603 (representable); the function itself is
        # about -1.06e330 because of the Gamma(a) e^z term, so the sentinel
        # with the correct sign is the right answer
        assert 100.7 * math.log(400.0) < 709.78
        nv = normalized_uae(make_frame(100.7, 400.0))
        r = gstar_from_normalized(nv)
        exact = mp_gstar(-100.7, -400.0)
        assert float(mpmath.log(abs(exact))) > 709.78
        assert r.status is Status.OVERFLOW and r.value == -1.7976931348623157e308
        # a smaller argument keeps the same assembly in range
        r = gstar_from_normalized(normalized_uae(make_frame(100.7, 100.0)))
        assert r.status is Status.OK
        assert rel_err(r.value, mp_gstar(-100.7, -100.0)) <= 5e-13
