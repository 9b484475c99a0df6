import math

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def mp_gstar(a, z, dps: int = 40):
    """Independent reference: gamma*(a, z) = M(a, a+1, -z) / Gamma(a+1)."""
    if a != 0:
        # a + 1 must keep every digit of a tiny a
        dps += max(0, -int(mpmath.log10(abs(mpmath.mpf(a)))))
    with mpmath.workdps(dps):
        am = mpmath.mpf(a)
        zm = mpmath.mpf(z)
        if a <= 0 and a == math.floor(a):
            return zm ** int(-a)
        return mpmath.hyp1f1(am, am + 1, -zm) * mpmath.rgamma(am + 1)


def mp_gtilde(a_pos, z_pos, dps: int = 40):
    """Normalized function recovered from the reference by inverting its definition."""
    with mpmath.workdps(dps):
        a, z = mpmath.mpf(a_pos), mpmath.mpf(z_pos)
        g = mp_gstar(-a, -z, dps)
        return (g - z**a * mpmath.cospi(a)) / (mpmath.sinpi(a) * mpmath.gamma(a) * mpmath.exp(z))


def rel_err(approx: float, exact) -> float:
    with mpmath.workdps(40):
        exact = mpmath.mpf(exact)
        if exact == 0:
            return 0.0 if approx == 0.0 else math.inf
        return float(abs((mpmath.mpf(approx) - exact) / exact))


@pytest.fixture
def ref():
    return mp_gstar


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
