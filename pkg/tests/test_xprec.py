import math
from fractions import Fraction

import mpmath
from hypothesis import given
from hypothesis import strategies as st

from incgamneg._xprec import (
    LOG_MAX,
    combine_scaled,
    dd_add,
    dd_div,
    dd_mul,
    exp_scaled,
    log_dd,
    two_prod,
    two_sum,
)
from incgamneg.results import Status

moderate = st.floats(min_value=-1e100, max_value=1e100, allow_nan=False, allow_infinity=False)
positive = st.floats(min_value=1e-300, max_value=1e300)


@given(moderate, moderate)
def test_two_sum_is_exact(a, b):
    s, e = two_sum(a, b)
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


mid = st.floats(min_value=1e-120, max_value=1e120) | st.floats(min_value=-1e120, max_value=-1e-120)


@given(mid, mid)
def test_two_prod_is_exact(a, b):
    p, e = two_prod(a, b)
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


@given(st.floats(min_value=1e-100, max_value=1e100), st.floats(min_value=1e-100, max_value=1e100))
def test_dd_ops_close_to_rational(a, b):
    exact = Fraction(a) * Fraction(b)
    h, l = dd_mul(a, 0.0, b, 0.0)
    assert abs(Fraction(h) + Fraction(l) - exact) <= abs(exact) * Fraction(1, 2**100)
    h, l = dd_div(a, 0.0, b, 0.0)
    exact = Fraction(a) / Fraction(b)
    assert abs(Fraction(h) + Fraction(l) - exact) <= abs(exact) * Fraction(1, 2**100)
    h, l = dd_add(a, 0.0, b, 0.0)
    assert Fraction(h) + Fraction(l) == Fraction(a) + Fraction(b)


@given(positive)
def test_log_dd_accuracy(x):
    h, l = log_dd(x)
    with mpmath.workdps(50):
        exact = mpmath.log(mpmath.mpf(x))
        assert abs(mpmath.mpf(h) + mpmath.mpf(l) - exact) <= 2.0**-64 * max(1, abs(exact))


def test_log_dd_of_one_is_zero():
    assert log_dd(1.0) == (0.0, 0.0)


def test_exp_scaled_status():
    assert exp_scaled(1.0, 2 * LOG_MAX)[1] is Status.OVERFLOW
    v, st_ = exp_scaled(-1.0, -2 * LOG_MAX)
    assert st_ is Status.UNDERFLOW and v == 0.0 and math.copysign(1.0, v) == -1.0
    v, st_ = exp_scaled(3.0, math.log(2.0))
    assert st_ is Status.OK and abs(v - 6.0) <= 4e-16 * 6


def test_combine_scaled_cancels_in_log_space():
    # 2 e^1000 - e^(1000 + ln 2) = 0; 1 e^1000 + 1 e^1000 = 2 e^1000
    m, hi, lo = combine_scaled([(1.0, 1000.0, 0.0), (1.0, 1000.0, 0.0)])
    assert abs(m * math.exp(hi - 1000.0 + lo) - 2.0) < 1e-15
