"""Power series for gamma*(a, z) on the negative real z axis."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._xprec import (
    FLOAT_MAX,
    LN2_HI,
    LN2_LO,
    combine_scaled,
    dd_add,
    dd_mul,
    dd_mul_d,
    exp_scaled,
    log_dd,
)
from .config import DEFAULT_CONFIG, Config
from .gammasupport import NearIntegerSplit, gamma_scaled, sinc_pi, trig_pi
from .results import ConvergenceError, DomainError, EvalResult, Method, Status

__all__ = [
    "SeriesSum",
    "gstar_series_pos",
    "gstar_series_neg_eps",
    "gstar_exact_negint",
    "TERM_CAP",
]

TERM_CAP = 10_000
# Summation stops once a term drops below this fraction of the running sum.
SUM_EPS = 2.0**-56
_BIG = 2.0**800
_DOWN = 2.0**-800


@dataclass(frozen=True)
class SeriesSum:
    value: float
    terms: int
    converged: bool
    status: Status = Status.OK


def _stop_tol(cfg: Config) -> float:
    return min(cfg.rel_tol, SUM_EPS)


def _gamma_times(aa: float) -> tuple[float, float, float]:
    """``Gamma(1 + aa) = aa * Gamma(aa)`` in scaled form, exact in the argument."""
    m, lhi, llo = gamma_scaled(aa)
    return m * aa, lhi, llo


def gstar_series_pos(
    a: float, x: float, cfg: Config = DEFAULT_CONFIG, trace: list | None = None
) -> SeriesSum:
    """``(1/Gamma(a+1)) sum_k x^k/k! * a/(a+k)`` for ``a > 0``, ``x = -z > 0``.

    All terms are positive.  ``trace``, if given, receives every partial sum.
    """
    if not (a > 0.0 and x > 0.0):
        raise DomainError("gstar_series_pos needs a > 0 and x > 0")
    tol = _stop_tol(cfg)
    t = 1.0
    s = 1.0
    shift = 0
    k = 0
    if trace is not None:
        trace.append(s)
    while True:
        k += 1
        if k > TERM_CAP:
            raise ConvergenceError(f"series did not converge for a={a}, x={x}")
        t = t * x / k
        term = t * a / (a + k)
        s += term
        if trace is not None:
            trace.append(math.ldexp(s, 800 * shift))
        # terms grow until k ~ x; with a tiny a the first term alone dwarfs them
        if k > x and term <= tol * s:
            break
        if t > _BIG:
            t *= _DOWN
            s *= _DOWN
            shift += 1
    if a < 1.0:
        m, lhi, llo = gamma_scaled(1.0 + a)
    else:
        m, lhi, llo = _gamma_times(a)
    lhi, llo = dd_add(-lhi, -llo, 800 * shift * LN2_HI, 800 * shift * LN2_LO)
    value, status = exp_scaled(s / m, lhi, llo)
    return SeriesSum(value, k + 1, True, status)


def _neg_series_scaled(split: NearIntegerSplit, x: float, cfg: Config):
    n, eps = split.n, split.eps
    aa = n - eps  # exact: -a
    tol = _stop_tol(cfg)

    # k < n: every denominator (k - n) + eps is negative.
    t = 1.0
    s_low = 0.0
    for k in range(n):
        if k:
            t = t * x / k
        s_low += t / ((k - n) + eps)
    # advance t to k = n without adding it
    if n:
        t = t * x / n
    s_high = 0.0
    k = n
    while True:
        k += 1
        if k - n > TERM_CAP:
            raise ConvergenceError(f"series did not converge for a={-aa}, x={x}")
        t = t * x / k
        term = t / ((k - n) + eps)
        s_high += term
        if k > x and term <= tol * abs(s_high + s_low):
            break
    total = s_low + s_high

    mg, lg_hi, lg_lo = _gamma_times(aa)  # Gamma(1 + n - eps)
    nf, lf_hi, lf_lo = gamma_scaled(float(n + 1))
    parity = -1.0 if n & 1 else 1.0
    # z^n Gamma(1+n-eps)/n! sinc(pi eps), with z^n = (-1)^n x^n
    lx_hi, lx_lo = log_dd(x)
    lx_hi, lx_lo = dd_mul_d(lx_hi, lx_lo, float(n))
    la_hi, la_lo = dd_add(lx_hi, lx_lo, lg_hi, lg_lo)
    la_hi, la_lo = dd_add(la_hi, la_lo, -lf_hi, -lf_lo)
    first = (parity * mg / nf * sinc_pi(eps), la_hi, la_lo)
    # 1/Gamma(-n+eps) = (-1)^n sin(pi eps) Gamma(1+n-eps) / pi
    s_eps, _ = trig_pi(eps)
    rest = (parity * s_eps * mg / math.pi * total, lg_hi, lg_lo)
    return combine_scaled([first, rest]), k


def gstar_series_neg_eps(
    split: NearIntegerSplit, z: float, cfg: Config = DEFAULT_CONFIG
) -> SeriesSum:
    """Series for ``gamma*(-n+eps, z)`` with the pole term ``k = n`` extracted."""
    if split.eps == 0.0:
        raise DomainError("eps == 0: use gstar_exact_negint")
    if not z < 0.0:
        raise DomainError("z must be negative")
    (m, hi, lo), k = _neg_series_scaled(split, -z, cfg)
    value, status = exp_scaled(m, hi, lo)
    return SeriesSum(value, k + 1, True, status)


def _dd_pow(base: float, n: int) -> tuple[float, float, int]:
    """``base**n`` for ``base`` in [0.5, 1) as ``(hi + lo) * 2**e``."""
    rh, rl, re = 1.0, 0.0, 0
    bh, bl, be = base, 0.0, 0
    while n:
        if n & 1:
            rh, rl = dd_mul(rh, rl, bh, bl)
            re += be
            f, e = math.frexp(rh)
            rh, rl, re = f, math.ldexp(rl, -e), re + e
        n >>= 1
        if n:
            bh, bl = dd_mul(bh, bl, bh, bl)
            be *= 2
            f, e = math.frexp(bh)
            bh, bl, be = f, math.ldexp(bl, -e), be + e
    return rh, rl, re


def gstar_exact_negint(n: int, z: float) -> EvalResult:
    """``gamma*(-n, z) = z**n`` by double-double exponentiation by squaring."""
    n = int(n)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return EvalResult(1.0, Status.OK, Method.EXACT_NEGINT)
    z = float(z)
    neg = z < 0.0 and n & 1
    sign = -1.0 if neg else 1.0
    if z == 0.0:
        return EvalResult(sign * 0.0, Status.UNDERFLOW, Method.EXACT_NEGINT)
    mant, e = math.frexp(abs(z))
    hi, lo, ee = _dd_pow(mant, n)
    total_exp = e * n + ee
    # hi in [0.5, 1): the result is hi * 2**total_exp
    if total_exp > 1024 or (total_exp == 1024 and hi + lo >= 1.0):
        return EvalResult(sign * FLOAT_MAX, Status.OVERFLOW, Method.EXACT_NEGINT, n)
    if total_exp - 1 < -1022:
        return EvalResult(sign * 0.0, Status.UNDERFLOW, Method.EXACT_NEGINT, n)
    value = math.ldexp(hi + lo, total_exp)
    if math.isinf(value):
        return EvalResult(sign * FLOAT_MAX, Status.OVERFLOW, Method.EXACT_NEGINT, n)
    return EvalResult(sign * value, Status.OK, Method.EXACT_NEGINT, n)

