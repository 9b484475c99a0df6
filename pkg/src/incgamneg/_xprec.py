"""Error-free transformations and scaled exponentials on plain floats.

A *scaled* quantity is a triple ``(m, hi, lo)`` standing for ``m * exp(hi + lo)``.
Large exponents are carried as unevaluated double-double sums so that a single
final exponentiation keeps the relative error at a few ulps even when the
exponent itself is in the hundreds.
"""

from __future__ import annotations

import math

from .results import Status

_SPLITTER = 134217729.0  # 2**27 + 1

# Cody-Waite split of ln 2; LN2_HI has 32 trailing zero bits.
LN2_HI = 6.93147180369123816490e-01
LN2_LO = 1.90821492927058770002e-10
LN2 = math.log(2.0)
_SQRT_HALF = math.sqrt(0.5)

LOG_MAX = math.log(1.7976931348623157e308)  # 709.78...
LOG_TINY = math.log(2.2250738585072014e-308)  # -708.39..., smallest normal
FLOAT_MAX = 1.7976931348623157e308


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    s, e = two_sum(ahi, bhi)
    e += alo + blo
    return fast_two_sum(s, e)


def dd_mul(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    p, e = two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    return fast_two_sum(p, e)


def dd_mul_d(hi: float, lo: float, b: float) -> tuple[float, float]:
    p, e = two_prod(hi, b)
    e += lo * b
    return fast_two_sum(p, e)


def dd_div(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    q1 = ahi / bhi
    phi, plo = dd_mul_d(bhi, blo, q1)
    rhi, rlo = dd_add(ahi, alo, -phi, -plo)
    q2 = rhi / bhi
    return fast_two_sum(q1, q2)


# 1/(2k+1) for k = 2..14: tail of the atanh series of ln m.
_ATANH_TAIL = tuple(1.0 / (2 * k + 1) for k in range(2, 15))


def log_dd(x: float) -> tuple[float, float]:
    """Natural log of ``x > 0`` as a double-double (absolute error ~1e-21).

    With ``x = m 2**e`` and ``m`` in ``[sqrt(1/2), sqrt(2))``,
    ``ln m = 2 atanh(s)`` for ``s = (m-1)/(m+1)``; only the small tail of the
    series is summed in plain floats.
    """
    m, e = math.frexp(x)
    if m < _SQRT_HALF:
        m *= 2.0
        e -= 1
    dh, dl = two_sum(m, 1.0)
    sh, sl = dd_div(m - 1.0, 0.0, dh, dl)
    s2h, s2l = dd_mul(sh, sl, sh, sl)
    r = 0.0
    for c in reversed(_ATANH_TAIL):
        r = r * s2h + c
    qh, ql = dd_div(s2h, s2l, 3.0, 0.0)
    qh, ql = dd_add(qh, ql, r * s2h * s2h, 0.0)
    th, tl = dd_mul(sh, sl, qh, ql)
    lh, ll = dd_add(sh, sl, th, tl)
    hi, lo = two_sum(e * LN2_HI, 2.0 * lh)
    return fast_two_sum(hi, lo + (2.0 * ll + e * LN2_LO))


def exp_scaled(m: float, hi: float, lo: float = 0.0) -> tuple[float, Status]:
    """Return ``m * exp(hi + lo)`` with a range status.

    Results below the smallest normal double are reported as underflow
    (signed zero); results beyond the largest double as overflow (signed
    ``FLOAT_MAX``).
    """
    if m == 0.0:
        return m, Status.OK
    if math.isnan(m) or math.isnan(hi):
        return math.nan, Status.OK
    sign = math.copysign(1.0, m)
    if math.isinf(hi):
        if hi > 0:
            return sign * FLOAT_MAX, Status.OVERFLOW
        return sign * 0.0, Status.UNDERFLOW
    k = round(hi / LN2)
    r = (hi - k * LN2_HI) - k * LN2_LO + lo
    frac, e = math.frexp(m * math.exp(r))
    e += k
    if e > 1024:
        return sign * FLOAT_MAX, Status.OVERFLOW
    if e < -1021:
        return sign * 0.0, Status.UNDERFLOW
    return math.ldexp(frac, e), Status.OK


def log_abs_scaled(m: float, hi: float, lo: float = 0.0) -> float:
    """Natural log of ``|m * exp(hi + lo)|`` (no range limits)."""
    if m == 0.0:
        return -math.inf
    return hi + (lo + math.log(abs(m)))


def combine_scaled(
    terms: list[tuple[float, float, float]],
) -> tuple[float, float, float]:
    """Sum scaled terms, returning a scaled result anchored at the largest exponent.

    Terms whose mantissa is zero are ignored.
    """
    live = [t for t in terms if t[0] != 0.0]
    if not live:
        return 0.0, 0.0, 0.0
    top = max(live, key=lambda t: t[1] + math.log(abs(t[0])))
    hi0, lo0 = top[1], top[2]
    total = 0.0
    for m, hi, lo in live:
        dh, dl = dd_add(hi, lo, -hi0, -lo0)
        if dh + dl < -800.0:
            continue
        # exp(dh) * (1 + dl): rounding dh + dl first would cost |d| ulps
        total += m * (math.exp(dh) * (1.0 + dl))
    return total, hi0, lo0
