from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .dd import DoubleDouble, quick_two_sum


class OracleUnavailable(ArithmeticError):
    """The oracle could not certify a value at this point."""


@dataclass(frozen=True)
class OracleValue:
    """``value * 2**exp2`` with estimated relative error ``est_error``.

    ``exp2`` is nonzero only when the value lies outside double range.
    """

    value: DoubleDouble
    est_error: float
    exp2: int = 0

    def to_mpf(self) -> mpmath.mpf:
        with mpmath.workprec(120):
            return mpmath.ldexp(mpmath.mpf(self.value.hi) + mpmath.mpf(self.value.lo), self.exp2)

    def to_float(self) -> float:
        hi = self.value.hi
        try:
            return math.ldexp(hi, self.exp2) + math.ldexp(self.value.lo, self.exp2)
        except OverflowError:
            return math.copysign(math.inf, hi)

    def log_abs(self) -> float:
        if self.value.hi == 0.0:
            return -math.inf
        return math.log(abs(self.value.hi)) + self.exp2 * math.log(2.0)

    def rel_error(self, approx: float) -> float:
        """``|approx - self| / |self|``, computed without rounding to double first."""
        with mpmath.workprec(120):
            ref = self.to_mpf()
            if ref == 0:
                return 0.0 if approx == 0.0 else math.inf
            return float(abs((mpmath.mpf(approx) - ref) / ref))


def from_mpf(v, est_error: float) -> OracleValue:
    """Round an mpmath number to double-double, keeping the exponent aside if needed."""
    if v == 0:
        return OracleValue(DoubleDouble(0.0, 0.0), est_error, 0)
    m, e = mpmath.frexp(v)
    hi = float(m)
    lo = float(m - hi)
    hi, lo = quick_two_sum(hi, lo)
    # keep the pair normal; ldexp into double range only when lo stays normal too
    if -960 < e < 1020:
        return OracleValue(DoubleDouble(math.ldexp(hi, e), math.ldexp(lo, e)), est_error, 0)
    return OracleValue(DoubleDouble(hi, lo), est_error, int(e))
