"""Double-double arithmetic, written to work elementwise on floats or numpy arrays.

This is a separate implementation from the one the evaluator uses, so the
oracle does not share rounding behaviour with the code under test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    v = s - a
    return s, (a - (s - v)) + (b - v)


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = _SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    t, f = two_sum(al, bl)
    e = e + t
    s, e = quick_two_sum(s, e)
    e = e + f
    return quick_two_sum(s, e)


def mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    return quick_two_sum(p, e)


def mul_d(ah, al, b):
    p, e = two_prod(ah, b)
    e = e + al * b
    return quick_two_sum(p, e)


def div(ah, al, bh, bl):
    q1 = ah / bh
    ph, pl = mul_d(bh, bl, q1)
    rh, rl = add(ah, al, -ph, -pl)
    q2 = rh / bh
    ph, pl = mul_d(bh, bl, q2)
    rh, rl = add(rh, rl, -ph, -pl)
    q3 = rh / bh
    q1, q2 = quick_two_sum(q1, q2)
    return add(q1, q2, q3, 0.0 * q3)


def div_d(ah, al, b):
    return div(ah, al, b, 0.0 * b)


@dataclass(frozen=True)
class DoubleDouble:
    """``hi + lo`` with ``|lo| <= ulp(hi)/2``."""

    hi: float
    lo: float = 0.0

    @classmethod
    def from_float(cls, v: float) -> "DoubleDouble":
        return cls(float(v), 0.0)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "DoubleDouble":
        hi = float(q)
        lo = float(q - Fraction(hi)) if hi == hi and abs(hi) != float("inf") else 0.0
        return cls(*quick_two_sum(hi, lo))

    def to_fraction(self) -> Fraction:
        return Fraction(self.hi) + Fraction(self.lo)

    def __float__(self) -> float:
        return self.hi + self.lo

    def __neg__(self) -> "DoubleDouble":
        return DoubleDouble(-self.hi, -self.lo)

    def _coerce(self, other) -> "DoubleDouble":
        if isinstance(other, DoubleDouble):
            return other
        return DoubleDouble(float(other), 0.0)

    def __add__(self, other):
        o = self._coerce(other)
        return DoubleDouble(*add(self.hi, self.lo, o.hi, o.lo))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return DoubleDouble(*add(self.hi, self.lo, -o.hi, -o.lo))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return DoubleDouble(*mul(self.hi, self.lo, o.hi, o.lo))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return DoubleDouble(*div(self.hi, self.lo, o.hi, o.lo))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self) -> "DoubleDouble":
        return -self if self.hi < 0.0 else self


def as_arrays(*xs):
    return tuple(np.asarray(x, dtype=np.float64) for x in xs)
