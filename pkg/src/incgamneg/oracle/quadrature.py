"""Double-exponential trapezoidal rule for ``gamma*(a, z)`` with ``a > 0``.

With ``x = -z``, ``r = sinh t`` and ``phi = 1/(1 + e^{-r})``,

    gamma*(a, -x) = (1/Gamma(a)) * int phi^{a+1} e^{x phi} e^{-r} cosh t dt

over the real line.  The integrand decays double exponentially in both
directions, so the trapezoidal rule converges geometrically as ``h`` shrinks.
The factor ``e^x`` is pulled out and applied in mpmath, keeping the sum in
range for all ``x <= 500``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .values import OracleUnavailable, OracleValue, from_mpf

__all__ = ["gstar_quadrature", "quadrature_trace", "QuadratureStep", "MIN_A", "DEFAULT_H"]

MIN_A = 0.05
DEFAULT_H = 0.5
MAX_HALVINGS = 6
AGREE_TOL = 1e-14
# log of the smallest integrand value (relative to the peak) that is kept
_DROP = 45.0


@dataclass(frozen=True)
class QuadratureStep:
    h: float
    value: float
    nodes: int


def _log_integrand(t: np.ndarray, a: float, x: float) -> np.ndarray:
    """log of ``phi^{a+1} e^{-x(1-phi)} e^{-r} cosh t``."""
    r = np.sinh(t)
    with np.errstate(over="ignore"):
        er = np.exp(-np.abs(r))
        log_phi = np.where(r >= 0.0, -np.log1p(er), r - np.log1p(er))
        # 1 - phi = 1/(1 + e^r)
        one_m_phi = np.where(r >= 0.0, er / (1.0 + er), 1.0 / (1.0 + er))
    at = np.abs(t)
    log_cosh = at + np.log1p(np.exp(-2.0 * at)) - math.log(2.0)
    return (a + 1.0) * log_phi - x * one_m_phi - r + log_cosh


def _limits(a: float, x: float, t_max: float | None) -> tuple[float, float]:
    if t_max is not None:
        return -t_max, t_max
    # left tail ~ exp(a r + |t| - x(...)), right tail ~ exp(-r + t)
    need = _DROP + math.log1p(x) + 10.0
    return -math.asinh(need / a), math.asinh(need)


def _trapezoid(a: float, x: float, h: float, lo: float, hi: float) -> tuple[float, int]:
    j = np.arange(math.floor(lo / h), math.ceil(hi / h) + 1, dtype=np.float64)
    t = j * h
    vals = np.exp(_log_integrand(t, a, x))
    return h * math.fsum(vals.tolist()), int(t.size)


def quadrature_trace(
    a: float, z: float, h: float = DEFAULT_H, t_max: float | None = None, halvings: int = MAX_HALVINGS
) -> list[QuadratureStep]:
    """Scaled sums ``e^{-x} Gamma(a) gamma*`` for ``h, h/2, ...`` (``halvings+1`` entries)."""
    if not (a > MIN_A and z < 0.0):
        raise ValueError(f"quadrature needs a > {MIN_A} and z < 0")
    x = -float(z)
    lo, hi = _limits(a, x, t_max)
    steps = []
    for _ in range(halvings + 1):
        v, n = _trapezoid(a, x, h, lo, hi)
        steps.append(QuadratureStep(h, v, n))
        h *= 0.5
    return steps


def gstar_quadrature(
    a: float, z: float, h: float = DEFAULT_H, t_max: float | None = None
) -> OracleValue:
    """``gamma*(a, z)`` by the double-exponential rule, halving ``h`` up to 6 times.

    ``t_max=None`` picks the truncation per side from the tail bounds; pass a
    number to use the symmetric interval ``[-t_max, t_max]``.
    """
    a = float(a)
    if not (a > MIN_A and z < 0.0):
        raise ValueError(f"quadrature needs a > {MIN_A} and z < 0")
    x = -float(z)
    lo, hi = _limits(a, x, t_max)
    prev, _ = _trapezoid(a, x, h, lo, hi)
    for _ in range(MAX_HALVINGS):
        h *= 0.5
        cur, _ = _trapezoid(a, x, h, lo, hi)
        change = abs(cur - prev) / abs(cur) if cur != 0.0 else math.inf
        if change <= AGREE_TOL:
            with mpmath.workdps(30):
                v = mpmath.exp(x) * mpmath.rgamma(a) * mpmath.mpf(cur)
            return from_mpf(v, max(change, 16 * 2.0**-53))
        prev = cur
    raise OracleUnavailable(f"quadrature did not settle at a={a!r}, z={z!r}")
