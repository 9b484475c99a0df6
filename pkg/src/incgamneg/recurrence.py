"""Recurrences in the parameter ``a`` for fixed negative argument.

Notation: for ``a, z > 0`` write ``G_a = gamma*(-a, -z)``.  The homogeneous
three-term relation

    G_{a+2} + (z + a + 1) G_{a+1} + z (a + 1) G_a = 0

and the inhomogeneous first-order relation

    G_{a+1} + z G_a = -(1/pi) sin(pi a) e^z Gamma(a + 1)

are exposed as normalized residuals for testing.  The normalized function
``gt_a`` defined by ``G_a = z^a cos(pi a) + sin(pi a) Gamma(a) e^z gt_a``
satisfies ``gt_{a+1} = (z/a) gt_a + 1/pi``; run backwards this is the
recursion used to reach small ``a`` from a UAE starting value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._xprec import LN2_HI, LN2_LO, combine_scaled, dd_add, dd_div, dd_mul_d, exp_scaled, log_dd, two_sum
from .gammasupport import gamma_scaled, trig_pi
from .results import DomainError, EvalResult, Method

__all__ = [
    "NormalizedValue",
    "rr4_residual",
    "rr2_residual",
    "normalized_forward_residual",
    "normalized_step_down",
    "gstar_from_normalized",
]

_INV_PI = 1.0 / math.pi


@dataclass(frozen=True)
class NormalizedValue:
    a_pos: float
    z_pos: float
    gtilde: float


def rr4_residual(a: float, z: float, g0: float, g1: float, g2: float) -> float:
    """Normalized residual of the homogeneous relation for ``G_a, G_{a+1}, G_{a+2}``."""
    t0 = z * (a + 1.0) * g0
    t1 = (z + a + 1.0) * g1
    scale = max(abs(g2), abs(t1), abs(t0))
    if scale == 0.0:
        return 0.0
    if math.isinf(scale):
        s = 2.0**-600
        return rr4_residual(a, z, g0 * s, g1 * s, g2 * s)
    return (g2 + t1 + t0) / scale


def rr2_residual(a: float, z: float, g0: float, g1: float) -> float:
    """Normalized residual of ``G_{a+1} + z G_a + (1/pi) sin(pi a) e^z Gamma(a+1)``.

    ``g0 = G_a`` and ``g1 = G_{a+1}``.  The inhomogeneous term is formed in
    log space, so it may exceed double range while the result is still exact
    to a few ulps.
    """
    s, _ = trig_pi(a)
    if a > 0.0:
        mg, lhi, llo = gamma_scaled(a)
        mg *= a
    else:
        mg, lhi, llo = gamma_scaled(a + 1.0)
    lhi, llo = dd_add(lhi, llo, z, 0.0)
    lz_hi, lz_lo = log_dd(z)
    terms = [(g1, 0.0, 0.0), (g0, lz_hi, lz_lo), (s * _INV_PI * mg, lhi, llo)]
    live = [t for t in terms if t[0] != 0.0]
    if not live:
        return 0.0
    total, hi0, lo0 = combine_scaled(live)
    biggest = 0.0
    for m, hi, lo in live:
        dh, dl = dd_add(hi, lo, -hi0, -lo0)
        biggest = max(biggest, abs(m) * math.exp(dh + dl))
    return total / biggest


def normalized_forward_residual(a: float, z: float, g_a: float, g_a1: float) -> float:
    """``(-gt_{a+1} + (z/a) gt_a + 1/pi) / scale``, evaluated exactly.

    ``scale`` is the largest magnitude among the three terms.  The inputs are
    taken as exact rationals (``1/pi`` as the double used by the recursion), so
    the result measures only the error already present in ``g_a, g_a1``.
    """
    fa, fz, g0, g1 = Fraction(a), Fraction(z), Fraction(g_a), Fraction(g_a1)
    mid = fz / fa * g0
    ip = Fraction(_INV_PI)
    scale = max(abs(g1), abs(mid), ip)
    return float((-g1 + mid + ip) / scale)


def normalized_step_down(nv: NormalizedValue, target: float | None = None) -> NormalizedValue:
    """One backward step ``gt_{a-1} = ((a-1)/z) (gt_a - 1/pi)``.

    ``target`` overrides the rounded ``a_pos - 1`` with the exact new parameter
    (e.g. the final ``|a|`` of a chain), so no rounding leaks into the last
    factor.
    """
    b = nv.a_pos - 1.0 if target is None else target
    if not b > 0.0:
        raise DomainError("normalized_step_down needs a positive new parameter")
    # b (gt - 1/pi) / z with a single final rounding
    dh, dl = two_sum(nv.gtilde, -_INV_PI)
    ph, pl = dd_mul_d(dh, dl, b)
    qh, ql = dd_div(ph, pl, nv.z_pos, 0.0)
    return NormalizedValue(b, nv.z_pos, qh + ql)


def gstar_from_normalized(
    nv: NormalizedValue, method: Method = Method.UAE_RECURSION, terms_used: int = 0
) -> EvalResult:
    """``gamma*(-a, -z) = z^a cos(pi a) + sin(pi a) Gamma(a) e^z gt_a`` in log space."""
    a, z = nv.a_pos, nv.z_pos
    s, c = trig_pi(a)
    lz_hi, lz_lo = log_dd(z)
    pw_hi, pw_lo = dd_mul_d(lz_hi, lz_lo, a)
    terms = [(c, pw_hi, pw_lo)]
    if s != 0.0 and nv.gtilde != 0.0:
        mg, lg_hi, lg_lo = gamma_scaled(a)
        lg_hi, lg_lo = dd_add(lg_hi, lg_lo, z, 0.0)
        # for tiny a, sin(pi a) * gt underflows; carry the binary exponents
        fs, es = math.frexp(s)
        fg, eg = math.frexp(nv.gtilde)
        e = es + eg
        lg_hi, lg_lo = dd_add(lg_hi, lg_lo, e * LN2_HI, e * LN2_LO)
        terms.append((fs * fg * mg, lg_hi, lg_lo))
    m, hi, lo = combine_scaled(terms)
    value, status = exp_scaled(m, hi, lo)
    return EvalResult(value, status, method, terms_used)
