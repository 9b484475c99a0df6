"""Public entry point: validation, method selection and range prediction."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._xprec import FLOAT_MAX, LOG_MAX, LOG_TINY
from .config import DEFAULT_CONFIG, Config
from .gammasupport import is_nonpositive_integer, near_integer_decompose, trig_pi
from .poincare import poincare_with_sum
from .recurrence import gstar_from_normalized, normalized_step_down
from .results import DomainError, EvalResult, Method, Status
from .series import gstar_exact_negint, gstar_series_neg_eps, gstar_series_pos
from .uae import gstar_uae, make_frame, normalized_uae

__all__ = [
    "Config",
    "EvalPoint",
    "RangeStatus",
    "evaluate",
    "evaluate_with_method",
    "gstar",
    "select_method",
    "predict_range_status",
    "predict_log_magnitude",
    "POINCARE_GUARD",
    "POINCARE_EXP_GUARD",
]

# The large-argument expansion is used only while a <= POINCARE_GUARD * |z|.
POINCARE_GUARD = 0.9
# The expansion drops an algebraic part of relative size ~ x Gamma(a) e^{-x};
# it is used only while x - ln x - lnGamma(a) exceeds this (e^-37 ~ 1e-16),
# which excludes tiny a.
POINCARE_EXP_GUARD = 37.0
# Points predicted further than this (in nats) outside double range are not
# evaluated for a > 0; the answer's sign is known there.
_SHORT_CIRCUIT_MARGIN = 50.0


class RangeStatus(enum.Enum):
    REPRESENTABLE = "representable"
    WILL_OVERFLOW = "will_overflow"
    WILL_UNDERFLOW = "will_underflow"


@dataclass(frozen=True)
class EvalPoint:
    a: float
    z: float

    def __post_init__(self) -> None:
        a = float(self.a)
        z = float(self.z)
        if not (math.isfinite(a) and math.isfinite(z)):
            raise DomainError("a and z must be finite")
        if not z < 0.0:
            raise DomainError(f"z must be negative, got {z!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", z)

    @property
    def x(self) -> float:
        return -self.z


def select_method(p: EvalPoint, cfg: Config = DEFAULT_CONFIG) -> Method:
    a, z = p.a, p.z
    if a > 0.0:
        x = p.x
        if (
            z <= cfg.z_poincare
            and a <= POINCARE_GUARD * x
            and x - math.log(x) - math.lgamma(a) >= POINCARE_EXP_GUARD
        ):
            return Method.POINCARE
        return Method.SERIES_POS
    if is_nonpositive_integer(a):
        return Method.EXACT_NEGINT
    if a >= cfg.a_series_floor or z >= cfg.z_series_wall:
        if z >= cfg.z_uae_wall:
            return Method.SERIES_NEG_EPS
        return Method.UAE_RECURSION
    return Method.UAE_DIRECT


def predict_log_magnitude(p: EvalPoint) -> float:
    """Rough natural log of ``|gamma*(a, z)|`` (within a few units near the range edges)."""
    a, x = p.a, p.x
    lx = math.log(x)
    if a > 0.0:
        lg = math.lgamma(a)
        tail = x - math.log(max(x + a - 1.0, 1.0)) - lg
        return max(-math.lgamma(a + 1.0), tail)
    aa = -a
    if is_nonpositive_integer(a):
        return aa * lx
    power = aa * lx
    s, c = trig_pi(aa)
    if c != 0.0:
        power += math.log(abs(c))
    else:
        power = -math.inf
    gt = max(aa, 1.0) / (math.pi * (abs(x - aa) + math.sqrt(max(aa, 1.0))))
    other = math.lgamma(aa) + x + math.log(abs(s)) + math.log(gt)
    return max(power, other)


def predict_range_status(p: EvalPoint) -> RangeStatus:
    lm = predict_log_magnitude(p)
    if lm > LOG_MAX:
        return RangeStatus.WILL_OVERFLOW
    if lm < LOG_TINY:
        return RangeStatus.WILL_UNDERFLOW
    return RangeStatus.REPRESENTABLE


def _uae_recursion(aa: float, x: float, cfg: Config) -> EvalResult:
    k = max(0, math.ceil(cfg.uae_start_min - aa))
    nv = normalized_uae(make_frame(aa + k, x), cfg)
    for j in range(k - 1, -1, -1):
        nv = normalized_step_down(nv, aa + j)
    return gstar_from_normalized(nv, Method.UAE_RECURSION, k)


def evaluate_with_method(p: EvalPoint, method: Method, cfg: Config = DEFAULT_CONFIG) -> EvalResult:
    """Evaluate with a forced method, bypassing the dispatcher.

    Meant for cross-method comparisons near region boundaries.  Raises
    :class:`DomainError` where the method does not apply at all.
    """
    a, x = p.a, p.x
    if method is Method.EXACT_NEGINT:
        if not is_nonpositive_integer(a):
            raise DomainError("exact_negint needs a nonpositive integer a")
        return gstar_exact_negint(int(-a), p.z)
    if method in (Method.SERIES_POS, Method.POINCARE):
        if not a > 0.0:
            raise DomainError(f"{method.value} needs a > 0")
        if method is Method.POINCARE:
            return poincare_with_sum(a, x, cfg)[0]
        ss = gstar_series_pos(a, x, cfg)
        return EvalResult(ss.value, ss.status, method, ss.terms)
    if not a < 0.0 or is_nonpositive_integer(a):
        raise DomainError(f"{method.value} needs a negative non-integer a")
    if method is Method.SERIES_NEG_EPS:
        ss = gstar_series_neg_eps(near_integer_decompose(a), p.z, cfg)
        return EvalResult(ss.value, ss.status, method, ss.terms)
    if method is Method.UAE_RECURSION:
        return _uae_recursion(-a, x, cfg)
    if -a < 4.0:
        raise DomainError("uae_direct needs |a| >= 4")
    return gstar_uae(make_frame(-a, x), cfg)


def evaluate(p: EvalPoint, cfg: Config = DEFAULT_CONFIG) -> EvalResult:
    """``gamma*(a, z)`` for ``z < 0`` with range status and method tag."""
    method = select_method(p, cfg)
    a = p.a
    if a > 0.0:
        lm = predict_log_magnitude(p)
        if lm < LOG_TINY - _SHORT_CIRCUIT_MARGIN:
            return EvalResult(0.0, Status.UNDERFLOW, method)
        if lm > LOG_MAX + _SHORT_CIRCUIT_MARGIN:
            return EvalResult(FLOAT_MAX, Status.OVERFLOW, method)
        if method is Method.POINCARE:
            res, ps = poincare_with_sum(a, p.x, cfg)
            if ps.reached_tol:
                return res
            method = Method.SERIES_POS
    return evaluate_with_method(p, method, cfg)


def gstar(a: float, z: float, cfg: Config = DEFAULT_CONFIG) -> EvalResult:
    """Shorthand for ``evaluate(EvalPoint(a, z), cfg)``."""
    return evaluate(EvalPoint(a, z), cfg)
