"""Large-argument expansion for ``a > 0``:

    gamma*(a, -x) ~ e^x / (x Gamma(a)) * sum_n (1-a)_n / x^n.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._xprec import dd_add, exp_scaled, log_dd
from .config import DEFAULT_CONFIG, Config
from .gammasupport import gamma_scaled
from .results import DomainError, EvalResult, Method

__all__ = ["PoincareSum", "poincare_sum", "gstar_poincare", "poincare_with_sum"]

_SUM_EPS = 2.0**-56
_TERM_CAP = 2000


@dataclass(frozen=True)
class PoincareSum:
    value: float
    terms: int
    reached_tol: bool
    smallest_term_rel: float


def poincare_sum(a: float, x: float, cfg: Config = DEFAULT_CONFIG) -> PoincareSum:
    """Optimally truncated ``sum (1-a)_n / x^n``.

    Stops at a negligible term or just before the terms start to grow.
    """
    tol = min(cfg.rel_tol, _SUM_EPS)
    s = 1.0
    term = 1.0
    last = 1.0
    n = 0
    while n < _TERM_CAP:
        nxt = term * ((n + 1) - a) / x
        if abs(nxt) > abs(term):
            break
        n += 1
        term = nxt
        s += term
        last = abs(term) / abs(s)
        if abs(term) <= tol * abs(s):
            break
    return PoincareSum(s, n + 1, last <= cfg.rel_tol, last)


def poincare_with_sum(
    a: float, x: float, cfg: Config = DEFAULT_CONFIG
) -> tuple[EvalResult, PoincareSum]:
    if not (a > 0.0 and x > 0.0):
        raise DomainError("the large-argument expansion needs a > 0 and x > 0")
    ps = poincare_sum(a, x, cfg)
    mg, lg_hi, lg_lo = gamma_scaled(a)
    lx_hi, lx_lo = log_dd(x)
    hi, lo = dd_add(x, 0.0, -lx_hi, -lx_lo)
    hi, lo = dd_add(hi, lo, -lg_hi, -lg_lo)
    value, status = exp_scaled(ps.value / mg, hi, lo)
    return EvalResult(value, status, Method.POINCARE, ps.terms), ps


def gstar_poincare(a: float, x: float, cfg: Config = DEFAULT_CONFIG) -> EvalResult:
    """``gamma*(a, -x)`` for large ``x``; ``x`` is the positive argument ``-z``."""
    return poincare_with_sum(a, x, cfg)[0]
