"""Uniform asymptotic expansion of ``gamma*(-a, -z)`` for large ``a, z > 0``.

With ``lambda = z/a`` and ``eta**2/2 = lambda - 1 - ln(lambda)``
(``sign(eta) = sign(lambda - 1)``):

    gamma*(-a,-z) = z^a { cos(pi a) - sqrt(2a/pi) e^{a eta^2/2} sin(pi a) B },
    B = sqrt(2/a) F(eta sqrt(a/2)) + T_a(eta)/a,

where ``F`` is Dawson's integral.  ``z^a e^{a eta^2/2}`` equals
``a^a e^{z-a}`` exactly, which is how the exponent is formed: it never
touches the rounded ``eta``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._xprec import (
    combine_scaled,
    dd_add,
    dd_div,
    dd_mul,
    dd_mul_d,
    exp_scaled,
    log_dd,
    two_prod,
    two_sum,
)
from .config import DEFAULT_CONFIG, Config
from .gammasupport import TABLES, CoeffTables, gamma_star, trig_pi
from .recurrence import NormalizedValue
from .results import ConvergenceError, DomainError, EvalResult, Method

__all__ = [
    "UaeFrame",
    "TPath",
    "TExpansion",
    "make_frame",
    "eta_from_lambda",
    "dawson",
    "dawson_cf",
    "alpha_coefficients",
    "t_small_eta",
    "t_large_eta",
    "t_function",
    "uae_bracket",
    "gstar_uae",
    "normalized_uae",
    "DAWSON_CF_MAX",
]

_INV_PI = 1.0 / math.pi
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

# |x| above which Dawson's integral switches from the continued fraction to
# its asymptotic series.  The series is accurate to ~1e-17 from here on; the
# continued fraction in plain floats drifts to ~1e-14 by x = 30.
DAWSON_CF_MAX = 7.0
_CF_TOL = 1e-16
_CF_CAP = 500
_TINY = 1e-300

# |lambda - 1| below which eta comes from the series of lambda - 1 - ln(lambda).
_ETA_SERIES_RADIUS = 0.2
# 2/(k+2) for the series (lambda-1-ln lambda) * 2 / mu^2 = sum (-mu)^k 2/(k+2)
_ETA_SERIES = tuple(2.0 / (k + 2) for k in range(40))

_T_TAIL_EPS = 1e-17


class TPath(enum.Enum):
    SMALL_ETA = "small_eta"
    LARGE_ETA = "large_eta"


@dataclass(frozen=True)
class TExpansion:
    path: TPath
    value: float
    order_used: int


@dataclass(frozen=True)
class UaeFrame:
    a_pos: float
    z_pos: float
    lam: float
    eta: float
    gamma_star_a: float


def eta_from_lambda(lam: float) -> float:
    """Signed ``eta`` with ``eta**2/2 = lambda - 1 - ln(lambda)``."""
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    mu = lam - 1.0
    if mu == 0.0:
        return 0.0
    if abs(mu) < _ETA_SERIES_RADIUS:
        acc = 0.0
        for c in reversed(_ETA_SERIES):
            acc = acc * (-mu) + c
        return mu * math.sqrt(acc)
    # lambda - 1 - ln(lambda) in double-double: the difference cancels
    # by up to a factor 10 just outside the series disc
    mh, ml = two_sum(lam, -1.0)
    lh, ll = log_dd(lam)
    dh, dl = dd_add(mh, ml, -lh, -ll)
    r = math.sqrt(2.0 * (dh + dl))
    return r if mu > 0.0 else -r


def make_frame(a_pos: float, z_pos: float) -> UaeFrame:
    if not (a_pos > 0.0 and z_pos > 0.0):
        raise DomainError("UAE frame needs positive a and z")
    lam = z_pos / a_pos
    return UaeFrame(a_pos, z_pos, lam, eta_from_lambda(lam), gamma_star(a_pos))


def dawson_cf(x: float) -> tuple[float, int]:
    """Dawson's integral by the continued fraction
    ``F(x) = x/(1 + 2x^2/(3 - 4x^2/(5 + 6x^2/(7 - ...))))`` (modified Lentz).

    Returns the value and the number of iterations used.  Beyond
    ``DAWSON_CF_MAX`` the Lentz recurrences are run in double-double:
    rounding in plain floats is amplified by the fraction itself there.
    """
    ax = abs(x)
    if ax == 0.0:
        return x, 0
    if ax > DAWSON_CF_MAX:
        v, k = _dawson_cf_dd(ax)
        return (v if x > 0.0 else -v), k
    x2 = ax * ax
    f = 1.0
    c = 1.0
    d = 0.0
    for k in range(1, _CF_CAP + 1):
        ak = 2.0 * k * x2
        if not k & 1:
            ak = -ak
        bk = 2.0 * k + 1.0
        d = bk + ak * d
        if d == 0.0:
            d = _TINY
        c = bk + ak / c
        if c == 0.0:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < _CF_TOL:
            v = ax / f
            return (v if x > 0.0 else -v), k
    raise ConvergenceError(f"Dawson continued fraction did not converge at x={x}")


def _dawson_cf_dd(ax: float) -> tuple[float, int]:
    h, l = two_prod(ax, ax)
    fh, fl = 1.0, 0.0
    ch, cl = 1.0, 0.0
    dh, dl = 0.0, 0.0
    for k in range(1, _CF_CAP + 1):
        ah, al = dd_mul_d(h, l, 2.0 * k if k & 1 else -2.0 * k)
        bk = 2.0 * k + 1.0
        th, tl = dd_mul(ah, al, dh, dl)
        dh, dl = dd_add(bk, 0.0, th, tl)
        if dh == 0.0:
            dh, dl = _TINY, 0.0
        th, tl = dd_div(ah, al, ch, cl)
        ch, cl = dd_add(bk, 0.0, th, tl)
        if ch == 0.0:
            ch, cl = _TINY, 0.0
        dh, dl = dd_div(1.0, 0.0, dh, dl)
        eh, el = dd_mul(ch, cl, dh, dl)
        fh, fl = dd_mul(fh, fl, eh, el)
        if abs((eh - 1.0) + el) < _CF_TOL:
            return dd_div(ax, 0.0, fh, fl)[0], k
    raise ConvergenceError(f"Dawson continued fraction did not converge at x={ax}")


def _dawson_asymptotic(ax: float) -> float:
    # F(x) ~ (1/(2x)) sum_k (2k-1)!! / (2x^2)^k
    inv = 1.0 / (2.0 * ax * ax)
    s = 1.0
    t = 1.0
    k = 0
    while True:
        k += 1
        t *= (2 * k - 1) * inv
        s += t
        if t < 1e-17 * s or k > 60:
            break
    return s / (2.0 * ax)


def dawson(x: float) -> float:
    """Dawson's integral ``F(x) = exp(-x^2) int_0^x exp(t^2) dt`` (odd in x)."""
    ax = abs(x)
    if ax > DAWSON_CF_MAX:
        v = _dawson_asymptotic(ax)
        return v if x > 0.0 else -v
    return dawson_cf(x)[0]


def alpha_coefficients(a: float, n_max: int, tables: CoeffTables = TABLES) -> list[float]:
    """``alpha_0 .. alpha_{n_max+2}`` with the two top entries zero."""
    if a < 4.0:
        raise DomainError("the UAE correction needs a >= 4")
    d = tables.d
    alpha = [0.0] * (n_max + 3)
    for n in range(n_max, -1, -1):
        alpha[n] = d[n + 1] - ((n + 2) / a) * alpha[n + 2]
    return alpha


def t_small_eta(
    a: float, eta: float, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> TExpansion:
    """Maclaurin form of ``T_a(eta)`` from the backward alpha recursion.

    ``alpha_n = d_{n+1} - ((n+2)/a) alpha_{n+2}`` from ``alpha_{N+1} =
    alpha_{N+2} = 0``; then ``T = a/(a - alpha_1) * sum alpha_n eta^n``.
    """
    n_max = cfg.n_small_eta
    alpha = alpha_coefficients(a, n_max, tables)
    s = 0.0
    for n in range(n_max, -1, -1):
        s = s * eta + alpha[n]
    return TExpansion(TPath.SMALL_ETA, a / (a - alpha[1]) * s, n_max)


def t_large_eta(
    frame: UaeFrame, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> TExpansion:
    """Asymptotic form ``T_a(eta) ~ sum (-1)^n C_n(eta) / a^n``.

    The series is truncated at a negligible term, or when two consecutive
    terms together grow (the terms alternate in size, so single-term growth
    is not a reliable sign of divergence).
    """
    a, lam, eta = frame.a_pos, frame.lam, frame.eta
    mu = lam - 1.0
    use_lambda = lam < 1.0
    inv_mu = 1.0 / mu
    inv_eta = 1.0 / eta
    inv_mu2 = inv_mu * inv_mu
    inv_eta2 = inv_eta * inv_eta
    inv_a = 1.0 / a
    tol = min(cfg.rel_tol, _T_TAIL_EPS)
    pm = inv_mu
    pe = inv_eta
    pa = 1.0
    total = 0.0
    h1 = h2 = h3 = 0.0
    used = 0
    for n, ev in enumerate(tables.c_evaluators[: cfg.n_c_coeffs + 1]):
        acc = 0.0
        if use_lambda:
            for c in reversed(ev.lambda_coeffs):
                acc = acc * lam + c
        else:
            for c in reversed(ev.mu_coeffs):
                acc = acc * mu + c
        t = (acc * pm + ev.eta_coeff * pe) * pa
        if n & 1:
            t = -t
        at = abs(t)
        if n >= 3 and at + h1 > h2 + h3:
            break
        total += t
        used = n + 1
        h3, h2, h1 = h2, h1, at
        if at < tol * abs(total):
            break
        pm *= inv_mu2
        pe *= inv_eta2
        pa *= inv_a
    return TExpansion(TPath.LARGE_ETA, total, used)


def t_function(
    frame: UaeFrame, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> TExpansion:
    if abs(frame.eta) <= cfg.eta_switch:
        return t_small_eta(frame.a_pos, frame.eta, cfg, tables)
    return t_large_eta(frame, cfg, tables)


def uae_bracket(
    frame: UaeFrame, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> tuple[float, TExpansion]:
    """``sqrt(2/a) F(eta sqrt(a/2)) + T_a(eta)/a``."""
    a = frame.a_pos
    te = t_function(frame, cfg, tables)
    f = dawson(frame.eta * math.sqrt(0.5 * a))
    return math.sqrt(2.0 / a) * f + te.value / a, te


def gstar_uae(
    frame: UaeFrame, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> EvalResult:
    a, z = frame.a_pos, frame.z_pos
    s, c = trig_pi(a)
    la_hi, la_lo = log_dd(a)
    lz_hi, lz_lo = log_dd(z)
    pw_hi, pw_lo = dd_mul_d(lz_hi, lz_lo, a)
    terms = [(c, pw_hi, pw_lo)]
    order = 0
    if s != 0.0:
        br, te = uae_bracket(frame, cfg, tables)
        order = te.order_used
        # a ln a - a + z
        e_hi, e_lo = dd_mul_d(la_hi, la_lo, a)
        e_hi, e_lo = dd_add(e_hi, e_lo, -a, 0.0)
        e_hi, e_lo = dd_add(e_hi, e_lo, z, 0.0)
        terms.append((-s * _SQRT_2_OVER_PI * math.sqrt(a) * br, e_hi, e_lo))
    m, hi, lo = combine_scaled(terms)
    value, status = exp_scaled(m, hi, lo)
    return EvalResult(value, status, Method.UAE_DIRECT, order)


def normalized_uae(
    frame: UaeFrame, cfg: Config = DEFAULT_CONFIG, tables: CoeffTables = TABLES
) -> NormalizedValue:
    """``gt_a(z) = -(a/(pi Gamma*(a))) * B``: bounded, never overflows."""
    br, _ = uae_bracket(frame, cfg, tables)
    g = -(frame.a_pos * _INV_PI / frame.gamma_star_a) * br
    return NormalizedValue(frame.a_pos, frame.z_pos, g)
