"""Gamma-function scaffolding shared by the evaluation paths.

Gamma values are handled in *scaled* form ``Gamma(a) = m * exp(L)`` with the
exponent ``L`` kept as a double-double.  This keeps a few-ulp relative
accuracy even when ``Gamma(a)`` itself is far outside double range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _coeffs
from ._xprec import dd_add, dd_mul, dd_mul_d, exp_scaled, log_dd, two_prod, two_sum
from .results import DomainError

__all__ = [
    "SignedLogGamma",
    "NearIntegerSplit",
    "CoeffTables",
    "CEvaluator",
    "TABLES",
    "gamma_signed_log",
    "gamma_scaled",
    "rgamma_scaled",
    "gamma_star",
    "recip_gamma_star_coeffs",
    "near_integer_decompose",
    "trig_pi",
    "sinc_pi",
    "is_nonpositive_integer",
]

_TWO_PI = 2.0 * math.pi
_PI_HI = math.pi
_PI_LO = 1.2246467991473532e-16
# double-double ln(2 pi) and ln(pi)
_LN_2PI_HI = 1.8378770664093456
_LN_2PI_LO = -7.756588316134483e-17
_LN_PI_HI = 1.1447298858494002
_LN_PI_LO = 1.0265951162707826e-17

# B_2k / (2k (2k-1)), k = 1..10: Stirling series of ln Gamma*(a).
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)
_STIRLING_FROM = 10.0
_EXACT_FACTORIAL_MAX = 171


@dataclass(frozen=True)
class SignedLogGamma:
    """``ln|Gamma(a)|`` split as ``log_abs + log_abs_lo`` plus the sign of Gamma(a).

    ``log_abs`` alone is the rounded logarithm; the low word carries the
    rounding error so that reconstruction can be done to a few ulps.
    """

    log_abs: float
    sign: int
    log_abs_lo: float = 0.0

    def value(self) -> float:
        v, _ = exp_scaled(float(self.sign), self.log_abs, self.log_abs_lo)
        return v


@dataclass(frozen=True)
class NearIntegerSplit:
    n: int
    eps: float


def is_nonpositive_integer(a: float) -> bool:
    return a <= 0.0 and a == math.floor(a)


def _ln_gamma_star_stirling(a: float) -> float:
    inv = 1.0 / a
    inv2 = inv * inv
    s = 0.0
    for c in reversed(_STIRLING):
        s = s * inv2 + c
    return s * inv


def _shift_up(a: float) -> tuple[int, float, float, float, float]:
    """Shift ``0 < a < 10`` to ``b = a + m`` in [10, 11).

    Returns ``m``, ``b`` as a double-double and ``prod_{j<m} (a + j)`` as a
    double-double.
    """
    m = int(math.ceil(_STIRLING_FROM - a))
    if a + m < _STIRLING_FROM:
        m += 1
    bhi, blo = two_sum(a, float(m))
    phi, plo = a, 0.0
    for j in range(1, m):
        t, e = two_sum(a, float(j))
        phi, plo = dd_mul(phi, plo, t, e)
    return m, bhi, blo, phi, plo


def _b_ln_b(bhi: float, blo: float) -> tuple[float, float]:
    lhi, llo = log_dd(bhi)
    llo += blo / bhi
    return dd_mul(bhi, blo, lhi, llo)


def gamma_star(a: float) -> float:
    """Scaled gamma ``sqrt(a/(2 pi)) e^a a^-a Gamma(a)``; tends to 1 as ``a`` grows."""
    if not a > 0.0:
        raise DomainError(f"gamma_star needs a > 0, got {a!r}")
    if a >= _STIRLING_FROM:
        return math.exp(_ln_gamma_star_stirling(a))
    m, bhi, blo, phi, plo = _shift_up(a)
    gsb = math.exp(_ln_gamma_star_stirling(bhi))
    # exponent b ln b - a ln a - m
    ehi, elo = _b_ln_b(bhi, blo)
    lhi, llo = log_dd(a)
    ahi, alo = dd_mul_d(lhi, llo, a)
    ehi, elo = dd_add(ehi, elo, -ahi, -alo)
    ehi, elo = dd_add(ehi, elo, -float(m), 0.0)
    scale, _ = exp_scaled(gsb * math.sqrt(a / bhi), ehi, elo)
    return scale / phi * (1.0 - plo / phi)


def _ln_gamma_pos(a: float) -> tuple[float, float]:
    """``ln Gamma(a)`` for ``a > 0`` as a double-double, via Stirling at ``b >= 10``."""
    if a >= _STIRLING_FROM:
        bhi, blo = a, 0.0
        phi = 0.0
    else:
        _, bhi, blo, phi, plo = _shift_up(a)
    lbh, lbl = log_dd(bhi)
    lbl += blo / bhi
    hhi, hlo = dd_add(bhi, blo, -0.5, 0.0)
    hi, lo = dd_mul(hhi, hlo, lbh, lbl)
    hi, lo = dd_add(hi, lo, -bhi, -blo)
    hi, lo = dd_add(hi, lo, 0.5 * _LN_2PI_HI, 0.5 * _LN_2PI_LO + _ln_gamma_star_stirling(bhi))
    if phi:
        lph, lpl = log_dd(phi)
        hi, lo = dd_add(hi, lo, -lph, -(lpl + plo / phi))
    return hi, lo


def _log_abs_sin_pi(x: float) -> tuple[float, float, float]:
    """``(sin(pi x), ln|sin(pi x)|)``, the log as a double-double.

    The rounding of ``pi * f`` is corrected to first order, leaving only
    the libm error of one sine or cosine.
    """
    s, _ = trig_pi(x)
    f = abs(x - round(x))
    quarter = f > 0.25
    r = 0.5 - f if quarter else f
    th, tl = two_prod(_PI_HI, r)
    tl += _PI_LO * r
    if quarter:
        v = math.cos(th)
        corr = -math.sin(th) * tl / v
    else:
        v = math.sin(th)
        corr = math.cos(th) * tl / v
    hi, lo = log_dd(v)
    return s, hi, lo + corr


def gamma_scaled(a: float) -> tuple[float, float, float]:
    """Return ``(m, L_hi, L_lo)`` with ``Gamma(a) = m * exp(L_hi + L_lo)``.

    Valid for any ``a`` that is not a nonpositive integer; for ``a < 0`` the
    reflection ``Gamma(a) = pi / (sin(pi a) (-a) Gamma(-a))`` is used in log
    form, which avoids both the rounding of ``1 - a`` and underflow of the
    product for tiny ``|a|``.
    """
    if a > 0.0:
        if a <= _EXACT_FACTORIAL_MAX and a == math.floor(a):
            return float(math.factorial(int(a) - 1)), 0.0, 0.0
        hi, lo = _ln_gamma_pos(a)
        return 1.0, hi, lo
    if is_nonpositive_integer(a):
        raise DomainError(f"Gamma has a pole at a = {a!r}")
    aa = -a
    hi, lo = _ln_gamma_pos(aa)
    s, lsh, lsl = _log_abs_sin_pi(a)
    lah, lal = log_dd(aa)
    hi, lo = dd_add(hi, lo, lsh, lsl)
    hi, lo = dd_add(hi, lo, lah, lal)
    hi, lo = dd_add(_LN_PI_HI, _LN_PI_LO, -hi, -lo)
    return math.copysign(1.0, s), hi, lo


def rgamma_scaled(a: float) -> tuple[float, float, float]:
    """``1/Gamma(a)`` in scaled form; exactly zero at the poles."""
    if is_nonpositive_integer(a):
        return 0.0, 0.0, 0.0
    m, lhi, llo = gamma_scaled(a)
    return 1.0 / m, -lhi, -llo


def gamma_signed_log(a: float) -> SignedLogGamma:
    if math.isnan(a):
        raise DomainError("a is NaN")
    if is_nonpositive_integer(a):
        raise DomainError(f"Gamma has a pole at a = {a!r}")
    m, lhi, llo = gamma_scaled(a)
    mhi, mlo = log_dd(abs(m))
    hi, lo = dd_add(mhi, mlo, lhi, llo)
    return SignedLogGamma(hi, 1 if m > 0 else -1, lo)


def trig_pi(x: float) -> tuple[float, float]:
    """``(sin(pi x), cos(pi x))`` with exact argument reduction."""
    if not math.isfinite(x):
        raise DomainError(f"trig_pi needs a finite argument, got {x!r}")
    m = round(x)
    f = x - m  # exact: |f| <= 1/2
    af = abs(f)
    if af <= 0.25:
        s = math.sin(math.pi * af)
        c = math.cos(math.pi * af)
    else:
        g = 0.5 - af  # exact by Sterbenz
        s = math.cos(math.pi * g)
        c = math.sin(math.pi * g) if g != 0.0 else 0.0
    if f < 0.0:
        s = -s
    if m & 1:
        s, c = -s, -c
    if f == 0.0:
        s = 0.0
    elif af == 0.5:
        c = 0.0
    return s, c


def sinc_pi(eps: float) -> float:
    """``sin(pi eps) / (pi eps)``, equal to 1 at ``eps = 0``."""
    t = math.pi * eps
    if abs(t) < 1e-4:
        t2 = t * t
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0)
    return trig_pi(eps)[0] / t


def near_integer_decompose(a: float) -> NearIntegerSplit:
    """Split ``a = -n + eps`` with ``n >= 0`` an integer and ``-1/2 < eps <= 1/2``."""
    a = float(a)
    if not a <= 0.25:
        raise DomainError(f"near_integer_decompose needs a <= 0.25, got {a!r}")
    neg = -a
    n = math.floor(neg)
    if neg - n >= 0.5:
        n += 1
    n = max(n, 0)
    return NearIntegerSplit(int(n), a + n)


class CEvaluator:
    """Closed form of one coefficient ``C_n(eta)`` of the large-eta expansion.

    ``C_n = P_n(mu) / mu**(2n+1) + s_n / eta**(2n+1)`` with ``mu = lambda - 1``.
    ``P_n`` is stored both in powers of ``mu`` and of ``lambda``; the latter is
    used for ``lambda < 1`` where Horner in ``mu`` would cancel.
    """

    __slots__ = ("n", "mu_coeffs", "lambda_coeffs", "eta_coeff")

    def __init__(self, n: int, mu_coeffs, lambda_coeffs, eta_coeff: float):
        self.n = n
        self.mu_coeffs = tuple(mu_coeffs)
        self.lambda_coeffs = tuple(lambda_coeffs)
        self.eta_coeff = eta_coeff

    def numerator(self, lam: float) -> float:
        acc = 0.0
        if lam < 1.0:
            for c in reversed(self.lambda_coeffs):
                acc = acc * lam + c
        else:
            mu = lam - 1.0
            for c in reversed(self.mu_coeffs):
                acc = acc * mu + c
        return acc

    def __call__(self, lam: float, eta: float) -> float:
        deg = 2 * self.n + 1
        return self.numerator(lam) / (lam - 1.0) ** deg + self.eta_coeff / eta**deg


@dataclass(frozen=True)
class CoeffTables:
    d: tuple[float, ...]
    gamma_recip: tuple[float, ...]
    c_evaluators: tuple[CEvaluator, ...]


def _ratio(num: int, den: int) -> float:
    return num / den


def _load_tables() -> CoeffTables:
    d = tuple(_ratio(n, q) for n, q in _coeffs.D_COEFFS)
    g = tuple(_ratio(n, q) for n, q in _coeffs.GAMMA_RECIP)
    lam_forms = {k: terms for k, terms in _coeffs.C_LAMBDA}
    evals = []
    for k, mu_terms, eta_terms in _coeffs.C_RECORDS:
        deg = 2 * k + 1
        mu = [0.0] * (2 * k + 1)
        for p, num, den in mu_terms:
            mu[p + deg] = _ratio(num, den)
        lam = [0.0] * (2 * k + 1)
        for j, num, den in lam_forms[k]:
            lam[j] = _ratio(num, den)
        ((_, snum, sden),) = eta_terms
        evals.append(CEvaluator(k, mu, lam, _ratio(snum, sden)))
    return CoeffTables(d, g, tuple(evals))


TABLES = _load_tables()


def recip_gamma_star_coeffs(n_max: int) -> list[float]:
    """``gamma_0 .. gamma_{n_max}`` of ``1/Gamma*(a) ~ sum gamma_n a**-n``."""
    if not 0 <= n_max <= 12:
        raise ValueError("n_max must lie in [0, 12]")
    return list(TABLES.gamma_recip[: n_max + 1])

