"""Double-double power-series oracle for ``gamma*(a, z)``, ``z < 0``.

With ``x = -z`` the defining series is

    gamma*(a, -x) = (1/Gamma(a)) * sum_k x^k / (k! (a + k)).

For negative non-integer ``a = -n + eps`` the ``k = n`` term is taken out
and combined analytically with ``1/Gamma(a)``, which removes the pole so the
remaining sum is benign.  Sums run in vectorized double-double; scalar
prefactors (``1/Gamma``, powers) come from mpmath at a few more than 32
digits.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import mpmath
import numpy as np

from . import dd
from .values import OracleUnavailable, OracleValue, from_mpf

__all__ = ["oracle_gstar", "oracle_gstar_batch", "TERM_CAP", "CONV_TOL", "MAX_EST_ERROR"]

TERM_CAP = 5000
CONV_TOL = 1e-30
MAX_EST_ERROR = 1e-25
_U2 = 2.0**-104
_LIMIT = 500.0


def _check(a: float, z: float) -> None:
    if not (math.isfinite(a) and math.isfinite(z)) or not z < 0.0:
        raise ValueError("oracle needs finite a and z < 0")
    if abs(a) > _LIMIT or abs(z) > _LIMIT:
        raise ValueError("oracle domain is |a|, |z| <= 500")


def _excluded_index(a: float) -> int:
    """Index of the pole term for negative ``a``; -1 when none is removed."""
    if a > 0.0:
        return -1
    return int(math.floor(-a + 0.5))


def _dd_sums(a: np.ndarray, x: np.ndarray, skip: np.ndarray):
    """Vectorized ``sum_{k != skip} x^k/(k!(a+k))`` in double-double.

    Returns ``(s_hi, s_lo, abs_sum, last_ratio, terms, converged)``.
    """
    npt = a.size
    th = np.ones(npt)
    tl = np.zeros(npt)
    sh = np.zeros(npt)
    sl = np.zeros(npt)
    absum = np.zeros(npt)
    last = np.full(npt, np.inf)
    terms = np.zeros(npt, dtype=np.int64)
    active = np.ones(npt, dtype=bool)
    kmin = np.maximum(x, skip.astype(np.float64))
    with np.errstate(all="ignore"):
        for k in range(TERM_CAP):
            kf = float(k)
            idx = np.nonzero(active)[0]
            if idx.size == 0:
                break
            ak = a[idx]
            dh, dl = dd.two_sum(kf, ak)
            qh, ql = dd.div(th[idx], tl[idx], dh, dl)
            use = skip[idx] != k
            qh = np.where(use, qh, 0.0)
            ql = np.where(use, ql, 0.0)
            nh, nl = dd.add(sh[idx], sl[idx], qh, ql)
            sh[idx] = nh
            sl[idx] = nl
            absum[idx] += np.abs(qh)
            terms[idx] = k + 1
            ratio = np.abs(qh) / np.maximum(np.abs(nh), 1e-300)
            ratio = np.where(use, ratio, np.inf)
            last[idx] = np.where(use, ratio, last[idx])
            done = use & (kf > kmin[idx]) & (ratio <= CONV_TOL)
            # step t_k -> t_{k+1} = t_k * x / (k+1)
            ph, pl = dd.mul_d(th[idx], tl[idx], x[idx])
            ph, pl = dd.div_d(ph, pl, kf + 1.0)
            th[idx] = ph
            tl[idx] = pl
            active[idx[done]] = False
    return sh, sl, absum, last, terms, ~active


def _finish(a: float, x: float, s_hi: float, s_lo: float, absum: float, last: float,
            terms: int, converged: bool, dps: int) -> OracleValue:
    if not converged:
        raise OracleUnavailable(f"series did not converge at a={a!r}, x={x!r}")
    with mpmath.workdps(dps):
        am = mpmath.mpf(a)
        xm = mpmath.mpf(x)
        s = mpmath.mpf(s_hi) + mpmath.mpf(s_lo)
        rg = mpmath.rgamma(am)
        rest = rg * s
        n = _excluded_index(a)
        head = mpmath.mpf(0)
        if n >= 0:
            eps = am + n
            # 1/(eps Gamma(-n+eps)) is finite as eps -> 0
            head = rg / eps * xm**n / mpmath.factorial(n)
        total = head + rest
        if total == 0:
            raise OracleUnavailable("oracle sum cancelled to zero")
        cond_s = absum / abs(s_hi) if s_hi != 0.0 else 0.0
        cond_t = float((abs(head) + abs(rest)) / abs(total))
        # double-double roundings are unbiased, so they accumulate like a random walk
        err = cond_t * (cond_s * 4.0 * math.sqrt(terms + 1) * _U2 + last + 10.0 ** (3 - dps))
        est = 10.0 * err
        if not est <= MAX_EST_ERROR:
            raise OracleUnavailable(f"estimated oracle error {est:.2e} too large")
        return from_mpf(total, est)


def _negint(a: float, z: float, dps: int) -> OracleValue:
    with mpmath.workdps(dps):
        return from_mpf(mpmath.mpf(z) ** int(-a), 0.0)


def oracle_gstar_batch(
    a: Sequence[float], z: Sequence[float], digits_guard: int = 8
) -> list[OracleValue | None]:
    """Oracle values for many points; ``None`` marks points the oracle rejects."""
    a_arr = np.asarray(a, dtype=np.float64).ravel()
    z_arr = np.asarray(z, dtype=np.float64).ravel()
    if a_arr.shape != z_arr.shape:
        raise ValueError("a and z must have the same length")
    for ai, zi in zip(a_arr, z_arr):
        _check(float(ai), float(zi))
    dps = 32 + int(digits_guard)
    out: list[OracleValue | None] = [None] * a_arr.size
    is_int = (a_arr <= 0.0) & (a_arr == np.floor(a_arr))
    for i in np.nonzero(is_int)[0]:
        out[i] = _negint(float(a_arr[i]), float(z_arr[i]), dps)
    idx = np.nonzero(~is_int)[0]
    if idx.size:
        aa = a_arr[idx]
        xx = -z_arr[idx]
        skip = np.array([_excluded_index(float(v)) for v in aa], dtype=np.int64)
        sh, sl, absum, last, terms, conv = _dd_sums(aa, xx, skip)
        for j, i in enumerate(idx):
            try:
                out[i] = _finish(float(aa[j]), float(xx[j]), float(sh[j]), float(sl[j]),
                                 float(absum[j]), float(last[j]), int(terms[j]),
                                 bool(conv[j]), dps)
            except OracleUnavailable:
                out[i] = None
    return out


def oracle_gstar(a: float, z: float, digits_guard: int = 8) -> OracleValue:
    """Reference ``gamma*(a, z)`` to about 31 digits.

    ``digits_guard`` is the number of decimal digits beyond double-double
    carried in the mpmath prefactors.  Raises :class:`OracleUnavailable` when
    the error estimate exceeds ``MAX_EST_ERROR``.
    """
    a = float(a)
    z = float(z)
    _check(a, z)
    dps = 32 + int(digits_guard)
    if a <= 0.0 and a == math.floor(a):
        return _negint(a, z, dps)
    skip = np.array([_excluded_index(a)], dtype=np.int64)
    sh, sl, absum, last, terms, conv = _dd_sums(np.array([a]), np.array([-z]), skip)
    return _finish(a, -z, float(sh[0]), float(sl[0]), float(absum[0]), float(last[0]),
                   int(terms[0]), bool(conv[0]), dps)
