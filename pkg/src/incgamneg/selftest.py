"""Verification suites behind the ``selftest`` command."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, Config
from .core import EvalPoint, evaluate, evaluate_with_method
from .oracle import oracle_gstar_batch
from .recurrence import rr2_residual, rr4_residual
from .results import Method, Status
from .rng import SplitMix64, sample_points

__all__ = ["SuiteReport", "oracle_suite", "recurrence_suite", "overlap_suite", "run_all"]


@dataclass(frozen=True)
class SuiteReport:
    name: str
    worst: float
    checked: int
    skipped: int
    tol: float

    @property
    def skip_fraction(self) -> float:
        total = self.checked + self.skipped
        return self.skipped / total if total else 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and self.worst <= self.tol and self.skip_fraction <= 0.01

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {verdict} worst={self.worst:.3e} tol={self.tol:.1e} "
            f"checked={self.checked} skipped={self.skipped}"
        )


def oracle_suite(n: int, seed: int, tol: float, cfg: Config = DEFAULT_CONFIG) -> SuiteReport:
    """Relative error against the double-double oracle on the full domain."""
    pts = sample_points(n, seed)
    refs = oracle_gstar_batch([p[0] for p in pts], [p[1] for p in pts])
    worst = 0.0
    checked = skipped = 0
    for (a, z), ref in zip(pts, refs):
        if ref is None:
            skipped += 1
            continue
        res = evaluate(EvalPoint(a, z), cfg)
        if res.status is not Status.OK:
            continue
        worst = max(worst, ref.rel_error(res.value))
        checked += 1
    return SuiteReport("oracle", worst, checked, skipped, tol)


def recurrence_triples(n: int, seed: int):
    """Points ``(a, z)``, ``a, z > 0``, for relations linking ``-a, -a-1, -a-2``.

    ``a`` sits on a 2**-30 grid so that ``a+1`` and ``a+2`` are exact doubles;
    otherwise the rounding of the shifted parameter alone shows up in the
    residual, amplified by ``d ln G / da``.
    """
    g = SplitMix64(seed ^ 0x5EED)
    for _ in range(n):
        a = round(g.uniform(0.0, 497.0) * 2.0**30) * 2.0**-30
        yield a, g.uniform(1e-3, 500.0)


def recurrence_residuals(a: float, z: float, cfg: Config = DEFAULT_CONFIG):
    """First-order and three-term relation residuals, normalized.

    ``None`` when one of the three values leaves double range.
    """
    vals = []
    for k in range(3):
        r = evaluate(EvalPoint(-(a + k), -z), cfg)
        if r.status is not Status.OK:
            return None
        vals.append(r.value)
    g0, g1, g2 = vals
    return rr2_residual(a, z, g0, g1), rr4_residual(a, z, g0, g1, g2)


def recurrence_suite(n: int, seed: int, tol: float, cfg: Config = DEFAULT_CONFIG) -> SuiteReport:
    worst = 0.0
    checked = 0
    for a, z in recurrence_triples(n, seed):
        res = recurrence_residuals(a, z, cfg)
        if res is None:
            continue
        worst = max(worst, abs(res[0]), abs(res[1]))
        checked += 1
    # range exclusions are expected here and are not oracle skips
    return SuiteReport("recurrence", worst, checked, 0, tol)


def overlap_pairs(n: int, seed: int):
    """Points near region boundaries with the two methods that meet there."""
    g = SplitMix64(seed ^ 0xB0DA)
    third = max(n // 3, 1)
    for _ in range(third):
        yield g.uniform(1e-3, 20.0), g.uniform(-55.0, -45.0), Method.SERIES_POS, Method.POINCARE
    for _ in range(third):
        a = g.uniform(-5.5, -4.5)
        if a == -5.0:
            continue
        z = g.uniform(-100.0, -1.5)
        yield a, z, Method.SERIES_NEG_EPS, Method.UAE_RECURSION
        # the direct expansion is only used (and only accurate) for |a| >= 5
        if a < -5.0:
            yield a, z, Method.SERIES_NEG_EPS, Method.UAE_DIRECT
    for _ in range(third):
        a = g.uniform(-5.0, 0.0)
        if a in (0.0, -5.0):
            continue
        yield a, g.uniform(-105.0, -95.0), Method.SERIES_NEG_EPS, Method.UAE_RECURSION


def overlap_suite(n: int, seed: int, tol: float, cfg: Config = DEFAULT_CONFIG) -> SuiteReport:
    worst = 0.0
    checked = 0
    for a, z, m1, m2 in overlap_pairs(n, seed):
        p = EvalPoint(a, z)
        r1 = evaluate_with_method(p, m1, cfg)
        r2 = evaluate_with_method(p, m2, cfg)
        if r1.status is not Status.OK or r2.status is not Status.OK:
            continue
        if r1.value == r2.value:
            rel = 0.0
        else:
            rel = abs(r1.value - r2.value) / max(abs(r1.value), abs(r2.value))
        worst = max(worst, rel)
        checked += 1
    return SuiteReport("overlap", worst, checked, 0, tol)


def run_all(n: int, seed: int, tol: float, cfg: Config = DEFAULT_CONFIG) -> list[SuiteReport]:
    small = max(n // 10, 30)
    return [
        oracle_suite(n, seed, tol, cfg),
        recurrence_suite(small, seed, tol, cfg),
        overlap_suite(small, seed, tol, cfg),
    ]


