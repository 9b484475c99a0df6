"""Tunable thresholds and truncation parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Largest table indices available in the embedded coefficient file.
MAX_SMALL_ETA_ORDER = 62
MAX_C_COEFFS = 25


@dataclass(frozen=True)
class Config:
    """Evaluation parameters.

    The four region thresholds describe where each method is used.  The UAE
    parameters were tuned so that both evaluation paths of the correction
    function ``T_a(eta)`` stay at the 1e-15 level for ``a >= 5``.
    """

    rel_tol: float = 5e-14
    z_poincare: float = -50.0
    a_series_floor: float = -5.0
    z_series_wall: float = -1.5
    z_uae_wall: float = -100.0
    eta_switch: float = 2.0
    n_small_eta: int = 60
    n_c_coeffs: int = 24
    uae_start_min: float = 6.0

    def __post_init__(self) -> None:
        fields = (
            self.rel_tol,
            self.z_poincare,
            self.a_series_floor,
            self.z_series_wall,
            self.z_uae_wall,
            self.eta_switch,
            self.uae_start_min,
        )
        if not all(math.isfinite(v) for v in fields):
            raise ValueError("all Config thresholds must be finite")
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be positive")
        if not (self.z_poincare < 0.0 and self.z_series_wall < 0.0):
            raise ValueError("z_poincare and z_series_wall must be negative")
        if not self.z_uae_wall < self.z_series_wall:
            raise ValueError("z_uae_wall must lie below z_series_wall")
        if not self.eta_switch > 0.0:
            raise ValueError("eta_switch must be positive")
        if not 1 <= self.n_small_eta <= MAX_SMALL_ETA_ORDER:
            raise ValueError(f"n_small_eta must lie in [1, {MAX_SMALL_ETA_ORDER}]")
        if not 0 <= self.n_c_coeffs <= MAX_C_COEFFS:
            raise ValueError(f"n_c_coeffs must lie in [0, {MAX_C_COEFFS}]")
        if not self.uae_start_min >= 4.0:
            raise ValueError("uae_start_min must be at least 4")


DEFAULT_CONFIG = Config()
