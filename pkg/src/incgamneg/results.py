"""Result types shared by every evaluation path."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class DomainError(ValueError):
    """Argument outside the domain of a function (poles, z >= 0, NaN)."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation hit its term cap without converging."""


class Status(enum.Enum):
    OK = "ok"
    OVERFLOW = "overflow"
    UNDERFLOW = "underflow"


class Method(enum.Enum):
    SERIES_POS = "series_pos"
    SERIES_NEG_EPS = "series_neg_eps"
    EXACT_NEGINT = "exact_negint"
    UAE_DIRECT = "uae_direct"
    UAE_RECURSION = "uae_recursion"
    POINCARE = "poincare"


@dataclass(frozen=True)
class EvalResult:
    """Value of gamma*(a, z) together with its range status and provenance.

    On overflow ``value`` is the signed largest finite double; on underflow it
    is a signed zero.  ``method`` is set even when the status is not OK.
    """

    value: float
    status: Status
    method: Method
    terms_used: int = 0

    @property
    def ok(self) -> bool:
        return self.status is Status.OK
