"""Double-precision gamma*(a, z) for real a and negative real z."""

from .config import Config
from .core import (
    EvalPoint,
    RangeStatus,
    evaluate,
    evaluate_with_method,
    gstar,
    predict_range_status,
    select_method,
)
from .results import ConvergenceError, DomainError, EvalResult, Method, Status

__all__ = [
    "Config",
    "ConvergenceError",
    "DomainError",
    "EvalPoint",
    "EvalResult",
    "Method",
    "RangeStatus",
    "Status",
    "evaluate",
    "evaluate_with_method",
    "gstar",
    "predict_range_status",
    "select_method",
]

__version__ = "0.1.0"
