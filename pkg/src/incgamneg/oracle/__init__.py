"""Reference evaluators used for verification only."""

from .dd import DoubleDouble
from .quadrature import QuadratureStep, gstar_quadrature, quadrature_trace
from .series import oracle_gstar, oracle_gstar_batch
from .values import OracleUnavailable, OracleValue

__all__ = [
    "DoubleDouble",
    "OracleUnavailable",
    "OracleValue",
    "QuadratureStep",
    "gstar_quadrature",
    "oracle_gstar",
    "oracle_gstar_batch",
    "quadrature_trace",
]
