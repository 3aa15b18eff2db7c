"""Theorem-verification harness: named checks plus the two constructive solvers."""

from .core import CheckReport, TheoremCheck, get_check, list_checks, run_check, serialize_scene
from .sampling import Reject, Sampler
from .solvers import (
    equal_incircle_cevian,
    fixed_point,
    fixed_point_figure,
    fixed_point_residual,
    parallelogram_residual,
    trapezoid_residual,
)

__all__ = [
    "CheckReport",
    "Reject",
    "Sampler",
    "TheoremCheck",
    "equal_incircle_cevian",
    "fixed_point",
    "fixed_point_figure",
    "fixed_point_residual",
    "parallelogram_residual",
    "trapezoid_residual",
    "get_check",
    "list_checks",
    "run_check",
    "serialize_scene",
]
