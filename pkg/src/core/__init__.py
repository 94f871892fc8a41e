"""Core domain model for interval separation.

This module provides the exact-arithmetic interval types, the left-possible
placement strategy and feasibility checks shared by every solver.
"""

from src.core.model import (
    Configuration,
    Direction,
    Instance,
    Interval,
    Scalar,
    Solution,
    format_scalar,
    is_feasible,
    left_possible_placement,
    max_displacement,
    normalize_instance,
    reflect_instance,
    to_scalar,
    to_two_direction,
)

__all__ = [
    "Configuration",
    "Direction",
    "Instance",
    "Interval",
    "Scalar",
    "Solution",
    "format_scalar",
    "is_feasible",
    "left_possible_placement",
    "max_displacement",
    "normalize_instance",
    "reflect_instance",
    "to_scalar",
    "to_two_direction",
]
