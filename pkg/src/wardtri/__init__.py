"""Exact construction and cross-validation of Ward-related integer triangles."""

from .exact_arith import (
    ExactnessError,
    binomial,
    exact_div,
    factorial,
    falling_factorial,
    rising_factorial,
)
from .partition_transform import (
    constant_one,
    enumerate_partitions,
    partition_transform,
    ward_first_kind,
    ward_second_kind,
)
from .triangles import (
    Kind,
    Strategy,
    Triangle,
    UnsupportedStrategyError,
    central,
    lah,
    stirling1_unsigned,
    stirling2,
    supported_strategies,
    triangle,
    value,
)

__version__ = "0.1.0"

__all__ = [
    "ExactnessError",
    "Kind",
    "Strategy",
    "Triangle",
    "UnsupportedStrategyError",
    "binomial",
    "central",
    "constant_one",
    "enumerate_partitions",
    "exact_div",
    "factorial",
    "falling_factorial",
    "lah",
    "partition_transform",
    "rising_factorial",
    "stirling1_unsigned",
    "stirling2",
    "supported_strategies",
    "triangle",
    "value",
    "ward_first_kind",
    "ward_second_kind",
]
