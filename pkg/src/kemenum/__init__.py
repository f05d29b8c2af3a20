"""Distinct Kemeny ranking enumeration and structural profile parameters."""

from .core import (
    Profile,
    Scored,
    kemeny_score,
    kemeny_score_from_costs,
    kt_distance,
    pairwise_costs,
    respects_unanimity,
    unanimity_order,
)
from .errors import (
    BudgetExceededError,
    InfeasibleWindowsError,
    KemenyError,
    ProfileFormatError,
)
from .parameters import ParameterReport, parameter_report
from .solvers import Approx, Budget, Opt, solve

__version__ = "0.1.0"

__all__ = [
    "Approx",
    "Budget",
    "BudgetExceededError",
    "InfeasibleWindowsError",
    "KemenyError",
    "Opt",
    "ParameterReport",
    "Profile",
    "ProfileFormatError",
    "Scored",
    "kemeny_score",
    "kemeny_score_from_costs",
    "kt_distance",
    "pairwise_costs",
    "parameter_report",
    "respects_unanimity",
    "solve",
    "unanimity_order",
]
