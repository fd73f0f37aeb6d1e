"""Solvability of HH^1(kG) through the transfer graph, with brute-force oracles."""

from .estimator import SolvabilityAnalyzer, check_group, check_prime
from .gamma import GammaGraph, build_gamma, build_gamma2, reduce_gamma, to_dot
from .groups import CapExceededError, Group, GroupError
from .lie import build_h, derived_series
from .loewy import dl_upper_bound, loewy
from .report import INCONCLUSIVE, NOT_SOLVABLE, SOLVABLE, Report, analyze, emit
from .spec import GroupSpec, SpecError, build_group, parse_spec

__all__ = [
    "CapExceededError", "GammaGraph", "Group", "GroupError", "GroupSpec", "INCONCLUSIVE",
    "NOT_SOLVABLE", "Report", "SOLVABLE", "SolvabilityAnalyzer", "SpecError", "analyze",
    "build_gamma", "build_gamma2", "build_group", "build_h", "check_group", "check_prime",
    "derived_series", "dl_upper_bound", "emit", "loewy", "parse_spec", "reduce_gamma", "to_dot",
]
__version__ = "0.1.0"
