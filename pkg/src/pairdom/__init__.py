"""Minimum paired domination on interval and circular-arc intersection models."""

from .circular import solve_circular_fast, solve_circular_naive
from .errors import (
    ForestViolation,
    GenExhausted,
    Infeasible,
    InvalidSolution,
    MalformedModel,
    PairDomError,
    ParseError,
    PartnerUndefined,
    ScaleExceeded,
)
from .instances import GenConfig, generate, normalize, parse, read_model, serialize, write_model
from .interval import PairSet, solve_interval
from .model import ArcModel, IntervalModel, validate_arc_model, validate_interval_model
from .oracle import is_valid_solution, min_paired_dominating_bruteforce, verify_pairs

__version__ = "0.1.0"

__all__ = [
    "ArcModel",
    "ForestViolation",
    "GenConfig",
    "GenExhausted",
    "Infeasible",
    "IntervalModel",
    "InvalidSolution",
    "MalformedModel",
    "PairDomError",
    "PairSet",
    "ParseError",
    "PartnerUndefined",
    "ScaleExceeded",
    "generate",
    "is_valid_solution",
    "min_paired_dominating_bruteforce",
    "normalize",
    "parse",
    "read_model",
    "serialize",
    "solve_circular_fast",
    "solve_circular_naive",
    "solve_interval",
    "validate_arc_model",
    "validate_interval_model",
    "verify_pairs",
    "write_model",
]
