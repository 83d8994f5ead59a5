"""File formats, oracles, the singular-value driver, the benchmark runner and the CLI."""

from .bench import format_table, run_benchmark
from .driver import METHODS, default_outer, inner_bands, singular_bounds
from .oracle import monte_carlo_inner, random_instance, random_interval_matrix, sharpness
from .problem import ProblemFile, ReportRecord, load_problem

__all__ = [
    "METHODS", "ProblemFile", "ReportRecord", "default_outer", "format_table", "inner_bands",
    "load_problem", "monte_carlo_inner", "random_instance", "random_interval_matrix",
    "run_benchmark", "sharpness", "singular_bounds",
]
