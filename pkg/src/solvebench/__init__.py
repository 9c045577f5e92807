"""Constraint-puzzle benchmark plus an LLM-writes-a-solver-program harness."""

from .core import (
    Dataset,
    GoldSolutionSet,
    INFEASIBLE,
    Instance,
    SizeDescriptor,
    all_problem_ids,
    build_dataset,
    canonical_text,
    get_problem,
    load_dataset,
    save_dataset,
)
from .problems import Verdict, VerdictKind

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "GoldSolutionSet",
    "INFEASIBLE",
    "Instance",
    "SizeDescriptor",
    "Verdict",
    "VerdictKind",
    "all_problem_ids",
    "build_dataset",
    "canonical_text",
    "get_problem",
    "load_dataset",
    "save_dataset",
    "__version__",
]
