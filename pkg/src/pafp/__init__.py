"""Layer-based algorithms for the Path Avoiding Forbidden Pairs problem."""

from .core import (
    BudgetExceeded,
    Digraph,
    InstanceError,
    NotADagError,
    PafpInstance,
    PreconditionError,
    SafetyReport,
    Verdict,
    check_path,
    parse_instance,
    read_instance,
    serialize_instance,
    write_instance,
)
from .layering import exact_length_profile, layer_profile, reachability_order, union_digraph
from .normalize import normalize
from .oracle import count_paths, solve_exact
from .solver_bfsw2k import solve_bfsw2k
from .solver_elw2 import solve_elw2

__all__ = [
    "BudgetExceeded",
    "Digraph",
    "InstanceError",
    "NotADagError",
    "PafpInstance",
    "PreconditionError",
    "SafetyReport",
    "Verdict",
    "check_path",
    "count_paths",
    "exact_length_profile",
    "layer_profile",
    "normalize",
    "parse_instance",
    "reachability_order",
    "read_instance",
    "serialize_instance",
    "solve_bfsw2k",
    "solve_elw2",
    "solve_exact",
    "union_digraph",
    "write_instance",
]
