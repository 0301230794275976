"""Exact reference solver and path counter for small instances."""

from __future__ import annotations

from .core import BudgetExceeded, PafpInstance
from .layering import topological_order

DEFAULT_BUDGET = 10**7


def solve_exact(instance: PafpInstance, budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """Depth-first search over vertex-simple paths from the source.

    Neighbours are tried in ascending order and a branch is dropped as soon as
    it would complete a forbidden pair. Returns the first safe path found, or
    None when none exists. Raises BudgetExceeded after ``budget`` expansions.
    """
    succ = instance.graph.successors
    partners = instance.partners
    s, t = instance.source, instance.target
    path = [s]
    on_path = {s}
    iters = [iter(succ[s])]
    expanded = 1
    while iters:
        v = next(iters[-1], None)
        if v is None:
            iters.pop()
            on_path.discard(path.pop())
            continue
        if v in on_path or not partners[v].isdisjoint(on_path):
            continue
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded(f"oracle exceeded its budget of {budget} expansions")
        path.append(v)
        if v == t:
            return tuple(path)
        on_path.add(v)
        iters.append(iter(succ[v]))
    return None


def count_paths(instance: PafpInstance) -> int:
    """Number of distinct source-target paths, ignoring forbidden pairs."""
    graph = instance.graph
    ways = dict.fromkeys(graph.vertices, 0)
    ways[instance.source] = 1
    for u in topological_order(graph):
        if ways[u]:
            for v in graph.successors[u]:
                ways[v] += ways[u]
    return ways[instance.target]
