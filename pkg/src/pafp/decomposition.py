"""Path decompositions of the undirected union/constraint graph built from BFS layers.

Bags are X_d = L_d + L_{d+1} + Z, where L_d are the BFS layers of the union
digraph and Z collects every endpoint of a backward arc. The width is at most
2b + 2β - 1 for union BFS-width b and β backward arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import PafpInstance
from .layering import layer_profile, union_digraph


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def union_constraint_graph(instance: PafpInstance, restrict_to: Iterable[int] | None = None) -> UndirectedGraph:
    keep = frozenset(instance.graph.vertices if restrict_to is None else restrict_to)
    edges = frozenset(
        frozenset(e)
        for e in (*instance.graph.arcs, *instance.pairs)
        if e[0] in keep and e[1] in keep
    )
    return UndirectedGraph(keep, edges)


def width_bound(instance: PafpInstance) -> int:
    """2 * bfsw(H, s) + 2 * |backward arcs of H| - 1 for the union digraph H."""
    profile = layer_profile(union_digraph(instance), instance.source)
    return 2 * profile.bfsw + 2 * len(profile.backward) - 1


def build_bfs_bags(instance: PafpInstance) -> PathDecomposition:
    """Decomposition of the union/constraint graph restricted to vertices the union digraph reaches."""
    profile = layer_profile(union_digraph(instance), instance.source)
    z = frozenset(v for arc in profile.backward for v in arc)
    layers = profile.layers
    bags = []
    for d in range(len(layers)):
        nxt = layers[d + 1] if d + 1 < len(layers) else frozenset()
        bags.append(layers[d] | nxt | z)
    return PathDecomposition(tuple(bags))


def reachable_union_graph(instance: PafpInstance) -> UndirectedGraph:
    """U[R_H]: the union/constraint graph on the vertices reachable in the union digraph."""
    profile = layer_profile(union_digraph(instance), instance.source)
    return union_constraint_graph(instance, profile.reachable)


def verify_decomposition(graph: UndirectedGraph, decomp: PathDecomposition) -> str | None:
    """Return None if ``decomp`` is a path decomposition of ``graph``, else the first violation."""
    seen_in: dict[int, list[int]] = {}
    for i, bag in enumerate(decomp.bags):
        for v in bag:
            if v not in graph.vertices:
                return f"bag {i} holds vertex {v} which is not in the graph"
            seen_in.setdefault(v, []).append(i)
    for v in sorted(graph.vertices):
        idx = seen_in.get(v)
        if not idx:
            return f"vertex {v} is in no bag"
        if idx[-1] - idx[0] + 1 != len(idx):
            return f"bags holding vertex {v} are not contiguous: {idx}"
    for e in sorted(graph.edges, key=sorted):
        u, v = sorted(e)
        if not any(u in bag and v in bag for bag in decomp.bags):
            return f"edge {{{u},{v}}} is in no bag"
    return None
