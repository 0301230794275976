"""Distances, BFS layers, exact-length layers, backward arcs and vertex orders."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import Arc, Digraph, NotADagError, PafpInstance


@dataclass(frozen=True)
class LayerProfile:
    """BFS view of a digraph from ``root``.

    ``dist`` maps every vertex to its distance from the root, or ``None`` if
    the vertex is unreachable.
    """

    root: int
    dist: Mapping[int, int | None]
    layers: tuple[frozenset[int], ...]
    backward: frozenset[Arc]

    @property
    def bfsw(self) -> int:
        return max(len(layer) for layer in self.layers)

    @cached_property
    def reachable(self) -> frozenset[int]:
        return frozenset(v for v, d in self.dist.items() if d is not None)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


@dataclass(frozen=True)
class ExactLengthProfile:
    layers: tuple[frozenset[int], ...]

    @property
    def elw(self) -> int:
        return max((len(layer) for layer in self.layers), default=0)

    def lengths_of(self, v: int) -> list[int]:
        return [d for d, layer in enumerate(self.layers) if v in layer]


@dataclass(frozen=True)
class TotalOrder:
    """Strict total order given as the list of vertices from first to last."""

    order: tuple[int, ...]

    @cached_property
    def rank(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def precedes(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]


def bfs_distances(graph: Digraph, root: int) -> dict[int, int | None]:
    dist: dict[int, int | None] = dict.fromkeys(graph.vertices)
    dist[root] = 0
    queue = deque([root])
    succ = graph.successors
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in succ[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return dist


def layer_profile(graph: Digraph, root: int) -> LayerProfile:
    if not 1 <= root <= graph.n:
        raise ValueError(f"root {root} outside 1..{graph.n}")
    dist = bfs_distances(graph, root)
    depth = max(d for d in dist.values() if d is not None)
    layers: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, d in dist.items():
        if d is not None:
            layers[d].add(v)
    backward = frozenset(
        (u, v)
        for u, v in graph.arcs
        if dist[u] is not None and dist[v] is not None and dist[v] < dist[u]
    )
    return LayerProfile(root, dist, tuple(frozenset(x) for x in layers), backward)


def backward_count(graph: Digraph, root: int) -> int:
    return len(layer_profile(graph, root).backward)


def _kahn_min_index(vertices, succ, indegree: dict[int, int]) -> list[int] | None:
    heap = [v for v in vertices if indegree[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in succ(u):
            indegree[v] -= 1
            if indegree[v] == 0:
                heapq.heappush(heap, v)
    return order if len(order) == len(indegree) else None


def topological_order(graph: Digraph, within: frozenset[int] | None = None) -> list[int]:
    """Kahn's algorithm with smallest-index tie-breaking.

    With ``within`` given, orders the induced subgraph on that vertex set.
    Raises NotADagError on a directed cycle.
    """
    vertices = graph.vertices if within is None else sorted(within)
    keep = set(vertices)
    indegree = dict.fromkeys(vertices, 0)
    for u, v in graph.arcs:
        if u in keep and v in keep:
            indegree[v] += 1
    order = _kahn_min_index(vertices, lambda u: (v for v in graph.successors[u] if v in keep), indegree)
    if order is None:
        raise NotADagError("graph contains a directed cycle")
    return order


def is_dag(graph: Digraph) -> bool:
    try:
        topological_order(graph)
    except NotADagError:
        return False
    return True


def reachability_order(graph: Digraph) -> TotalOrder:
    """Deterministic reachability-compatible order.

    Strongly connected components are ordered topologically, ties going to
    the component holding the smallest vertex index; vertices inside a
    component follow index order.
    """
    n = graph.n
    if n == 0:
        return TotalOrder(())
    if graph.arcs:
        rows, cols = zip(*graph.arcs)
        adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (np.array(rows) - 1, np.array(cols) - 1)), shape=(n, n))
        _, labels = connected_components(adj, directed=True, connection="strong")
    else:
        labels = np.arange(n)
    members: dict[int, list[int]] = {}
    for v in graph.vertices:
        members.setdefault(int(labels[v - 1]), []).append(v)
    # re-key components by their smallest member so the heap breaks ties on index
    comp_of = {v: vs[0] for vs in members.values() for v in vs}
    comp_succ: dict[int, set[int]] = {c: set() for c in comp_of.values()}
    for u, v in graph.arcs:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv:
            comp_succ[cu].add(cv)
    indegree = dict.fromkeys(comp_succ, 0)
    for targets in comp_succ.values():
        for c in targets:
            indegree[c] += 1
    comp_order = _kahn_min_index(sorted(comp_succ), lambda c: comp_succ[c], indegree)
    assert comp_order is not None  # a condensation is always acyclic
    by_key = {vs[0]: vs for vs in members.values()}
    return TotalOrder(tuple(v for c in comp_order for v in by_key[c]))


def oriented_pair_arcs(pairs, order: TotalOrder) -> frozenset[Arc]:
    return frozenset((u, v) if order.precedes(u, v) else (v, u) for u, v in pairs)


def union_digraph(instance: PafpInstance) -> Digraph:
    order = reachability_order(instance.graph)
    return instance.graph.with_arcs(oriented_pair_arcs(instance.pairs, order))


def exact_length_profile(graph: Digraph, root: int) -> ExactLengthProfile:
    """Exact-length layers D_0..D_{n-1} by the forward dynamic programme.

    D_d holds the vertices reachable from ``root`` by a walk of exactly d
    arcs; on a DAG every such walk is a path.
    """
    if not is_dag(graph):
        raise NotADagError("exact-length layers require a DAG")
    layers = [frozenset([root])]
    for _ in range(1, graph.n):
        prev = layers[-1]
        layers.append(frozenset(v for u, v in graph.arcs if u in prev))
    return ExactLengthProfile(tuple(layers))
