"""BFS-width-2 normal form for DAG instances, with path lifting and projection.

Output vertex numbering: reachable core vertices first (original indices,
order preserved), then the target if it is unreachable, then the new source,
then spine vertices p_1..p_{2q-1}, then detour vertices w_1..w_q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Arc, NotADagError, PafpInstance, PreconditionError, check_path
from .layering import (
    TotalOrder,
    bfs_distances,
    is_dag,
    layer_profile,
    oriented_pair_arcs,
    topological_order,
    union_digraph,
)


@dataclass(frozen=True)
class NormalizedInstance:
    instance: PafpInstance
    original: PafpInstance
    # reverse-order listing of the reachable core; r_list[-1] is the source
    r_list: tuple[int, ...]
    spine: tuple[int, ...]
    detours: tuple[int, ...]
    source_prime: int
    core_arcs: frozenset[Arc]
    level: Mapping[int, int | None]
    to_output: Mapping[int, int]
    to_input: Mapping[int, int]

    @property
    def q(self) -> int:
        return len(self.r_list)

    @property
    def core_source(self) -> int:
        return self.r_list[-1]

    def booby_traps(self) -> frozenset[tuple[int, int]]:
        """Pairs {p_{2i-1}, w_i} for every detour that does not enter the source."""
        return frozenset(
            (self.spine[2 * i], w) for i, (r, w) in enumerate(zip(self.r_list, self.detours)) if r != self.core_source
        )


def normalize(instance: PafpInstance) -> NormalizedInstance:
    graph = instance.graph
    if not is_dag(graph):
        raise NotADagError("normalize requires a DAG")
    s, t = instance.source, instance.target
    dist = bfs_distances(graph, s)
    reach = sorted(v for v, d in dist.items() if d is not None)
    reach_set = frozenset(reach)

    to_output = {v: i for i, v in enumerate(reach, start=1)}
    next_id = len(reach) + 1
    if t not in reach_set:
        to_output[t] = next_id
        next_id += 1
    s_prime = next_id
    q = len(reach)
    spine = tuple(range(s_prime + 1, s_prime + 2 * q))
    detours = tuple(range(s_prime + 2 * q, s_prime + 3 * q))
    n_out = detours[-1]

    # the linear extension of the core; renumbering preserves index order, so
    # ordering the renamed core gives the same order
    core_order = topological_order(graph, within=reach_set)
    le = TotalOrder(tuple(to_output[v] for v in core_order))
    r_list = tuple(reversed(le.order))

    core_edges = frozenset((to_output[u], to_output[v]) for u, v in graph.arcs if u in reach_set and v in reach_set)
    core_pairs = frozenset(
        (to_output[u], to_output[v]) for u, v in instance.pairs if u in reach_set and v in reach_set
    )
    core_arcs = core_edges | oriented_pair_arcs(core_pairs, le)

    arcs = set(core_arcs)
    arcs.add((s_prime, spine[0]))
    arcs.update(zip(spine, spine[1:]))
    for i in range(q):
        arcs.add((spine[2 * i], detours[i]))
        arcs.add((detours[i], r_list[i]))
    s_new = to_output[s]
    traps = {(spine[2 * i], detours[i]) for i in range(q) if r_list[i] != s_new}

    out = PafpInstance.build(n_out, arcs, s_prime, to_output[t], core_pairs | traps)

    level: dict[int, int | None] = {s_prime: 0}
    for j, p in enumerate(spine, start=1):
        level[p] = j
    for i in range(1, q + 1):
        level[detours[i - 1]] = 2 * i
        level[r_list[i - 1]] = 2 * i + 1
    if t not in reach_set:
        level[to_output[t]] = None

    return NormalizedInstance(
        instance=out,
        original=instance,
        r_list=r_list,
        spine=spine,
        detours=detours,
        source_prime=s_prime,
        core_arcs=core_arcs,
        level=level,
        to_output=to_output,
        to_input={v: k for k, v in to_output.items()},
    )


@dataclass(frozen=True)
class LevelMismatch:
    vertex: int
    expected: int | None
    actual: int | None


def check_level_function(norm: NormalizedInstance) -> LevelMismatch | None:
    """Compare BFS distances from the new source with the level function; None means they agree."""
    dist = bfs_distances(norm.instance.graph, norm.source_prime)
    for v in norm.instance.graph.vertices:
        if dist[v] != norm.level.get(v):
            return LevelMismatch(v, norm.level.get(v), dist[v])
    return None


def backward_arcs_of_normal_form(norm: NormalizedInstance) -> frozenset[Arc]:
    """Backward arcs of the output union digraph from the new source.

    They must coincide with the core arcs; a mismatch is an implementation bug.
    """
    union = union_digraph(norm.instance)
    backward = layer_profile(union, norm.source_prime).backward
    if backward != norm.core_arcs:
        raise AssertionError("backward arcs of the normal form differ from the core arcs")
    if len(backward) < norm.q - 1:
        raise AssertionError(f"only {len(backward)} backward arcs for a core of {norm.q} vertices")
    return backward


def lift_path(norm: NormalizedInstance, core_path: Sequence[int]) -> tuple[int, ...]:
    """Map a safe path of the original instance to a safe path of the normal form."""
    if not check_path(norm.original, core_path).is_safe:
        raise PreconditionError("lift_path needs a safe source-target path of the original instance")
    prefix = (norm.source_prime, *norm.spine, norm.detours[-1])
    return prefix + tuple(norm.to_output[v] for v in core_path)


def project_path(norm: NormalizedInstance, normalized_path: Sequence[int]) -> tuple[int, ...]:
    """Map a safe path of the normal form back to the original instance."""
    if not check_path(norm.instance, normalized_path).is_safe:
        raise PreconditionError("project_path needs a safe path of the normalized instance")
    path = list(normalized_path)
    start = path.index(norm.core_source)
    suffix = path[start:]
    core = set(norm.r_list)
    if not all(v in core or v == norm.instance.target for v in suffix):
        raise AssertionError("suffix leaves the reachable core")
    pair_set = norm.instance.pairs
    for u, v in zip(suffix, suffix[1:]):
        if (min(u, v), max(u, v)) in pair_set:
            raise AssertionError(f"suffix uses the oriented pair arc ({u},{v})")
    return tuple(norm.to_input[v] for v in suffix)
