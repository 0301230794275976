from __future__ import annotations

import numpy as np
import pytest

from pafp import PafpInstance

FIG1_ARCS = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)]
S, A, B, C, D, T = 1, 2, 3, 4, 5, 6


@pytest.fixture
def fig1() -> PafpInstance:
    return PafpInstance.build(6, FIG1_ARCS, S, T, [(B, T)])


@pytest.fixture
def fig1_core() -> PafpInstance:
    return PafpInstance.build(6, FIG1_ARCS, S, T)


# --- brute-force oracles, deliberately independent of the library ---------


def adjacency(n: int, arcs) -> np.ndarray:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in arcs:
        adj[u - 1, v - 1] = True
    return adj


def brute_distances(n: int, arcs, root: int) -> dict[int, int | None]:
    """Distance = smallest k such that some walk of k arcs reaches v (boolean matrix powers)."""
    adj = adjacency(n, arcs).astype(int)
    frontier = np.zeros(n, dtype=int)
    frontier[root - 1] = 1
    dist: dict[int, int | None] = dict.fromkeys(range(1, n + 1))
    for k in range(n):
        for v in np.flatnonzero(frontier):
            if dist[v + 1] is None:
                dist[v + 1] = k
        frontier = (frontier @ adj > 0).astype(int)
    return dist


def closure(n: int, arcs) -> np.ndarray:
    """reach[u-1, v-1] iff u reaches v by a nonempty walk (Floyd-Warshall)."""
    reach = adjacency(n, arcs)
    for k in range(n):
        reach |= reach[:, [k]] & reach[[k], :]
    return reach


def all_simple_paths(n: int, arcs, s: int, t: int) -> list[tuple[int, ...]]:
    succ = {v: sorted(w for u, w in arcs if u == v) for v in range(1, n + 1)}
    out = []

    def extend(path):
        if path[-1] == t:
            out.append(tuple(path))
            return
        for w in succ[path[-1]]:
            if w not in path:
                extend(path + [w])

    extend([s])
    return out


def path_is_safe(path, pairs) -> bool:
    on = set(path)
    return not any(u in on and v in on for u, v in pairs)


def brute_pafp(instance: PafpInstance) -> bool:
    paths = all_simple_paths(instance.n, instance.graph.arcs, instance.source, instance.target)
    return any(path_is_safe(p, instance.pairs) for p in paths)


def exact_length_sets(n: int, arcs, root: int) -> list[set[int]]:
    """Lengths enumerated from all simple paths starting at root (DAG input)."""
    succ = {v: [w for u, w in arcs if u == v] for v in range(1, n + 1)}
    layers = [set() for _ in range(n)]

    def extend(v, depth):
        layers[depth].add(v)
        for w in succ[v]:
            extend(w, depth + 1)

    extend(root, 0)
    return layers


# --- acceptance reporting ---------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def record(label: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
