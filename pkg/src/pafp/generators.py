"""Instance families: layered 3-SAT reductions, ladders, backward-augmented ladders.

Randomised generators draw from ``numpy.random.default_rng(seed)`` (PCG64),
so a (parameters, seed) pair reproduces the same instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import Arc, InstanceError, PafpInstance
from .layering import bfs_distances


class InfeasibleError(Exception):
    pass


@dataclass(frozen=True)
class Cnf3:
    """3-CNF formula; literals are signed 1-based variable indices as in DIMACS."""

    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} does not have exactly three literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} out of range for {self.var_count} variables")

    @classmethod
    def from_clauses(cls, var_count: int, clauses) -> Cnf3:
        return cls(var_count, tuple(pad_clause(c) for c in clauses))


def pad_clause(literals) -> tuple[int, int, int]:
    """Drop repeated literals, then repeat the last one until there are three."""
    distinct = list(dict.fromkeys(int(x) for x in literals))
    if not distinct:
        raise ValueError("empty clause")
    if len(distinct) > 3:
        raise ValueError(f"clause {distinct} has more than three literals")
    while len(distinct) < 3:
        distinct.append(distinct[-1])
    return tuple(distinct)


def parse_dimacs_cnf(text: str) -> Cnf3:
    var_count = clause_count = None
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "%":
            break
        if tokens[0] == "p":
            if var_count is not None or len(tokens) != 4 or tokens[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line")
            try:
                var_count, clause_count = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed problem line") from None
            continue
        if var_count is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for tok in tokens:
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"line {lineno}: bad literal {tok!r}") from None
            if abs(lit) > var_count:
                raise ValueError(f"line {lineno}: literal {lit} exceeds {var_count} variables")
            if lit == 0:
                try:
                    clauses.append(pad_clause(current))
                except ValueError as exc:
                    raise ValueError(f"line {lineno}: {exc}") from None
                current = []
            else:
                current.append(lit)
    if var_count is None:
        raise ValueError("missing problem line 'p cnf <vars> <clauses>'")
    if current:
        raise ValueError("last clause is not terminated by 0")
    if len(clauses) != clause_count:
        raise ValueError(f"problem line declares {clause_count} clauses, found {len(clauses)}")
    return Cnf3(var_count, tuple(clauses))


def sat_brute(cnf: Cnf3) -> bool:
    """Exhaustive satisfiability check over all assignments (at most 20 variables)."""
    if cnf.var_count > 20:
        raise ValueError("sat_brute is limited to 20 variables")
    rows = np.arange(1 << cnf.var_count, dtype=np.int64)
    # values[v] is the truth value of variable v+1 under each assignment
    values = (rows[None, :] >> np.arange(cnf.var_count)[:, None]) & 1
    sat = np.ones(rows.shape, dtype=bool)
    for clause in cnf.clauses:
        hit = np.zeros(rows.shape, dtype=bool)
        for lit in clause:
            col = values[abs(lit) - 1].astype(bool)
            hit |= col if lit > 0 else ~col
        sat &= hit
    return bool(sat.any())


def random_cnf3(var_count: int, clause_count: int, seed: int) -> Cnf3:
    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(clause_count):
        vars_ = rng.choice(var_count, size=min(3, var_count), replace=False) + 1
        signs = rng.choice([-1, 1], size=len(vars_))
        clauses.append(pad_clause(int(v) * int(s) for v, s in zip(vars_, signs)))
    return Cnf3(var_count, tuple(clauses))


def gen_gmo(cnf: Cnf3) -> PafpInstance:
    """Layered reduction: one vertex per literal occurrence, one layer per clause.

    Vertex 1 is the source, clause i (0-based) occupies vertices 3i+2..3i+4,
    and the target is last. Complementary occurrences form forbidden pairs.
    """
    m = len(cnf.clauses)
    if m == 0:
        raise InstanceError("gen_gmo needs at least one clause")
    s, t = 1, 3 * m + 2
    layers = [[s]] + [[3 * i + 2 + j for j in range(3)] for i in range(m)] + [[t]]
    arcs = [(u, v) for a, b in zip(layers, layers[1:]) for u in a for v in b]
    occurrences = [(3 * i + 2 + j, lit) for i, clause in enumerate(cnf.clauses) for j, lit in enumerate(clause)]
    pairs = [(u, v) for (u, a), (v, b) in combinations(occurrences, 2) if a == -b]
    return PafpInstance.build(t, arcs, s, t, pairs)


def _ladder_layers(ell: int) -> list[list[int]]:
    return [[1]] + [[2 * d, 2 * d + 1] for d in range(1, ell)] + [[2 * ell]]


def gen_ladder(ell: int, density: float | None = None, seed: int = 0) -> PafpInstance:
    """Ladder with layers {s}, two vertices per inner layer, {t}; arcs only between consecutive layers.

    ``density=None`` keeps every arc. Otherwise each arc survives with
    probability ``density``; every vertex then keeps at least one incoming arc
    and a random source-target chain is always retained.
    """
    if ell < 1:
        raise InstanceError("ladder length must be at least 1")
    if density is not None and not 0 < density <= 1:
        raise InstanceError(f"density {density} outside (0, 1]")
    layers = _ladder_layers(ell)
    n = 2 * ell
    if density is None:
        arcs = {(u, v) for a, b in zip(layers, layers[1:]) for u in a for v in b}
        return PafpInstance.build(n, arcs, 1, n)
    rng = np.random.default_rng(seed)
    arcs: set[Arc] = set()
    for a, b in zip(layers, layers[1:]):
        for v in b:
            kept = [u for u in a if rng.random() < density]
            if not kept:
                kept = [a[int(rng.integers(len(a)))]]
            arcs.update((u, v) for u in kept)
    chain = [layer[int(rng.integers(len(layer)))] for layer in layers]
    arcs.update(zip(chain, chain[1:]))
    return PafpInstance.build(n, arcs, 1, n)


def _reaches(succ: dict[int, set[int]], src: int, dst: int) -> bool:
    stack, seen = [src], {src}
    while stack:
        u = stack.pop()
        if u == dst:
            return True
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def gen_backward_augmented(ell: int, k: int, seed: int = 0, density: float = 0.5) -> PafpInstance:
    """Density ladder plus ``k`` arcs pointing to strictly earlier BFS layers.

    Each injected arc (u, v) has dist(v) < dist(u) and v not reaching u, so the
    graph stays acyclic and the BFS distances are untouched.
    """
    if k < 0:
        raise InstanceError("k must be non-negative")
    base = gen_ladder(ell, density, seed)
    rng = np.random.default_rng([seed, 1])
    dist = bfs_distances(base.graph, base.source)
    succ = {v: set(base.graph.successors[v]) for v in base.graph.vertices}
    reachable = [v for v in base.graph.vertices if dist[v] is not None]
    injected: list[Arc] = []
    for _ in range(k):
        candidates = [
            (u, v)
            for u in reachable
            for v in reachable
            if dist[v] < dist[u] and v not in succ[u] and not _reaches(succ, v, u)
        ]
        if not candidates:
            raise InfeasibleError(f"only {len(injected)} backward arcs could be placed, {k} requested")
        u, v = candidates[int(rng.integers(len(candidates)))]
        succ[u].add(v)
        injected.append((u, v))
    return PafpInstance(base.graph.with_arcs(injected), base.source, base.target)


def with_random_pairs(instance: PafpInstance, count: int, seed: int) -> PafpInstance:
    """Add up to ``count`` distinct random forbidden pairs."""
    n = instance.n
    rng = np.random.default_rng(seed)
    pairs = set()
    total = n * (n - 1) // 2
    while len(pairs) < min(count, total):
        u, v = (int(x) + 1 for x in rng.choice(n, size=2, replace=False))
        pairs.add((min(u, v), max(u, v)))
    return instance.with_pairs(pairs)


def random_dag_instance(n: int, arc_prob: float, pair_count: int, seed: int) -> PafpInstance:
    """Random DAG on ``n`` vertices (hidden random topological order) with random pairs."""
    if n < 2:
        raise InstanceError("need at least two vertices")
    rng = np.random.default_rng(seed)
    perm = [int(x) + 1 for x in rng.permutation(n)]
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < arc_prob]
    i, j = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
    inst = PafpInstance.build(n, arcs, perm[i], perm[j])
    return with_random_pairs(inst, pair_count, seed + 1)


def random_digraph_instance(n: int, arc_prob: float, pair_count: int, seed: int) -> PafpInstance:
    """Random digraph (cycles allowed) with random pairs."""
    rng = np.random.default_rng(seed)
    arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v and rng.random() < arc_prob]
    s, t = (int(x) + 1 for x in rng.choice(n, size=2, replace=False))
    return with_random_pairs(PafpInstance.build(n, arcs, s, t), pair_count, seed + 1)
