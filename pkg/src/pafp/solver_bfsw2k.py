"""PAFP on DAGs of BFS-width at most 2 with k backward arcs, in 2^k polynomial rounds.

Every subset S of the backward arcs is a guess for the backward arcs a safe
path uses. Between consecutive arcs of S the path only moves forward through
BFS layers, so each stretch is described by an entry and an exit choice per
layer, which is a 2-SAT problem.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .core import Arc, BudgetExceeded, NotADagError, PafpInstance, PreconditionError, check_path
from .layering import LayerProfile, is_dag, layer_profile, reachability_order
from .twosat import Term, TwoSatFormula, neg, pos, solve

DEFAULT_MAX_K = 24


@dataclass(frozen=True)
class SegmentPlan:
    arcs: tuple[Arc, ...]
    # (start, end) of each forward stretch; consecutive stretches are joined by arcs[j]
    segments: tuple[tuple[int, int], ...]
    feasible: bool


def plan_segments(instance: PafpInstance, profile: LayerProfile, subset: Sequence[Arc], rank: dict[int, int]) -> SegmentPlan:
    """Order ``subset`` by the rank of arc tails and cut the path into forward stretches."""
    arcs = tuple(sorted(subset, key=lambda a: (rank[a[0]], rank[a[1]])))
    starts = [instance.source] + [head for _, head in arcs]
    ends = [tail for tail, _ in arcs] + [instance.target]
    segments = tuple(zip(starts, ends))
    lam = profile.dist
    feasible = all(
        lam[a] is not None and lam[b] is not None and lam[a] <= lam[b] for a, b in segments
    )
    return SegmentPlan(arcs, segments, feasible)


@dataclass
class SegmentEncoding:
    plan: SegmentPlan
    formula: TwoSatFormula
    layers: tuple[tuple[int, ...], ...]
    # (segment, depth) -> (entry variable, exit variable), only for two-vertex layers
    occurrence_vars: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def _choice(self, j: int, d: int, u: int, which: int) -> Term:
        layer = self.layers[d]
        if len(layer) == 1:
            return u == layer[0]
        var = self.occurrence_vars[(j, d)][which]
        if u == layer[0]:
            return neg(var)
        if u == layer[1]:
            return pos(var)
        return False

    def ent(self, j: int, d: int, u: int) -> Term:
        return self._choice(j, d, u, 0)

    def exit(self, j: int, d: int, u: int) -> Term:
        return self._choice(j, d, u, 1)

    def _pick(self, j: int, d: int, which: int, assignment: list[bool]) -> int:
        layer = self.layers[d]
        if len(layer) == 1:
            return layer[0]
        return layer[int(assignment[self.occurrence_vars[(j, d)][which]])]

    def decode(self, assignment: list[bool]) -> tuple[int, ...]:
        """Concatenate the stretches; stretches are joined by the arcs of the plan."""
        walk: list[int] = []
        lam = self.layer_of
        for j, (alpha, omega) in enumerate(self.plan.segments):
            for d in range(lam[alpha], lam[omega] + 1):
                a = self._pick(j, d, 0, assignment)
                b = self._pick(j, d, 1, assignment)
                walk.append(a)
                if b != a:
                    walk.append(b)
        return tuple(walk)

    @property
    def layer_of(self) -> dict[int, int]:
        return {v: d for d, layer in enumerate(self.layers) for v in layer}


def build_formula_S(instance: PafpInstance, profile: LayerProfile, plan: SegmentPlan) -> SegmentEncoding:
    """Encode safe paths that use exactly the backward arcs of ``plan``.

    An infeasible plan yields a formula that is already contradictory.
    """
    if profile.bfsw > 2:
        raise PreconditionError(f"BFS-width {profile.bfsw} exceeds 2")
    layers = tuple(tuple(sorted(layer)) for layer in profile.layers)
    formula = TwoSatFormula()
    enc = SegmentEncoding(plan, formula, layers)
    if not plan.feasible:
        formula.add_clause(False, False)
        return enc

    lam = profile.dist
    graph = instance.graph
    backward = profile.backward

    def forward_arc(u: int, v: int) -> bool:
        return graph.has_arc(u, v) and (u, v) not in backward

    occurrences: list[tuple[int, int]] = []
    for j, (alpha, omega) in enumerate(plan.segments):
        for d in range(lam[alpha], lam[omega] + 1):
            occurrences.append((j, d))
            if len(layers[d]) == 2:
                enc.occurrence_vars[(j, d)] = (formula.new_var(), formula.new_var())

    for j, d in occurrences:
        for u in layers[d]:
            for v in layers[d]:
                if u != v and not forward_arc(u, v):
                    formula.forbid(enc.ent(j, d, u), enc.exit(j, d, v))

    for j, (alpha, omega) in enumerate(plan.segments):
        formula.add_unit(enc.ent(j, lam[alpha], alpha))
        formula.add_unit(enc.exit(j, lam[omega], omega))
        for d in range(lam[alpha], lam[omega]):
            for u in layers[d]:
                for v in layers[d + 1]:
                    if not forward_arc(u, v):
                        formula.forbid(enc.exit(j, d, u), enc.ent(j, d + 1, v))

    occ_of: dict[int, list[tuple[int, int]]] = {}
    for j, d in occurrences:
        for v in layers[d]:
            occ_of.setdefault(v, []).append((j, d))
    for a, b in instance.pairs:
        for ja, da in occ_of.get(a, ()):
            uses_a = (enc.ent(ja, da, a), enc.exit(ja, da, a))
            for jb, db in occ_of.get(b, ()):
                for p in uses_a:
                    for q in (enc.ent(jb, db, b), enc.exit(jb, db, b)):
                        formula.forbid(p, q)
    return enc


class Bfsw2kSolver:
    """Enumerates backward-arc subsets by size, then lexicographically.

    Every subset gets a formula unless ``short_circuit`` is set, in which case
    enumeration stops at the first accepting subset. The reported witness is
    always the one of the first accepting subset in enumeration order.
    """

    def __init__(self, instance: PafpInstance, max_k: int = DEFAULT_MAX_K, threads: int = 1, short_circuit: bool = False):
        graph = instance.graph
        if not is_dag(graph):
            raise NotADagError("the backward-arc solver requires a DAG")
        self.instance = instance
        self.profile = layer_profile(graph, instance.source)
        if self.profile.bfsw > 2:
            raise PreconditionError(f"BFS-width is {self.profile.bfsw} > 2")
        self.k = len(self.profile.backward)
        if self.k > max_k:
            raise BudgetExceeded(f"{self.k} backward arcs exceed the cap of {max_k}")
        self.rank = reachability_order(graph).rank
        self.backward = sorted(self.profile.backward, key=lambda a: (self.rank[a[0]], self.rank[a[1]]))
        self.threads = threads
        self.short_circuit = short_circuit
        self.formulas_built = 0
        self.accepting_subset: tuple[Arc, ...] | None = None

    def subsets(self) -> Iterator[tuple[Arc, ...]]:
        for size in range(self.k + 1):
            for combo in combinations(self.backward, size):
                yield combo

    def _try(self, subset: tuple[Arc, ...]) -> tuple[int, ...] | None:
        plan = plan_segments(self.instance, self.profile, subset, self.rank)
        enc = build_formula_S(self.instance, self.profile, plan)
        model = solve(enc.formula)
        return None if model is None else enc.decode(model)

    def solve(self) -> tuple[int, ...] | None:
        if self.profile.dist[self.instance.target] is None:
            return None
        if self.threads > 1:
            with ThreadPoolExecutor(self.threads) as pool:
                results = zip(self.subsets(), pool.map(self._try, self.subsets()))
        else:
            results = ((s, self._try(s)) for s in self.subsets())
        found = None
        for subset, walk in results:
            self.formulas_built += 1
            if walk is not None and found is None:
                found = walk
                self.accepting_subset = subset
                if self.short_circuit:
                    break
        if found is not None:
            if len(set(found)) != len(found):
                raise AssertionError(f"decoded walk {found} repeats a vertex")
            if not check_path(self.instance, found).is_safe:
                raise AssertionError(f"decoded walk {found} is not a safe path")
        return found


def solve_bfsw2k(instance: PafpInstance, max_k: int = DEFAULT_MAX_K, threads: int = 1, short_circuit: bool = False) -> tuple[int, ...] | None:
    return Bfsw2kSolver(instance, max_k, threads, short_circuit).solve()
