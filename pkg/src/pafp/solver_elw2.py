"""Polynomial PAFP decision on DAGs whose exact-length layers hold at most two vertices.

For each candidate length, positions along the path become Boolean choices
between the (at most two) vertices of the matching exact-length layer, and
adjacency, endpoint and forbidden-pair constraints become 2-CNF clauses.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import NotADagError, PafpInstance, PreconditionError, check_path
from .layering import ExactLengthProfile, exact_length_profile, is_dag
from .twosat import Term, TwoSatFormula, neg, pos, solve


@dataclass
class LengthEncoding:
    """The formula for paths of one fixed length plus what is needed to decode a model."""

    length: int
    formula: TwoSatFormula
    # per position: the layer's vertices in index order, and the variable if there are two
    choices: list[tuple[int, ...]]
    variables: list[int | None]

    def selects(self, d: int, u: int) -> Term:
        """Literal (or constant) for "position d holds vertex u"."""
        layer = self.choices[d]
        if len(layer) == 1:
            return True
        var = self.variables[d]
        return neg(var) if u == layer[0] else pos(var)

    def decode(self, assignment: list[bool]) -> tuple[int, ...]:
        out = []
        for layer, var in zip(self.choices, self.variables):
            out.append(layer[0] if var is None else layer[int(assignment[var])])
        return tuple(out)


def build_formula_ell(instance: PafpInstance, profile: ExactLengthProfile, length: int) -> LengthEncoding:
    if profile.elw > 2:
        raise PreconditionError(f"exact-length width {profile.elw} exceeds 2")
    if not 0 <= length < len(profile.layers) or instance.target not in profile.layers[length]:
        raise PreconditionError(f"target is not reachable by a walk of length {length}")
    graph = instance.graph
    formula = TwoSatFormula()
    choices = [tuple(sorted(profile.layers[d])) for d in range(length + 1)]
    variables = [formula.new_var() if len(layer) == 2 else None for layer in choices]
    enc = LengthEncoding(length, formula, choices, variables)

    formula.add_unit(enc.selects(length, instance.target))
    for d in range(length):
        for u in choices[d]:
            for v in choices[d + 1]:
                if not graph.has_arc(u, v):
                    formula.forbid(enc.selects(d, u), enc.selects(d + 1, v))

    positions: dict[int, list[int]] = {}
    for d, layer in enumerate(choices):
        for v in layer:
            positions.setdefault(v, []).append(d)
    for a, b in instance.pairs:
        for i in positions.get(a, ()):
            for j in positions.get(b, ()):
                if i != j:
                    formula.forbid(enc.selects(i, a), enc.selects(j, b))
    return enc


class Elw2Solver:
    """Tries lengths in increasing order, so the witness is a shortest safe path.

    After ``solve`` the attributes ``formulas_built`` and ``clauses_built``
    (counted before constant folding) describe the work done.
    """

    def __init__(self, instance: PafpInstance, threads: int = 1):
        if not is_dag(instance.graph):
            raise NotADagError("the exact-length solver requires a DAG")
        self.instance = instance
        self.profile = exact_length_profile(instance.graph, instance.source)
        if self.profile.elw > 2:
            raise PreconditionError(f"exact-length width is {self.profile.elw} > 2")
        self.threads = threads
        self.formulas_built = 0
        self.clauses_built = 0

    def candidate_lengths(self) -> list[int]:
        return self.profile.lengths_of(self.instance.target)

    def _try(self, length: int) -> tuple[int, tuple[int, ...] | None]:
        enc = build_formula_ell(self.instance, self.profile, length)
        model = solve(enc.formula)
        return enc.formula.raw_clause_count, None if model is None else enc.decode(model)

    def solve(self) -> tuple[int, ...] | None:
        lengths = self.candidate_lengths()
        if self.threads > 1:
            # every length is evaluated; the shortest witness is still the one reported
            with ThreadPoolExecutor(self.threads) as pool:
                results = pool.map(self._try, lengths)
        else:
            results = map(self._try, lengths)
        found = None
        for clauses, path in results:
            self.formulas_built += 1
            self.clauses_built += clauses
            if path is not None:
                found = path
                break
        if found is not None and not check_path(self.instance, found).is_safe:
            raise AssertionError(f"decoded path {found} is not safe")
        return found


def solve_elw2(instance: PafpInstance, threads: int = 1) -> tuple[int, ...] | None:
    return Elw2Solver(instance, threads).solve()
