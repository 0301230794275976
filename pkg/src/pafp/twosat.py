"""2-SAT via the implication graph and Tarjan's strongly connected components.

Literals are integers: ``2*v`` is variable ``v`` and ``2*v + 1`` its negation,
so ``lit ^ 1`` negates. Unit clauses are stored as ``(lit, lit)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

Literal = int
# a literal, or a Boolean constant that the builder folds away
Term = Union[int, bool]


def pos(var: int) -> Literal:
    return 2 * var


def neg(var: int) -> Literal:
    return 2 * var + 1


def negate(term: Term) -> Term:
    if isinstance(term, bool):
        return not term
    return term ^ 1


def lit_value(lit: Literal, assignment: list[bool]) -> bool:
    return assignment[lit >> 1] != bool(lit & 1)


@dataclass
class TwoSatFormula:
    var_count: int = 0
    clauses: list[tuple[Literal, Literal]] = field(default_factory=list)
    # set when constant folding produced an empty clause
    contradiction: bool = False
    # clauses offered to the builder, counted before constant folding
    raw_clause_count: int = 0

    def new_var(self) -> int:
        self.var_count += 1
        return self.var_count - 1

    def add_clause(self, a: Term, b: Term) -> None:
        """Add ``a or b``; constants are folded, a clause of two falses marks a contradiction."""
        self.raw_clause_count += 1
        if a is True or b is True:
            return
        if a is False and b is False:
            self.contradiction = True
            return
        if a is False:
            a = b
        elif b is False:
            b = a
        for lit in (a, b):
            if not 0 <= lit < 2 * self.var_count:
                raise ValueError(f"literal {lit} refers to an unknown variable")
        self.clauses.append((a, b))

    def add_unit(self, a: Term) -> None:
        self.add_clause(a, a)

    def forbid(self, a: Term, b: Term) -> None:
        """Forbid ``a`` and ``b`` from holding together."""
        self.add_clause(negate(a), negate(b))

    def satisfied_by(self, assignment: list[bool]) -> bool:
        if self.contradiction:
            return False
        return all(lit_value(a, assignment) or lit_value(b, assignment) for a, b in self.clauses)


def _tarjan(node_count: int, succ: list[list[int]]) -> list[int]:
    """Component index per node; components are numbered in reverse topological order."""
    index = [-1] * node_count
    low = [0] * node_count
    comp = [-1] * node_count
    on_stack = [False] * node_count
    stack: list[int] = []
    counter = 0
    comp_count = 0
    for root in range(node_count):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp


def solve(formula: TwoSatFormula) -> list[bool] | None:
    """Return a satisfying assignment, or None if the formula is unsatisfiable."""
    if formula.contradiction:
        return None
    nodes = 2 * formula.var_count
    succ: list[list[int]] = [[] for _ in range(nodes)]
    for a, b in formula.clauses:
        succ[a ^ 1].append(b)
        succ[b ^ 1].append(a)
    comp = _tarjan(nodes, succ)
    assignment = []
    for var in range(formula.var_count):
        cp, cn = comp[2 * var], comp[2 * var + 1]
        if cp == cn:
            return None
        # sinks are numbered first; pick the literal whose component comes later topologically
        assignment.append(cp < cn)
    if not formula.satisfied_by(assignment):
        raise AssertionError("2-SAT assignment fails post-hoc clause check")
    return assignment
