"""PAFP instances, candidate paths, safety checking and the instance file format."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Arc = tuple[int, int]
Pair = tuple[int, int]


class InstanceError(ValueError):
    """Raised for malformed or invalid instance data."""


class PreconditionError(Exception):
    """Raised when an input falls outside an algorithm's promise class."""


class NotADagError(PreconditionError):
    pass


class BudgetExceeded(Exception):
    pass


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph on vertices ``1..n`` with set semantics for arcs."""

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InstanceError(f"negative vertex count {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise InstanceError(f"loop arc ({u},{v})")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InstanceError(f"arc ({u},{v}) has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "arcs", arcs)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbours per vertex in ascending order; index 0 is unused."""
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(x)) for x in inn)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def with_arcs(self, extra: Iterable[Arc]) -> Digraph:
        return Digraph(self.n, self.arcs | frozenset(extra))


@dataclass(frozen=True)
class PafpInstance:
    graph: Digraph
    source: int
    target: int
    pairs: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = self.graph.n
        for name, v in (("source", self.source), ("target", self.target)):
            if not 1 <= v <= n:
                raise InstanceError(f"{name} {v} outside 1..{n}")
        if self.source == self.target:
            raise InstanceError("source and target coincide")
        pairs = set()
        for u, v in self.pairs:
            u, v = int(u), int(v)
            if u == v:
                raise InstanceError(f"forbidden pair {{{u},{v}}} has equal endpoints")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InstanceError(f"forbidden pair {{{u},{v}}} outside 1..{n}")
            pairs.add(_pair(u, v))
        object.__setattr__(self, "pairs", frozenset(pairs))

    @classmethod
    def build(
        cls,
        n: int,
        arcs: Iterable[Arc],
        source: int,
        target: int,
        pairs: Iterable[Pair] = (),
    ) -> PafpInstance:
        return cls(Digraph(n, frozenset(arcs)), source, target, frozenset(pairs))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def partners(self) -> tuple[frozenset[int], ...]:
        """For each vertex, the vertices it forms a forbidden pair with."""
        out: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.pairs:
            out[u].add(v)
            out[v].add(u)
        return tuple(frozenset(x) for x in out)

    def with_pairs(self, extra: Iterable[Pair]) -> PafpInstance:
        return PafpInstance(self.graph, self.source, self.target, self.pairs | frozenset(_pair(*p) for p in extra))


class Verdict(enum.Enum):
    SAFE_PATH = "SAFE_PATH"
    NOT_A_PATH = "NOT_A_PATH"
    UNSAFE = "UNSAFE"


@dataclass(frozen=True)
class SafetyReport:
    is_path: bool
    starts_at_s: bool
    ends_at_t: bool
    violated_pairs: tuple[Pair, ...]

    @property
    def verdict(self) -> Verdict:
        if not (self.is_path and self.starts_at_s and self.ends_at_t):
            return Verdict.NOT_A_PATH
        if self.violated_pairs:
            return Verdict.UNSAFE
        return Verdict.SAFE_PATH

    @property
    def is_safe(self) -> bool:
        return self.verdict is Verdict.SAFE_PATH

    def to_dict(self) -> dict:
        return {
            "is_path": self.is_path,
            "starts_at_s": self.starts_at_s,
            "ends_at_t": self.ends_at_t,
            "violated_pairs": [list(p) for p in self.violated_pairs],
            "verdict": self.verdict.value,
        }

    def __str__(self) -> str:
        if self.verdict is Verdict.UNSAFE:
            return "UNSAFE " + " ".join(f"{{{u},{v}}}" for u, v in self.violated_pairs)
        return self.verdict.value


def check_path(instance: PafpInstance, candidate: Sequence[int]) -> SafetyReport:
    """Check whether ``candidate`` is a safe source-target path of ``instance``."""
    seq = [int(v) for v in candidate]
    n = instance.n
    in_range = all(1 <= v <= n for v in seq)
    is_path = (
        bool(seq)
        and in_range
        and len(set(seq)) == len(seq)
        and all(instance.graph.has_arc(u, v) for u, v in zip(seq, seq[1:]))
    )
    on_seq = set(seq)
    violated = tuple(sorted(p for p in instance.pairs if p[0] in on_seq and p[1] in on_seq))
    return SafetyReport(
        is_path=is_path,
        starts_at_s=bool(seq) and seq[0] == instance.source,
        ends_at_t=bool(seq) and seq[-1] == instance.target,
        violated_pairs=violated,
    )


# --- file format ---------------------------------------------------------


@dataclass
class RawInstance:
    """Fields of an instance file before validation, each tagged with its line number."""

    n: int
    m: int
    f: int
    header_line: int
    source: tuple[int, int] | None = None
    target: tuple[int, int] | None = None
    arcs: list[tuple[int, int, int]] = field(default_factory=list)
    pairs: list[tuple[int, int, int]] = field(default_factory=list)


def validate_instance(raw: RawInstance) -> PafpInstance:
    """Check every raw field against the instance invariants and build the instance.

    Duplicate arcs and pairs are dropped silently.
    """
    n = raw.n

    def check_vertex(v: int, line: int) -> None:
        if not 1 <= v <= n:
            raise InstanceError(f"line {line}: vertex {v} outside 1..{n}")

    if raw.source is None:
        raise InstanceError(f"line {raw.header_line}: missing 's' line")
    if raw.target is None:
        raise InstanceError(f"line {raw.header_line}: missing 't' line")
    s, s_line = raw.source
    t, t_line = raw.target
    check_vertex(s, s_line)
    check_vertex(t, t_line)
    if s == t:
        raise InstanceError(f"line {t_line}: target equals source {s}")
    for u, v, line in raw.arcs:
        check_vertex(u, line)
        check_vertex(v, line)
        if u == v:
            raise InstanceError(f"line {line}: loop arc {u} {v}")
    for u, v, line in raw.pairs:
        check_vertex(u, line)
        check_vertex(v, line)
        if u == v:
            raise InstanceError(f"line {line}: forbidden pair with equal endpoints {u} {v}")
    return PafpInstance.build(
        n,
        ((u, v) for u, v, _ in raw.arcs),
        s,
        t,
        ((u, v) for u, v, _ in raw.pairs),
    )


def _ints(tokens: list[str], count: int, line: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise InstanceError(f"line {line}: '{what}' expects {count} integer(s), got {len(tokens)}")
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise InstanceError(f"line {line}: non-integer token in '{what}' line") from None


def read_raw(text: str) -> RawInstance:
    raw: RawInstance | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#") or tokens[0] == "c":
            continue
        kind, rest = tokens[0], tokens[1:]
        if kind == "p":
            if raw is not None:
                raise InstanceError(f"line {lineno}: duplicate header")
            if len(rest) != 4 or rest[0] != "pafp":
                raise InstanceError(f"line {lineno}: malformed header, expected 'p pafp <n> <m> <f>'")
            n, m, f = _ints(rest[1:], 3, lineno, "p")
            if min(n, m, f) < 0:
                raise InstanceError(f"line {lineno}: negative count in header")
            raw = RawInstance(n, m, f, lineno)
            continue
        if raw is None:
            raise InstanceError(f"line {lineno}: '{kind}' line before header")
        if kind == "s":
            if raw.source is not None:
                raise InstanceError(f"line {lineno}: second 's' line")
            raw.source = (_ints(rest, 1, lineno, "s")[0], lineno)
        elif kind == "t":
            if raw.target is not None:
                raise InstanceError(f"line {lineno}: second 't' line")
            raw.target = (_ints(rest, 1, lineno, "t")[0], lineno)
        elif kind == "a":
            u, v = _ints(rest, 2, lineno, "a")
            raw.arcs.append((u, v, lineno))
        elif kind == "f":
            u, v = _ints(rest, 2, lineno, "f")
            raw.pairs.append((u, v, lineno))
        else:
            raise InstanceError(f"line {lineno}: unknown line type '{kind}'")
    if raw is None:
        raise InstanceError("missing header 'p pafp <n> <m> <f>'")
    if len(raw.arcs) != raw.m:
        raise InstanceError(f"line {raw.header_line}: header declares {raw.m} arcs, found {len(raw.arcs)}")
    if len(raw.pairs) != raw.f:
        raise InstanceError(f"line {raw.header_line}: header declares {raw.f} pairs, found {len(raw.pairs)}")
    return raw


def parse_instance(text: str) -> PafpInstance:
    return validate_instance(read_raw(text))


def serialize_instance(instance: PafpInstance) -> str:
    """Canonical text form: comment line, header, s, t, sorted arcs, sorted pairs."""
    arcs = sorted(instance.graph.arcs)
    pairs = sorted(instance.pairs)
    lines = [
        "c pafp instance",
        f"p pafp {instance.n} {len(arcs)} {len(pairs)}",
        f"s {instance.source}",
        f"t {instance.target}",
    ]
    lines += [f"a {u} {v}" for u, v in arcs]
    lines += [f"f {u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def read_instance(path) -> PafpInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(instance: PafpInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(instance))
