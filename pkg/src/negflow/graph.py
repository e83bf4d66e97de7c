"""Weighted directed multigraphs with exact rational arc weights.

Graphs are immutable. Nodes are 0-based integers internally and 1-based in
files; arcs carry stable ids 0..m-1 assigned in file/construction order.
Self-loops and parallel arcs are legal.

Graph file format (one record per line):

    c <free text>              comment, ignored
    p <node_count> <arc_count> exactly one header, before all arcs
    a <tail> <head> <weight>   one arc; nodes 1-based, weight a rational

A rational literal is an optionally negated integer, or ``<int>/<posint>``.
Values are normalized to lowest terms with positive denominator and are
serialized the same way (integers without the ``/1``).

Arc vector files hold one entry per line, ``e <arc_id> <rational>``;
omitted arc ids default to 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError

# The exact rational scalar type used throughout the package. Fraction
# guarantees lowest terms and a positive denominator on construction.
Rational = Fraction

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal; raises ValueError on malformed input."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Arc:
    arc_id: int
    tail: int
    head: int
    weight: Fraction


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable weighted directed multigraph.

    ``node_labels`` / ``arc_labels`` are optional annotation text (used by
    ``subgraph`` to remember original ids and by the reduction to record
    node roles); they do not affect identity or serialization of arcs.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    node_labels: tuple[str, ...] | None = None
    arc_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise ValueError("node_count must be nonnegative")
        for pos, arc in enumerate(self.arcs):
            if arc.arc_id != pos:
                raise ValueError(f"arc at position {pos} has id {arc.arc_id}")
            if not (0 <= arc.tail < self.node_count):
                raise ValueError(f"arc {pos}: tail {arc.tail} out of range")
            if not (0 <= arc.head < self.node_count):
                raise ValueError(f"arc {pos}: head {arc.head} out of range")
        if self.node_labels is not None and len(self.node_labels) != self.node_count:
            raise ValueError("node_labels length mismatch")
        if self.arc_labels is not None and len(self.arc_labels) != len(self.arcs):
            raise ValueError("arc_labels length mismatch")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        """Arcs grouped by tail node, in arc-id order."""
        buckets: list[list[Arc]] = [[] for _ in range(self.node_count)]
        for arc in self.arcs:
            buckets[arc.tail].append(arc)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def in_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        """Arcs grouped by head node, in arc-id order."""
        buckets: list[list[Arc]] = [[] for _ in range(self.node_count)]
        for arc in self.arcs:
            buckets[arc.head].append(arc)
        return tuple(tuple(b) for b in buckets)


@dataclass(frozen=True)
class ArcVector:
    """Dense vector of rationals indexed by arc id."""

    entries: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, arc_id: int) -> Fraction:
        return self.entries[arc_id]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.entries) if v != 0)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def __add__(self, other: "ArcVector") -> "ArcVector":
        if len(other.entries) != len(self.entries):
            raise ValueError("dimension mismatch")
        return ArcVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor: Fraction) -> "ArcVector":
        f = Fraction(factor)
        return ArcVector(tuple(f * v for v in self.entries))

    @staticmethod
    def zero(dimension: int) -> "ArcVector":
        return ArcVector((Fraction(0),) * dimension)


def parse_graph(text: str) -> WeightedDigraph:
    """Parse the graph file format; raises ParseError naming the bad line."""
    node_count: int | None = None
    declared_arcs = 0
    arcs: list[Arc] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if node_count is not None:
                raise ParseError(lineno, "duplicate p header")
            if len(fields) != 3:
                raise ParseError(lineno, "p header needs node and arc counts")
            try:
                node_count = int(fields[1])
                declared_arcs = int(fields[2])
            except ValueError:
                raise ParseError(lineno, "p header counts must be integers") from None
            if node_count < 1:
                raise ParseError(lineno, "node count must be positive")
            if declared_arcs < 0:
                raise ParseError(lineno, "arc count must be nonnegative")
            header_line = lineno
        elif fields[0] == "a":
            if node_count is None:
                raise ParseError(lineno, "arc before p header")
            if len(fields) != 4:
                raise ParseError(lineno, "arc line needs tail, head, weight")
            try:
                tail = int(fields[1])
                head = int(fields[2])
            except ValueError:
                raise ParseError(lineno, "arc endpoints must be integers") from None
            if not (1 <= tail <= node_count):
                raise ParseError(lineno, f"tail {tail} out of range 1..{node_count}")
            if not (1 <= head <= node_count):
                raise ParseError(lineno, f"head {head} out of range 1..{node_count}")
            try:
                weight = parse_rational(fields[3])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            arcs.append(Arc(len(arcs), tail - 1, head - 1, weight))
        else:
            raise ParseError(lineno, f"unknown record {fields[0]!r}")
    if node_count is None:
        raise ParseError(max(1, len(text.splitlines())), "missing p header")
    if len(arcs) != declared_arcs:
        raise ParseError(
            header_line, f"header declares {declared_arcs} arcs, file has {len(arcs)}"
        )
    return WeightedDigraph(node_count, tuple(arcs))


def serialize_graph(g: WeightedDigraph, comments: Sequence[str] = ()) -> str:
    """Render a graph back to the file format (labels are not serialized)."""
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p {g.node_count} {g.arc_count}")
    for arc in g.arcs:
        lines.append(
            f"a {arc.tail + 1} {arc.head + 1} {format_rational(arc.weight)}"
        )
    return "\n".join(lines) + "\n"


def parse_arc_vector(text: str, arc_count: int) -> ArcVector:
    """Parse ``e <arc_id> <rational>`` lines into a dense vector."""
    entries = [Fraction(0)] * arc_count
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError(lineno, "expected 'e <arc_id> <rational>'")
        try:
            arc_id = int(fields[1])
        except ValueError:
            raise ParseError(lineno, "arc id must be an integer") from None
        if not (0 <= arc_id < arc_count):
            raise ParseError(lineno, f"arc id {arc_id} out of range 0..{arc_count - 1}")
        if arc_id in seen:
            raise ParseError(lineno, f"duplicate entry for arc {arc_id}")
        seen.add(arc_id)
        try:
            entries[arc_id] = parse_rational(fields[2])
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return ArcVector(tuple(entries))


def serialize_arc_vector(v: ArcVector) -> str:
    lines = [f"e {i} {format_rational(v.entries[i])}" for i in v.support()]
    return "\n".join(lines) + ("\n" if lines else "")


def _check_arc_ids(g: WeightedDigraph, arc_ids: Iterable[int]) -> list[int]:
    ids = list(arc_ids)
    for arc_id in ids:
        if not (0 <= arc_id < g.arc_count):
            raise ValueError(f"invalid arc id {arc_id}")
    return ids


def total_weight(g: WeightedDigraph, arc_ids: Iterable[int]) -> Fraction:
    """Sum of weights over a multiset of arc ids."""
    return sum((g.arcs[i].weight for i in _check_arc_ids(g, arc_ids)), Fraction(0))


def characteristic_vector(g: WeightedDigraph, arc_ids: Iterable[int]) -> ArcVector:
    """0/1 vector with ones exactly on the given arc set."""
    entries = [Fraction(0)] * g.arc_count
    for arc_id in _check_arc_ids(g, arc_ids):
        entries[arc_id] = Fraction(1)
    return ArcVector(tuple(entries))


def strongly_connected_components(g: WeightedDigraph) -> tuple[tuple[int, ...], ...]:
    """SCCs as sorted node tuples, ordered by smallest contained node.

    Iterative Tarjan; deterministic because nodes and out-arcs are visited
    in increasing order.
    """
    n = g.node_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, next_arc = frame
            if next_arc == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            succ = g.out_arcs[v]
            while frame[1] < len(succ):
                w = succ[frame[1]].head
                frame[1] += 1
                if index[w] == -1:
                    work.append([w, 0])
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
    components.sort(key=lambda c: c[0])
    return tuple(tuple(c) for c in components)


def subgraph(g: WeightedDigraph, arc_ids: Iterable[int]) -> WeightedDigraph:
    """Restriction to an arc set and its incident nodes.

    Nodes are relabeled compactly in increasing original order; labels
    record the original node indices and arc ids.
    """
    ids = sorted(set(_check_arc_ids(g, arc_ids)))
    nodes = sorted({g.arcs[i].tail for i in ids} | {g.arcs[i].head for i in ids})
    remap = {orig: new for new, orig in enumerate(nodes)}
    arcs = tuple(
        Arc(pos, remap[g.arcs[i].tail], remap[g.arcs[i].head], g.arcs[i].weight)
        for pos, i in enumerate(ids)
    )
    if g.node_labels is not None:
        node_labels = tuple(g.node_labels[orig] for orig in nodes)
    else:
        node_labels = tuple(str(orig) for orig in nodes)
    arc_labels = tuple(str(i) for i in ids)
    return WeightedDigraph(len(nodes), arcs, node_labels, arc_labels)
