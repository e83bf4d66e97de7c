"""Simple directed cycles: enumeration, sign classes, 2-cycles, decomposition.

A cycle is a sequence of arcs that visits no node twice; it is stored in
canonical rotation (starting at its smallest arc id) so equal cycles compare
equal. Self-loops are cycles of length 1; parallel arcs yield distinct
cycles over the same node sequence.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, DichotomyViolation, NotACirculation
from .graph import ArcVector, WeightedDigraph


class SignClass(Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"


class TwoCycleShape(Enum):
    EDGE_DISJOINT = "edge-disjoint"
    THREE_PATH = "three-path"


@dataclass(frozen=True)
class Cycle:
    """Simple cycle in canonical rotation, with its total weight."""

    arc_ids: tuple[int, ...]
    weight: Fraction

    @property
    def length(self) -> int:
        return len(self.arc_ids)


@dataclass(frozen=True)
class TwoCycle:
    """A negative/positive cycle pair whose union contains no other cycle."""

    negative: Cycle
    positive: Cycle
    shape: TwoCycleShape
    mu: Fraction
    mu_prime: Fraction


@dataclass(frozen=True)
class CycleDecomposition:
    """Positive combination of cycles summing to a circulation."""

    terms: tuple[tuple[Cycle, Fraction], ...]


def _canonical(arc_seq: Sequence[int]) -> tuple[int, ...]:
    k = arc_seq.index(min(arc_seq))
    return tuple(arc_seq[k:]) + tuple(arc_seq[:k])


def make_cycle(g: WeightedDigraph, arc_seq: Sequence[int]) -> Cycle:
    """Build a Cycle from arcs in traversal order (rotation normalized)."""
    weight = sum((g.arcs[i].weight for i in arc_seq), Fraction(0))
    return Cycle(_canonical(arc_seq), weight)


def cycle_nodes(g: WeightedDigraph, cycle: Cycle) -> tuple[int, ...]:
    """Nodes visited by a cycle, sorted."""
    return tuple(sorted(g.arcs[i].tail for i in cycle.arc_ids))


def _unblock(node: int, blocked: set[int], blocked_by: dict[int, set[int]]) -> None:
    pending = {node}
    while pending:
        v = pending.pop()
        if v in blocked:
            blocked.remove(v)
            pending |= blocked_by[v]
            blocked_by[v].clear()


def _node_cycles_from(
    start: int, succ: dict[int, tuple[int, ...]]
) -> Iterator[list[int]]:
    """All simple node cycles through ``start`` within one SCC (Johnson)."""
    path = [start]
    blocked = {start}
    closed: set[int] = set()
    blocked_by: dict[int, set[int]] = defaultdict(set)
    stack: list[tuple[int, list[int]]] = [(start, list(reversed(succ[start])))]
    while stack:
        node, nbrs = stack[-1]
        if nbrs:
            nxt = nbrs.pop()
            if nxt == start:
                yield path[:]
                closed.update(path)
            elif nxt not in blocked:
                path.append(nxt)
                closed.discard(nxt)
                blocked.add(nxt)
                stack.append((nxt, list(reversed(succ[nxt]))))
                continue
        if not nbrs:
            if node in closed:
                _unblock(node, blocked, blocked_by)
            else:
                for nbr in succ[node]:
                    blocked_by[nbr].add(node)
            stack.pop()
            path.pop()


def _iter_arc_cycles(
    g: WeightedDigraph, arc_ids: Iterable[int] | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle as an arc-id tuple in traversal order.

    Restricted to ``arc_ids`` when given. Each cycle is produced exactly
    once; no ordering guarantee (callers sort canonical forms).
    """
    allowed = range(g.arc_count) if arc_ids is None else sorted(set(arc_ids))
    arcmap: dict[int, dict[int, list[int]]] = {}
    loops: list[int] = []
    for i in allowed:
        arc = g.arcs[i]
        if arc.tail == arc.head:
            loops.append(i)
        else:
            arcmap.setdefault(arc.tail, {}).setdefault(arc.head, []).append(i)
    for i in loops:
        yield (i,)
    nodes = sorted(arcmap.keys())
    for start in nodes:
        # Cycles whose minimal node is `start` live in the SCC of `start`
        # within the subgraph induced on nodes >= start.
        fwd = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in arcmap.get(v, {}):
                if w >= start and w not in fwd:
                    fwd.add(w)
                    frontier.append(w)
        pred: dict[int, list[int]] = defaultdict(list)
        for u, heads in arcmap.items():
            if u >= start:
                for w in heads:
                    pred[w].append(u)
        bwd = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in pred[v]:
                if u not in bwd:
                    bwd.add(u)
                    frontier.append(u)
        scc = fwd & bwd
        succ = {
            v: tuple(w for w in sorted(arcmap.get(v, {})) if w in scc)
            for v in sorted(scc)
        }
        if not succ.get(start):
            continue
        for node_path in _node_cycles_from(start, succ):
            hops = [
                arcmap[node_path[k]][node_path[(k + 1) % len(node_path)]]
                for k in range(len(node_path))
            ]
            for combo in product(*hops):
                yield combo


def enumerate_cycles(
    g: WeightedDigraph, cap: int, arc_ids: Iterable[int] | None = None
) -> tuple[Cycle, ...]:
    """All simple cycles, canonical and sorted lexicographically by arc ids.

    Raises CapExceeded as soon as more than ``cap`` cycles are found.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    found: list[Cycle] = []
    for seq in _iter_arc_cycles(g, arc_ids):
        found.append(make_cycle(g, seq))
        if len(found) > cap:
            raise CapExceeded("cycles", cap, f"graph has more than {cap} cycles")
    found.sort(key=lambda c: c.arc_ids)
    return tuple(found)


def classify(cycle: Cycle) -> SignClass:
    if cycle.weight < 0:
        return SignClass.NEGATIVE
    if cycle.weight > 0:
        return SignClass.POSITIVE
    return SignClass.ZERO


def _shared_arcs_shape(g: WeightedDigraph, shared: set[int]) -> TwoCycleShape:
    if not shared:
        return TwoCycleShape.EDGE_DISJOINT
    # Shared arcs must form one directed path.
    out_of: dict[int, int] = {}
    into: dict[int, int] = {}
    for i in shared:
        arc = g.arcs[i]
        if arc.tail in out_of or arc.head in into:
            raise DichotomyViolation(f"shared arcs {sorted(shared)} branch")
        out_of[arc.tail] = i
        into[arc.head] = i
    starts = [t for t in out_of if t not in into]
    if len(starts) != 1:
        raise DichotomyViolation(f"shared arcs {sorted(shared)} are not one path")
    node = starts[0]
    seen = 0
    while node in out_of:
        arc = g.arcs[out_of[node]]
        node = arc.head
        seen += 1
    if seen != len(shared):
        raise DichotomyViolation(f"shared arcs {sorted(shared)} are disconnected")
    return TwoCycleShape.THREE_PATH


def is_two_cycle(g: WeightedDigraph, c1: Cycle, c2: Cycle) -> TwoCycle | None:
    """Decide the 2-cycle property by enumerating the union's cycles.

    Requires w(c1) < 0 < w(c2); returns None when the pair is not a
    2-cycle (wrong signs, equal cycles, or a third cycle in the union).
    """
    if not (c1.weight < 0 < c2.weight) or c1 == c2:
        return None
    union = set(c1.arc_ids) | set(c2.arc_ids)
    count = 0
    for _ in _iter_arc_cycles(g, union):
        count += 1
        if count > 2:
            return None
    # The union always contains c1 and c2, so count == 2 means exactly them.
    shape = _shared_arcs_shape(g, set(c1.arc_ids) & set(c2.arc_ids))
    denom = c2.weight * c1.length - c1.weight * c2.length
    if denom <= 0:
        raise ValueError(f"nonpositive 2-cycle denominator {denom}")
    return TwoCycle(c1, c2, shape, c2.weight / denom, -c1.weight / denom)


def enumerate_two_cycles(g: WeightedDigraph, cap: int) -> tuple[TwoCycle, ...]:
    """All 2-cycles, ordered by (negative, positive) canonical arc ids.

    The cap bounds both the underlying cycle enumeration and the number
    of sign-mixed pairs tested.
    """
    cycles = enumerate_cycles(g, cap)
    negatives = [c for c in cycles if c.weight < 0]
    positives = [c for c in cycles if c.weight > 0]
    if len(negatives) * len(positives) > cap:
        raise CapExceeded(
            "two-cycle pairs", cap, f"{len(negatives) * len(positives)} pairs"
        )
    out = []
    for c1 in negatives:
        for c2 in positives:
            tc = is_two_cycle(g, c1, c2)
            if tc is not None:
                out.append(tc)
    return tuple(out)


def _find_cycle_through(
    g: WeightedDigraph, arc_id: int, values: list[Fraction]
) -> list[int]:
    """A simple cycle through ``arc_id`` using only positive-value arcs."""
    first = g.arcs[arc_id]
    if first.tail == first.head:
        return [arc_id]
    target = first.tail
    visited = {first.head}
    # DFS frames: [node, next out-arc position]; arcs tried in id order.
    frames: list[list[int]] = [[first.head, 0]]
    trail: list[int] = []
    while frames:
        frame = frames[-1]
        succ = g.out_arcs[frame[0]]
        moved = False
        while frame[1] < len(succ):
            arc = succ[frame[1]]
            frame[1] += 1
            if values[arc.arc_id] <= 0:
                continue
            if arc.head == target:
                return [arc_id] + trail + [arc.arc_id]
            if arc.head not in visited:
                visited.add(arc.head)
                trail.append(arc.arc_id)
                frames.append([arc.head, 0])
                moved = True
                break
        if not moved:
            frames.pop()
            if trail:
                trail.pop()
    raise NotACirculation(f"no cycle through arc {arc_id} in support")


def decompose_circulation(g: WeightedDigraph, y: ArcVector) -> CycleDecomposition:
    """Greedy peeling of a nonnegative circulation into weighted cycles.

    Each round takes the cycle (found deterministically, smallest arc ids
    first) through the smallest-id support arc and subtracts the minimum
    value along it; at least one arc leaves the support per round, so the
    result has at most |support| terms.
    """
    if len(y.entries) != g.arc_count:
        raise ValueError("vector dimension does not match arc count")
    for i, v in enumerate(y.entries):
        if v < 0:
            raise NotACirculation(f"negative value {v} on arc {i}")
    for node in range(g.node_count):
        balance = sum((y.entries[a.arc_id] for a in g.out_arcs[node]), Fraction(0))
        balance -= sum((y.entries[a.arc_id] for a in g.in_arcs[node]), Fraction(0))
        if balance != 0:
            raise NotACirculation(
                f"flow conservation violated at node {node}", node=node
            )
    values = list(y.entries)
    terms: list[tuple[Cycle, Fraction]] = []
    while True:
        support = [i for i, v in enumerate(values) if v > 0]
        if not support:
            break
        seq = _find_cycle_through(g, support[0], values)
        coeff = min(values[i] for i in seq)
        for i in seq:
            values[i] -= coeff
        terms.append((make_cycle(g, seq), coeff))
    return CycleDecomposition(tuple(terms))


def format_cycle(cycle: Cycle) -> str:
    ids = " ".join(str(i) for i in cycle.arc_ids)
    return f"C {cycle.weight} : {ids}"
