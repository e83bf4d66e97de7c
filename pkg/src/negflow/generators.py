"""Built-in instance families and a reproducible random graph generator."""
from __future__ import annotations

from fractions import Fraction

from .cycles import TwoCycleShape
from .graph import Arc, WeightedDigraph

# 64-bit linear congruential generator, Knuth's MMIX constants. The
# recurrence is part of the reproducibility contract: state' =
# (6364136223846793005 * state + 1442695040888963407) mod 2^64, drawing
# the top 31 bits. Seeds are warmed up by one step.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int) -> None:
        self.state = (seed * _LCG_MULT + _LCG_INC) & _LCG_MASK

    def next_below(self, bound: int) -> int:
        if bound < 1:
            raise ValueError("bound must be positive")
        self.state = (self.state * _LCG_MULT + _LCG_INC) & _LCG_MASK
        return (self.state >> 33) % bound


def gen_fig3(k: int) -> WeightedDigraph:
    """Ring of 2k weight-(-1) arcs with two weight-2k bypass paths per x->y arc.

    Nodes: x_i = 2(i-1), y_i = 2(i-1)+1, then z_i = 2k+2(i-1) and
    z'_i = 2k+2(i-1)+1. Arcs: the ring first (x1 y1 x2 y2 ... yk back to
    x1), then per position the two bypass paths, each split k + k.
    The family has exactly 3^k cycles: one negative, the rest positive.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    arcs: list[Arc] = []

    def x(i: int) -> int:
        return 2 * i

    def y(i: int) -> int:
        return 2 * i + 1

    for i in range(k):
        arcs.append(Arc(len(arcs), x(i), y(i), Fraction(-1)))
        arcs.append(Arc(len(arcs), y(i), x((i + 1) % k), Fraction(-1)))
    for i in range(k):
        z = 2 * k + 2 * i
        z_alt = z + 1
        for mid in (z, z_alt):
            arcs.append(Arc(len(arcs), x(i), mid, Fraction(k)))
            arcs.append(Arc(len(arcs), mid, y(i), Fraction(k)))
    return WeightedDigraph(4 * k, tuple(arcs))


def gen_fig1(shape: TwoCycleShape) -> WeightedDigraph:
    """Minimal canonical instance of a 2-cycle shape.

    Edge-disjoint: two node-disjoint triangles with total weights -1 and
    +1. Three-path: shared arc u->v (0), return arc v->u (-1), return
    path v->w->u (+1).
    """
    if shape is TwoCycleShape.EDGE_DISJOINT:
        weights = [Fraction(-1), 0, 0, Fraction(1), 0, 0]
        ends = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        node_count = 6
    elif shape is TwoCycleShape.THREE_PATH:
        weights = [Fraction(0), Fraction(-1), Fraction(1), Fraction(0)]
        ends = [(0, 1), (1, 0), (1, 2), (2, 0)]
        node_count = 3
    else:
        raise ValueError(f"unknown shape {shape!r}")
    arcs = tuple(
        Arc(i, t, h, Fraction(w)) for i, ((t, h), w) in enumerate(zip(ends, weights))
    )
    return WeightedDigraph(node_count, arcs)


def gen_random(
    nodes: int,
    arcs: int,
    weight_range: tuple[int, int],
    seed: int,
) -> WeightedDigraph:
    """Seed-reproducible simple digraph with integer weights.

    Arcs are distinct ordered pairs without self-loops, drawn by rejection
    from the documented LCG; the draw order fixes arc ids.
    """
    lo, hi = weight_range
    if nodes < 1:
        raise ValueError("need at least one node")
    if not (0 <= arcs <= nodes * (nodes - 1)):
        raise ValueError("arc count out of range for a simple digraph")
    if lo > hi:
        raise ValueError("empty weight range")
    rng = Lcg(seed)
    seen: set[tuple[int, int]] = set()
    out: list[Arc] = []
    while len(out) < arcs:
        tail = rng.next_below(nodes)
        head = rng.next_below(nodes)
        if tail == head or (tail, head) in seen:
            continue
        seen.add((tail, head))
        weight = Fraction(lo + rng.next_below(hi - lo + 1))
        out.append(Arc(len(out), tail, head, weight))
    return WeightedDigraph(nodes, tuple(out))
