"""CNF satisfiability encoded as extra vertices of a circulation polyhedron.

Each literal occurrence contributes two weight-(-1/2) arcs that form a
digon between its shared nodes a and b, giving one trivial 0/1 vertex per
occurrence; a simple cycle through every connector node exists exactly when
hiding assignments line up, so deciding whether the trivial family is the
whole vertex set decides satisfiability.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characterize import vertices_from_negative_cycles
from .cycles import Cycle, cycle_nodes, enumerate_cycles
from .errors import NegflowError, ParseError
from .graph import Arc, ArcVector, WeightedDigraph, characteristic_vector

MAX_SAT_VARIABLES = 24

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CnfFormula:
    """Clauses as tuples of nonzero literals; variables are 1..variable_count."""

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise ValueError("variable count must be nonnegative")
        for idx, clause in enumerate(self.clauses):
            if not clause:
                raise ValueError(f"clause {idx} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValueError(f"clause {idx}: literal {lit} out of range")

    @property
    def occurrence_count(self) -> int:
        return sum(len(c) for c in self.clauses)

    @property
    def has_unit_clause(self) -> bool:
        """Direction-count bounds hold only for clauses of two or more
        literals; callers checking them should skip flagged formulas."""
        return any(len(c) == 1 for c in self.clauses)


@dataclass(frozen=True)
class Occurrence:
    """One literal occurrence with its nodes and six arc ids.

    Arc ids follow construction order: (p->a, a->b, b->q) in the variable
    section and (r->b, b->a, a->s) in the clause section. The digon for
    this occurrence is (a->b, b->a).
    """

    literal: int
    clause_index: int
    position: int
    a_node: int
    b_node: int
    p_a: int
    a_b: int
    b_q: int
    r_b: int
    b_a: int
    a_s: int


@dataclass(frozen=True)
class ReductionArtifact:
    graph: WeightedDigraph
    formula: CnfFormula
    connectors: tuple[int, ...]
    occurrences: tuple[Occurrence, ...]
    degenerate_chain_arcs: tuple[int, ...]
    roles: tuple[tuple[str, ...], ...]

    @property
    def closing_arc(self) -> int:
        return self.graph.arc_count - 1


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF; raises ParseError naming the offending line."""
    variable_count: int | None = None
    declared_clauses = 0
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if variable_count is not None:
                raise ParseError(lineno, "duplicate p header")
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError(lineno, "expected 'p cnf <vars> <clauses>'")
            try:
                variable_count = int(fields[2])
                declared_clauses = int(fields[3])
            except ValueError:
                raise ParseError(lineno, "header counts must be integers") from None
            if variable_count < 0 or declared_clauses < 0:
                raise ParseError(lineno, "header counts must be nonnegative")
            continue
        if variable_count is None:
            raise ParseError(lineno, "clause data before p header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(lineno, f"bad literal {token!r}") from None
            if lit == 0:
                if not current:
                    raise ParseError(lineno, "empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > variable_count:
                    raise ParseError(
                        lineno, f"literal {lit} exceeds variable count {variable_count}"
                    )
                current.append(lit)
    if variable_count is None:
        raise ParseError(last_line, "missing p header")
    if current:
        raise ParseError(last_line, "last clause missing terminating 0")
    if len(clauses) != declared_clauses:
        raise ParseError(
            last_line,
            f"header declares {declared_clauses} clauses, file has {len(clauses)}",
        )
    return CnfFormula(variable_count, tuple(clauses))


def _literal_text(lit: int) -> str:
    sign = "+" if lit > 0 else "-"
    return f"{sign}x{abs(lit)}"


def build_reduction(f: CnfFormula) -> ReductionArtifact:
    """Construct the reduction graph with stable node and arc order.

    Nodes: connectors first (v0..vn then v'1..v'm), then per-chain a/b and
    junction nodes in variable/polarity/clause order. Arcs: variable
    chains (positive then negated per variable; a chain with no
    occurrences is one zero-weight arc), then clause paths in clause
    order, then the closing arc of weight -1.
    """
    n = f.variable_count
    m = len(f.clauses)
    roles: list[list[str]] = []

    def new_node(*node_roles: str) -> int:
        roles.append(list(node_roles))
        return len(roles) - 1

    v_nodes = [new_node(f"v{i}") for i in range(n + 1)]
    vp_nodes = [new_node(f"v'{j + 1}") for j in range(m)]
    connectors = tuple(v_nodes + vp_nodes)

    arcs: list[Arc] = []

    def new_arc(tail: int, head: int, weight: Fraction) -> int:
        arcs.append(Arc(len(arcs), tail, head, weight))
        return len(arcs) - 1

    occ_nodes: dict[tuple[int, int], tuple[int, int]] = {}
    occ_var_arcs: dict[tuple[int, int], tuple[int, int, int]] = {}
    degenerate: list[int] = []
    for var in range(1, n + 1):
        for polarity in (1, -1):
            lit = polarity * var
            chain = [
                (j, pos)
                for j, clause in enumerate(f.clauses)
                for pos, l in enumerate(clause)
                if l == lit
            ]
            left = v_nodes[var - 1]
            right = v_nodes[var]
            if not chain:
                degenerate.append(new_arc(left, right, Fraction(0)))
                continue
            cur = left
            for t, (j, pos) in enumerate(chain):
                tag = f"{_literal_text(lit)}@c{j + 1}"
                a = new_node(f"a:{tag}")
                b = new_node(f"b:{tag}")
                roles[cur].append(f"p:{tag}")
                nxt = right if t == len(chain) - 1 else new_node()
                roles[nxt].append(f"q:{tag}")
                p_a = new_arc(cur, a, HALF)
                a_b = new_arc(a, b, -HALF)
                b_q = new_arc(b, nxt, Fraction(0))
                occ_nodes[(j, pos)] = (a, b)
                occ_var_arcs[(j, pos)] = (p_a, a_b, b_q)
                cur = nxt

    occurrences: list[Occurrence] = []
    for j, clause in enumerate(f.clauses):
        left = v_nodes[n] if j == 0 else vp_nodes[j - 1]
        right = vp_nodes[j]
        for pos, lit in enumerate(clause):
            tag = f"{_literal_text(lit)}@c{j + 1}"
            a, b = occ_nodes[(j, pos)]
            roles[left].append(f"r:{tag}")
            roles[right].append(f"s:{tag}")
            r_b = new_arc(left, b, Fraction(0))
            b_a = new_arc(b, a, -HALF)
            a_s = new_arc(a, right, HALF)
            p_a, a_b, b_q = occ_var_arcs[(j, pos)]
            occurrences.append(
                Occurrence(lit, j, pos, a, b, p_a, a_b, b_q, r_b, b_a, a_s)
            )

    last = vp_nodes[m - 1] if m else v_nodes[n]
    new_arc(last, v_nodes[0], Fraction(-1))

    expected = 6 * f.occurrence_count + 1 + len(degenerate)
    if len(arcs) != expected:
        raise NegflowError(f"arc budget violated: {len(arcs)} != {expected}")
    graph = WeightedDigraph(
        len(roles),
        tuple(arcs),
        node_labels=tuple(",".join(r) for r in roles),
    )
    return ReductionArtifact(
        graph=graph,
        formula=f,
        connectors=connectors,
        occurrences=tuple(occurrences),
        degenerate_chain_arcs=tuple(degenerate),
        roles=tuple(tuple(r) for r in roles),
    )


def trivial_vertex_family(art: ReductionArtifact) -> tuple[ArcVector, ...]:
    """One 0/1 vertex per occurrence: its digon's two arcs set to 1."""
    return tuple(
        characteristic_vector(art.graph, (occ.a_b, occ.b_a))
        for occ in art.occurrences
    )


def has_long_cycle(art: ReductionArtifact, cap: int) -> Cycle | None:
    """Smallest weight -1 simple cycle through every connector node.

    The weight filter is part of the definition: cycles that dip between
    the variable and clause sections mid-chain can visit every connector
    while accumulating nonnegative weight, so node coverage alone does
    not imply weight -1.
    """
    required = set(art.connectors)
    for cycle in enumerate_cycles(art.graph, cap):
        if cycle.weight == -1 and required <= set(cycle_nodes(art.graph, cycle)):
            return cycle
    return None


def brute_force_sat(f: CnfFormula) -> tuple[bool, dict[int, bool] | None]:
    """Exhaustive satisfiability check; first witness in lexicographic order."""
    if f.variable_count > MAX_SAT_VARIABLES:
        raise ValueError(
            f"brute force limited to {MAX_SAT_VARIABLES} variables"
        )
    for mask in range(2 ** f.variable_count):
        assignment = {
            var: bool(mask >> (var - 1) & 1) for var in range(1, f.variable_count + 1)
        }
        if all(
            any(assignment[abs(l)] == (l > 0) for l in clause) for clause in f.clauses
        ):
            return True, assignment
    return False, None


@dataclass(frozen=True)
class Ve01Report:
    """Both sides of the correspondence, reported without presuming it."""

    artifact: ReductionArtifact
    trivial_family: tuple[ArcVector, ...]
    vertices: tuple[ArcVector, ...]
    trivial_is_subset: bool
    trivial_equals_vertices: bool
    extra_vertices: tuple[ArcVector, ...]
    extra_are_long_cycles: bool
    satisfiable: bool
    witness: dict[int, bool] | None

    def to_text(self) -> str:
        g = self.artifact.graph
        witness = (
            " ".join(
                f"x{var}={int(val)}" for var, val in sorted(self.witness.items())
            )
            if self.witness
            else "-"
        )
        lines = [
            f"nodes: {g.node_count}",
            f"arcs: {g.arc_count}",
            f"occurrences: {self.artifact.formula.occurrence_count}",
            f"degenerate_chains: {len(self.artifact.degenerate_chain_arcs)}",
            f"trivial_family_size: {len(self.trivial_family)}",
            f"vertex_count: {len(self.vertices)}",
            f"trivial_is_subset: {_bool(self.trivial_is_subset)}",
            f"trivial_equals_vertices: {_bool(self.trivial_equals_vertices)}",
            f"extra_vertices: {len(self.extra_vertices)}",
            f"extra_are_long_cycles: {_bool(self.extra_are_long_cycles)}",
            f"satisfiable: {_bool(self.satisfiable)}",
            f"witness: {witness}",
        ]
        return "\n".join(lines) + "\n"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def decide_ve01(f: CnfFormula, cap: int) -> Ve01Report:
    """Compare the trivial vertex family with the full vertex set.

    Reports the set relation and the brute-force SAT result side by side;
    the correspondence between them is a checked property of the
    construction, not an input to it.
    """
    art = build_reduction(f)
    g = art.graph
    trivial = trivial_vertex_family(art)
    trivial_set = set(trivial)
    negative = [c for c in enumerate_cycles(g, cap) if c.weight < 0]
    by_vertex: dict[ArcVector, Cycle] = {}
    for cycle in negative:
        scale = Fraction(-1) / cycle.weight
        by_vertex[characteristic_vector(g, cycle.arc_ids).scale(scale)] = cycle
    vertices = tuple(sorted(by_vertex, key=lambda p: p.entries))
    extra = tuple(p for p in vertices if p not in trivial_set)
    required = set(art.connectors)
    extra_long = all(
        by_vertex[p].weight == -1
        and required <= set(cycle_nodes(g, by_vertex[p]))
        for p in extra
    )
    satisfiable, witness = brute_force_sat(f)
    return Ve01Report(
        artifact=art,
        trivial_family=trivial,
        vertices=vertices,
        trivial_is_subset=trivial_set <= set(vertices),
        trivial_equals_vertices=trivial_set == set(vertices),
        extra_vertices=extra,
        extra_are_long_cycles=extra_long,
        satisfiable=satisfiable,
        witness=witness,
    )
