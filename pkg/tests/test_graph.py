"""Graph core: parsing, serialization, vectors, components."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negflow.errors import ParseError
from negflow.graph import (
    Arc,
    ArcVector,
    WeightedDigraph,
    characteristic_vector,
    parse_arc_vector,
    parse_graph,
    parse_rational,
    serialize_arc_vector,
    serialize_graph,
    strongly_connected_components,
    subgraph,
    total_weight,
)

TRIANGLE = "p 3 3\na 1 2 -1\na 2 3 -1\na 3 1 -1\n"
DIGON = "p 2 2\na 1 2 -1/2\na 2 1 -1/2\n"


def test_parse_rational_lowest_terms() -> None:
    assert parse_rational("4/6") == Fraction(2, 3)
    assert parse_rational("-10") == Fraction(-10)
    assert parse_rational("0/7") == 0


@pytest.mark.parametrize("bad", ["3/-2", "1.5", "", "/2", "2/", "a", "1/2/3", "+3"])
def test_parse_rational_rejects(bad: str) -> None:
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_triangle() -> None:
    g = parse_graph(TRIANGLE)
    assert g.node_count == 3
    assert g.arc_count == 3
    assert [(a.tail, a.head, a.weight) for a in g.arcs] == [
        (0, 1, Fraction(-1)),
        (1, 2, Fraction(-1)),
        (2, 0, Fraction(-1)),
    ]


def test_parse_digon_half_weights() -> None:
    g = parse_graph(DIGON)
    assert [a.weight for a in g.arcs] == [Fraction(-1, 2), Fraction(-1, 2)]
    assert total_weight(g, (0, 1)) == -1


def test_parse_comments_and_blank_lines() -> None:
    g = parse_graph("c hello\n\np 1 1\nc mid\na 1 1 0\n")
    assert g.arc_count == 1
    assert g.arcs[0].tail == g.arcs[0].head == 0


def test_parse_zero_denominator_names_line() -> None:
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("p 2 1\na 1 2 3/0\n")


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("p 2 1\np 2 1\na 1 2 0\n", 2, "duplicate"),
        ("a 1 2 0\n", 1, "before"),
        ("p 0 0\n", 1, "positive"),
        ("p 2 2\na 1 2 0\n", 1, "declares 2 arcs"),
        ("p 2 1\na 1 3 0\n", 2, "out of range"),
        ("p 2 1\na 0 2 0\n", 2, "out of range"),
        ("p 2 1\nb 1 2 0\n", 2, "unknown record"),
        ("p 2 1\na 1 2\n", 2, "needs tail"),
        ("p 2\n", 1, "needs node and arc"),
        ("", 1, "missing p header"),
    ],
)
def test_parse_errors(text: str, line: int, fragment: str) -> None:
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_graph(text)
    assert exc.value.line_number == line


def test_serialize_round_trip() -> None:
    g = parse_graph(TRIANGLE)
    assert parse_graph(serialize_graph(g)) == g


def test_serialize_emits_comments_first() -> None:
    g = parse_graph(DIGON)
    text = serialize_graph(g, ["one", "two"])
    assert text.splitlines()[:2] == ["c one", "c two"]
    assert parse_graph(text) == g


def test_arc_ids_must_be_positional() -> None:
    with pytest.raises(ValueError):
        WeightedDigraph(2, (Arc(1, 0, 1, Fraction(0)),))


def test_parallel_arcs_and_self_loops_allowed() -> None:
    g = parse_graph("p 2 3\na 1 2 1\na 1 2 2\na 2 2 -1\n")
    assert g.arc_count == 3
    assert [a.arc_id for a in g.out_arcs[0]] == [0, 1]
    assert [a.arc_id for a in g.in_arcs[1]] == [0, 1, 2]


def test_total_weight_examples() -> None:
    g = parse_graph(TRIANGLE)
    assert total_weight(g, (0, 1, 2)) == -3
    assert total_weight(g, ()) == 0


def test_characteristic_vector_examples() -> None:
    g = parse_graph(TRIANGLE)
    assert characteristic_vector(g, ()).is_zero()
    assert characteristic_vector(g, (0, 2)).entries == (1, 0, 1)
    d = parse_graph(DIGON)
    assert characteristic_vector(d, (0, 1)).entries == (1, 1)


def test_characteristic_vector_rejects_bad_id() -> None:
    g = parse_graph(TRIANGLE)
    with pytest.raises(ValueError):
        characteristic_vector(g, (3,))


def test_arc_vector_ops() -> None:
    v = ArcVector((Fraction(1), Fraction(0), Fraction(2)))
    w = ArcVector((Fraction(1, 2), Fraction(1), Fraction(0)))
    assert (v + w).entries == (Fraction(3, 2), 1, 2)
    assert v.scale(Fraction(1, 2)).entries == (Fraction(1, 2), 0, 1)
    assert v.support() == (0, 2)
    assert ArcVector.zero(3).is_zero()
    with pytest.raises(ValueError):
        v + ArcVector.zero(2)


def test_arc_vector_file_round_trip() -> None:
    v = ArcVector((Fraction(0), Fraction(3, 7), Fraction(-2)))
    text = serialize_arc_vector(v)
    assert parse_arc_vector(text, 3) == v
    assert parse_arc_vector("", 3).is_zero()


def test_arc_vector_parse_errors() -> None:
    with pytest.raises(ParseError, match="duplicate"):
        parse_arc_vector("e 0 1\ne 0 2\n", 2)
    with pytest.raises(ParseError, match="out of range"):
        parse_arc_vector("e 5 1\n", 2)
    with pytest.raises(ParseError, match="expected 'e"):
        parse_arc_vector("x 0 1\n", 2)


def test_scc_triangle_single_component() -> None:
    g = parse_graph(TRIANGLE)
    assert strongly_connected_components(g) == ((0, 1, 2),)


def test_scc_path_three_singletons() -> None:
    g = parse_graph("p 3 2\na 1 2 0\na 2 3 0\n")
    assert strongly_connected_components(g) == ((0,), (1,), (2,))


def test_scc_matches_networkx() -> None:
    nx = pytest.importorskip("networkx")
    g = parse_graph(
        "p 6 8\na 1 2 0\na 2 1 0\na 2 3 0\na 3 4 0\na 4 3 0\n"
        "a 5 5 0\na 4 5 0\na 6 1 0\n"
    )
    h = nx.MultiDiGraph()
    h.add_nodes_from(range(g.node_count))
    for a in g.arcs:
        h.add_edge(a.tail, a.head)
    expected = sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(h))
    assert sorted(strongly_connected_components(g)) == expected


def test_positive_flow_stays_within_one_component() -> None:
    # On a graph made of two negative digons joined by a one-way bridge,
    # every feasible point routes flow inside a single strongly connected
    # component, never across the bridge.
    from negflow.polyhedra import build_P, oracle_vertices

    g = parse_graph(
        "p 4 5\na 1 2 -1/2\na 2 1 -1/2\na 2 3 0\na 3 4 -1/2\na 4 3 -1/2\n"
    )
    comps = strongly_connected_components(g)
    comp_of = {n: i for i, comp in enumerate(comps) for n in comp}
    for point in oracle_vertices(build_P(g), 2**10).points:
        for arc_id in point.support():
            arc = g.arcs[arc_id]
            assert comp_of[arc.tail] == comp_of[arc.head]


def test_subgraph_full_is_isomorphic_copy() -> None:
    g = parse_graph(TRIANGLE)
    h = subgraph(g, (0, 1, 2))
    assert h.node_count == 3
    assert [(a.tail, a.head, a.weight) for a in h.arcs] == [
        (a.tail, a.head, a.weight) for a in g.arcs
    ]


def test_subgraph_single_arc() -> None:
    g = parse_graph(TRIANGLE)
    h = subgraph(g, (0,))
    assert h.node_count == 2
    assert h.arc_count == 1
    assert h.arc_labels == ("0",)


def test_subgraph_keeps_weights_and_labels() -> None:
    g = parse_graph("p 3 2\na 3 1 5/3\na 1 3 -2\n")
    h = subgraph(g, (1,))
    assert h.arcs[0].weight == -2
    assert h.node_labels == ("0", "2")


@st.composite
def graphs(draw: st.DrawFn) -> WeightedDigraph:
    n = draw(st.integers(min_value=1, max_value=5))
    arcs = draw(
        st.lists(
            st.tuples(
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.fractions(min_value=-3, max_value=3, max_denominator=4),
            ),
            max_size=8,
        )
    )
    return WeightedDigraph(
        n, tuple(Arc(i, t, h, Fraction(w)) for i, (t, h, w) in enumerate(arcs))
    )


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_serialize_parse_identity(g: WeightedDigraph) -> None:
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_scc_partition_nodes(g: WeightedDigraph) -> None:
    comps = strongly_connected_components(g)
    seen = [n for comp in comps for n in comp]
    assert sorted(seen) == list(range(g.node_count))
