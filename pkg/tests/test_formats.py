import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from wklab.formats import (
    GraphFormatError,
    emit_graph,
    emit_graph6,
    parse_graph,
    parse_graph6,
    parse_graph6_stream,
)
from wklab.generators import random_graph
from wklab.graph import Graph, complete_graph, cycle_graph, empty_graph


def test_graph6_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.m == 6
    assert g == complete_graph(4)


def test_graph6_known_strings():
    # values from nauty's showg / networkx.to_graph6_bytes
    assert emit_graph6(cycle_graph(4)) == "Cl"
    assert emit_graph6(cycle_graph(5)) == "Dhc"
    assert emit_graph6(empty_graph(0)) == "?"
    assert emit_graph6(empty_graph(1)) == "@"


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng.randint(0, 70), rng.random(), rng)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(g) == expected


def test_graph6_large_header_round_trip():
    g = cycle_graph(70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_header_prefix():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_edgelist_c4():
    assert parse_graph("4\n0 1\n1 2\n2 3\n3 0", "edgelist") == cycle_graph(4)


def test_dimacs():
    text = "c a comment\np edge 3 2\ne 1 2\ne 2 3\n"
    g = parse_graph(text, "dimacs")
    assert g.edges() == [(0, 1), (1, 2)]
    assert emit_graph(g, "dimacs") == "p edge 3 2\ne 1 2\ne 2 3\n"


@pytest.mark.parametrize("fmt, text, line", [
    ("dimacs", "p edge 3 1\ne 1 4\n", 2),
    ("dimacs", "e 1 2\n", 1),
    ("dimacs", "p edge x 1\n", 1),
    ("dimacs", "p edge 3 1\ne 2 2\n", 2),
    ("edgelist", "3\n0 5\n", 2),
    ("edgelist", "3\n1 1\n", 2),
    ("edgelist", "three\n", 1),
    ("edgelist", "3\n0 1 2\n", 2),
])
def test_parse_errors_carry_line(fmt, text, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text, fmt)
    assert exc.value.line == line


@pytest.mark.parametrize("text", ["B~", "C~~", "C\x7f", ""])
def test_graph6_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


@pytest.mark.parametrize("fmt", ["graph6", "dimacs", "edgelist"])
def test_round_trip_corpus(fmt):
    rng = random.Random(2024)
    for _ in range(100):
        g = random_graph(rng.randint(0, 30), rng.random(), rng)
        text = emit_graph(g, fmt)
        assert parse_graph(text, fmt) == g
        assert emit_graph(parse_graph(text, fmt), fmt) == text


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_round_trip_property(g):
    for fmt in ("graph6", "dimacs", "edgelist"):
        assert parse_graph(emit_graph(g, fmt), fmt) == g


def test_edgelist_canonicalises_order():
    g = parse_graph("3\n2 1\n1 0\n0 1\n", "edgelist")
    assert emit_graph(g, "edgelist") == "3\n0 1\n1 2\n"


def test_stream():
    assert parse_graph6_stream("Cl\n\nDhc\n") == [cycle_graph(4), cycle_graph(5)]
    assert isinstance(parse_graph6_stream("@")[0], Graph)
