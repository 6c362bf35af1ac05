import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs
from wklab.generators import all_labeled_graphs
from wklab.graph import (
    Graph,
    GraphInputError,
    IndependentFamily,
    FamilyError,
    VertexSet,
    alpha,
    beta,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_maximal_independent_sets,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
    path_graph,
)


def sets(g):
    return [set(s) for s in enumerate_maximal_independent_sets(g)]


class TestVertexSet:
    def test_iteration_is_ascending(self):
        assert list(VertexSet([5, 1, 3])) == [1, 3, 5]

    def test_algebra(self):
        a, b = VertexSet([0, 1, 2]), VertexSet([2, 3])
        assert a | b == VertexSet([0, 1, 2, 3])
        assert a & b == VertexSet([2])
        assert a - b == VertexSet([0, 1])
        assert a.complement(5) == VertexSet([3, 4])
        assert 2 in a and 3 not in a
        assert VertexSet([1]) <= a

    @given(st.frozensets(st.integers(0, 40)), st.frozensets(st.integers(0, 40)))
    def test_laws(self, x, y):
        a, b = VertexSet(x), VertexSet(y)
        assert len(a) == len(list(a))
        assert a | b >= a
        assert len(a | b) + len(a & b) == len(a) + len(b)
        assert set(a - b) == x - y

    def test_immutable(self):
        with pytest.raises(AttributeError):
            VertexSet([1]).mask = 3


class TestGraph:
    def test_rejects_loops_and_range(self):
        with pytest.raises(GraphInputError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(GraphInputError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(GraphInputError):
            Graph(2, [0b10, 0])

    def test_symmetry(self):
        g = cycle_graph(5)
        for u in range(5):
            for v in g.neighbors(u):
                assert u in g.neighbors(v)
            assert u not in g.neighbors(u)

    def test_neighbourhoods(self):
        g = path_graph(3)
        assert g.neighbors(1) == VertexSet([0, 2])
        assert g.closed_neighborhood(0) == VertexSet([0, 1])


class TestIndependence:
    def test_examples(self, c4):
        assert is_independent(c4, VertexSet([0, 2]))
        assert not is_independent(c4, VertexSet([0, 1]))
        assert is_independent(c4, VertexSet())

    def test_out_of_range(self, c4):
        with pytest.raises(GraphInputError):
            is_independent(c4, VertexSet([4]))
        with pytest.raises(GraphInputError):
            is_maximal_independent(c4, [7])

    @pytest.mark.parametrize("graph, s, expected", [
        (path_graph(3), [1], True),
        (path_graph(3), [0], False),
        (cycle_graph(4), [0, 2], True),
    ])
    def test_maximal_examples(self, graph, s, expected):
        oracle = frozenset(s) in set(oracles.maximal_sets(graph))
        assert oracle == expected
        assert is_maximal_independent(graph, VertexSet(s)) == expected


class TestEnumeration:
    def test_examples(self, p3, c4, k2):
        assert sets(p3) == [{1}, {0, 2}]
        assert sets(c4) == [{0, 2}, {1, 3}]
        assert sets(k2) == [{0}, {1}]

    def test_empty_graph(self):
        assert sets(empty_graph(0)) == [set()]
        assert alpha(empty_graph(0)) == beta(empty_graph(0)) == 0

    def test_order_is_by_bit_pattern(self):
        masks = [s.mask for s in enumerate_maximal_independent_sets(cycle_graph(7))]
        assert masks == sorted(masks)
        assert len(masks) == len(set(masks))

    def test_matches_scan_all_small_graphs(self):
        for n in range(7):
            for g in all_labeled_graphs(n):
                got = [frozenset(s) for s in enumerate_maximal_independent_sets(g)]
                assert len(got) == len(set(got))
                assert set(got) == set(oracles.maximal_sets(g))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10))
    def test_every_yielded_set_is_maximal(self, g):
        for s in enumerate_maximal_independent_sets(g):
            assert is_maximal_independent(g, s)
            for v in s.complement(g.n):
                assert not is_independent(g, s | VertexSet([v]))


class TestAlphaBeta:
    @pytest.mark.parametrize("graph, a, b", [
        (cycle_graph(4), 2, 2),
        (path_graph(3), 2, 1),
        (cycle_graph(5), 2, 2),
        (complete_graph(4), 1, 1),
    ])
    def test_examples(self, graph, a, b):
        assert (oracles.alpha(graph), oracles.beta(graph)) == (a, b)
        assert (alpha(graph), beta(graph)) == (a, b)

    @settings(max_examples=300, deadline=None)
    @given(graphs(min_n=1, max_n=8))
    def test_against_scan(self, g):
        assert alpha(g) == oracles.alpha(g)
        assert beta(g) == oracles.beta(g)
        assert beta(g) <= alpha(g)


class TestInducedSubgraph:
    def test_c4_minus_vertex(self, c4):
        h, index = induced_subgraph(c4, [1, 2, 3])
        assert h == path_graph(3)
        assert index == {1: 0, 2: 1, 3: 2}

    def test_identity(self, c5):
        h, index = induced_subgraph(c5, c5.vertices)
        assert h == c5 and index == {v: v for v in range(5)}

    def test_k3(self):
        h, _ = induced_subgraph(complete_graph(3), [0, 1])
        assert h == complete_graph(2)


class TestIndependentFamily:
    def test_valid_and_empty_members(self, c4):
        fam = IndependentFamily([[0], [], [1, 3]])
        assert fam.check(c4).k == 3

    def test_rejects_overlap_and_dependence(self, c4):
        with pytest.raises(FamilyError):
            IndependentFamily([[0], [0, 2]]).check(c4)
        with pytest.raises(FamilyError):
            IndependentFamily([[0, 1]]).check(c4)
