import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from wklab.conjecture import matching_join
from wklab.generators import all_labeled_graphs, random_graph
from wklab.graph import (
    FamilyError,
    GraphInputError,
    IndependentFamily,
    VertexSet,
    alpha,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_independent,
    is_maximal_independent,
    path_graph,
)
from wklab.lexproduct import lex_product_with_clique
from wklab.recognition import (
    eval_disjoint,
    eval_indep,
    eval_indep_k,
    eval_maximal,
    eval_subset,
    find_disjoint_maximum_extensions,
    formula_wk_counterexample,
    is_one_well_covered,
    is_well_covered,
    is_wk,
    models_formula_wk,
)


def small_graphs(max_n):
    for n in range(max_n + 1):
        yield from all_labeled_graphs(n)


def assert_failing_witness(g, report, k):
    fam = report.witness
    assert fam is not None and fam.k == k
    assert not fam.problems(g)
    assert find_disjoint_maximum_extensions(g, fam) is None


class TestWellCovered:
    def test_c4(self, c4):
        rep = is_well_covered(c4)
        assert rep.verdict and rep.alpha == rep.beta == 2

    def test_p3(self, p3):
        rep = is_well_covered(p3)
        assert not rep.verdict
        assert rep.witness.sets == (VertexSet([1]),)

    def test_matching_join_1_2(self):
        rep = is_well_covered(matching_join(1, 2).graph)
        assert not rep.verdict
        assert (rep.beta, rep.alpha) == (1, 2)

    def test_witness_is_small_maximal(self):
        for g in small_graphs(5):
            rep = is_well_covered(g)
            assert rep.verdict == oracles.well_covered(g)
            if not rep.verdict:
                (w,) = rep.witness.sets
                assert is_maximal_independent(g, w) and len(w) < rep.alpha


class TestOneWellCovered:
    @pytest.mark.parametrize("graph, expected", [
        (cycle_graph(5), True),
        (cycle_graph(4), False),
        (complete_graph(2), True),
    ])
    def test_examples(self, graph, expected):
        assert oracles.one_well_covered(graph) == expected
        assert is_one_well_covered(graph) == expected

    def test_against_oracle(self):
        for g in small_graphs(5):
            assert is_one_well_covered(g) == oracles.one_well_covered(g)


class TestExtensions:
    def test_c4_pair(self, c4):
        got = find_disjoint_maximum_extensions(c4, [[0], [1]])
        assert got.sets == (VertexSet([0, 2]), VertexSet([1, 3]))

    def test_c4_no_extension(self, c4):
        assert find_disjoint_maximum_extensions(c4, [[0], [2]]) is None

    def test_single_empty(self, c5):
        (s,) = find_disjoint_maximum_extensions(c5, [[]]).sets
        assert len(s) == alpha(c5) and is_independent(c5, s)

    def test_invalid_family_is_an_error(self, c4):
        with pytest.raises(FamilyError):
            find_disjoint_maximum_extensions(c4, [[0, 1]])
        with pytest.raises(FamilyError):
            find_disjoint_maximum_extensions(c4, [[0], [0]])

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_n=1, max_n=7))
    def test_result_reverifies(self, g):
        rng = random.Random(g.n * 1000 + g.m)
        fam = [set(), set()]
        for v in range(g.n):
            i = rng.randrange(3)
            if i < 2 and not any(g.adjacent(v, u) for u in fam[i]):
                fam[i].add(v)
        got = find_disjoint_maximum_extensions(g, fam)
        expected = oracles.extendable(tuple(frozenset(s) for s in fam), oracles.maximum_sets(g))
        assert (got is not None) == expected
        if got is not None:
            assert not got.problems(g)
            a = alpha(g)
            for a_i, s_i in zip(fam, got):
                assert VertexSet(a_i) <= s_i and len(s_i) == a


class TestIsWk:
    @pytest.mark.parametrize("graph, k, expected", [
        (complete_graph(2), 2, True),
        (cycle_graph(4), 2, False),
        (cycle_graph(5), 2, True),
        (complete_graph(1), 2, False),
    ])
    def test_examples(self, graph, k, expected):
        assert oracles.wk(graph, k) == expected
        assert is_wk(graph, k).verdict == expected

    def test_c4_witness(self, c4):
        rep = is_wk(c4, 2)
        assert rep.witness.sets == (VertexSet([0]), VertexSet([2]))
        assert_failing_witness(c4, rep, 2)

    def test_bad_k(self, c4):
        with pytest.raises(GraphInputError):
            is_wk(c4, 0)
        with pytest.raises(GraphInputError):
            models_formula_wk(c4, 0)

    def test_empty_graph(self):
        assert is_wk(empty_graph(0), 3).verdict

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_against_ordered_oracle(self, k):
        # full ordered enumeration, no pruning, no symmetry
        for g in small_graphs(5 if k < 3 else 4):
            rep = is_wk(g, k)
            assert rep.verdict == oracles.wk(g, k), g
            if not rep.verdict:
                assert_failing_witness(g, rep, k)

    def test_pruned_against_unpruned_n6(self):
        rng = random.Random(6)
        for _ in range(120):
            g = random_graph(6, rng.uniform(0.2, 0.8), rng)
            assert is_wk(g, 2).verdict == oracles.wk(g, 2), g

    def test_twin_and_component_reductions(self):
        # products have clique blocks of true twins; unions exercise components
        cases = [lex_product_with_clique(g, 2).product for g in small_graphs(3)]
        cases += [lex_product_with_clique(path_graph(2), 3).product, empty_graph(4)]
        for h in cases:
            for k in (2, 3):
                assert is_wk(h, k).verdict == oracles.wk(h, k), (h, k)

    def test_k1_is_well_covered(self):
        for g in small_graphs(6):
            assert is_wk(g, 1).verdict == is_well_covered(g).verdict

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=7, max_n=8))
    def test_k1_is_well_covered_larger(self, g):
        assert is_wk(g, 1).verdict == is_well_covered(g).verdict

    def test_downward_closure(self):
        for g in small_graphs(6):
            w = [is_wk(g, k).verdict for k in (1, 2, 3)]
            assert not w[1] or w[0]
            assert not w[2] or w[1]

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_n=1, max_n=8))
    def test_fast_fail(self, g):
        for k in (2, 3):
            if k * alpha(g) > g.n:
                assert not is_wk(g, k).verdict

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_n=1, max_n=8))
    def test_witnesses_reverify(self, g):
        for k in (1, 2, 3):
            rep = is_wk(g, k)
            if not rep.verdict:
                assert_failing_witness(g, rep, k)


class TestFormula:
    def test_predicates_examples(self, p3, c4):
        assert eval_maximal(p3, {1})
        assert not eval_disjoint(c4, {0, 1}, {1, 2})
        for x in ({0}, {0, 2}, set()):
            assert eval_subset(c4, set(), x)
        assert eval_indep(c4, {0, 2}) and not eval_indep(c4, {0, 1})

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=7))
    def test_predicates_match_graph_core(self, g):
        for s in oracles.all_subsets(g.n):
            assert eval_indep(g, s) == is_independent(g, s)
            assert eval_maximal(g, s) == is_maximal_independent(g, s)

    @pytest.mark.parametrize("graph, k, expected", [
        (path_graph(3), 1, True),
        (cycle_graph(4), 2, False),
        (cycle_graph(5), 2, True),
    ])
    def test_examples(self, graph, k, expected):
        assert oracles.formula_wk(graph, k) == expected
        assert models_formula_wk(graph, k) == expected

    def test_against_oracle(self):
        for g in small_graphs(5):
            assert models_formula_wk(g, 2) == oracles.formula_wk(g, 2), g

    def test_quantified_evaluator_agrees(self):
        # the literal quantifier evaluator on every tuple of small graphs
        for g in small_graphs(4):
            maximal = [VertexSet(s) for s in oracles.maximal_sets(g)]
            literal = all(eval_indep_k(g, t, maximal) for t in oracles.disjoint_tuples(g, 2))
            assert literal == models_formula_wk(g, 2)

    def test_counterexample_fails(self, c4):
        fam = formula_wk_counterexample(c4, 2)
        maximal = [VertexSet(s) for s in oracles.maximal_sets(c4)]
        assert not eval_indep_k(c4, fam.sets, maximal)

    def test_characterisation_small(self):
        for g in small_graphs(5):
            for k in (2, 3):
                lhs = is_wk(g, k).verdict
                assert lhs == (is_well_covered(g).verdict and models_formula_wk(g, k))
            assert is_wk(g, 2).verdict == (is_one_well_covered(g) and not g.isolated_vertices())


def test_report_serialises(c4):
    d = is_wk(c4, 2).to_dict(timing=False)
    assert d["witness"] == [[0], [2]] and d["elapsed_s"] is None
    assert IndependentFamily([[0], [2]]).to_lists() == d["witness"]
