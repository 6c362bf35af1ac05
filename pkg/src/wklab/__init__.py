"""Exact recognizers and experiments for well-covered and W_k graphs."""
from .graph import (
    FamilyError,
    Graph,
    GraphInputError,
    IndependentFamily,
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
from .formats import GraphFormatError, emit_graph, parse_graph
from .recognition import (
    WkReport,
    find_disjoint_maximum_extensions,
    is_one_well_covered,
    is_well_covered,
    is_wk,
    models_formula_wk,
)
from .lexproduct import ProductGraph, lex_product_with_clique, project, lift, star_labeling, verify_theorem1
from .conjecture import matching_join, check_levit_tankus_condition, refute_conjecture
from .treewidth import (
    TreeDecomposition,
    NiceTreeDecomposition,
    dp_alpha,
    dp_beta,
    min_fill_decomposition,
    to_nice,
    validate_decomposition,
    well_covered_fpt,
)

__version__ = "0.1.0"
