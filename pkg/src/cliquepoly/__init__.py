"""Exact clique polynomials, chordal decompositions and real-rootedness checks."""

from .analyze import ConsistencyError, GraphReport, analyze_graph, turan_check
from .chordal import (
    CliqueDecomposition,
    EliminationOrdering,
    clique_tree,
    closed_form_clique_polynomial,
    fast_chordal_polynomial,
    is_chordal,
    maximum_cardinality_search,
    pasting_polynomial,
)
from .clique import CliqueVector, clique_polynomial, count_cliques, forbidden_clique_check
from .graph import Graph, encode_graph6, parse_edge_list, parse_graph6
from .poly import IntPolynomial, RootAnalysis, analyze_roots, sturm_root_count
from .reduce import PreconditionError, quadratic_factor, triangle_free_reduction

__version__ = "0.1.0"
