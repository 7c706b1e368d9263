"""G-free colorings: exact chromatic numbers, constructive bounds, critical
subgraphs and Nordhaus–Gaddum audits for small graphs."""

from .coloring import (
    BoundNotApplicable,
    BoundReport,
    Coloring,
    bound_chromatic,
    bound_degeneracy,
    bound_maxdeg,
    bound_report,
    chi_g,
    chi_g_exact,
    chromatic_number,
    decide_k_colorable,
    greedy_degeneracy_coloring,
    lovasz_decomposition,
)
from .critical import CriticalCertificate, extract_critical, is_critical, subgraph_with_chi
from .enumerate import canonical_form, enumerate_small_graphs
from .formats import ParseError, encode_graph6, parse_dimacs, parse_graph6
from .graph import DegreeBounds, Graph, GraphError, degeneracy, disjoint_union, join
from .named import construct_named
from .ng import check_refined_conditions, ng_sum, verify_corpus, witness_suite
from .patterns import PatternSpec, clique_number, contains_copy, find_copy, girth

__version__ = "0.1.0"

__all__ = [
    "BoundNotApplicable", "BoundReport", "Coloring", "CriticalCertificate", "DegreeBounds", "Graph",
    "GraphError", "ParseError", "PatternSpec", "bound_chromatic", "bound_degeneracy", "bound_maxdeg",
    "bound_report", "canonical_form", "check_refined_conditions", "chi_g", "chi_g_exact",
    "chromatic_number", "clique_number", "construct_named", "contains_copy", "decide_k_colorable",
    "degeneracy", "disjoint_union", "encode_graph6", "enumerate_small_graphs", "extract_critical",
    "find_copy", "girth", "greedy_degeneracy_coloring", "is_critical", "join", "lovasz_decomposition",
    "ng_sum", "parse_dimacs", "parse_graph6", "subgraph_with_chi", "verify_corpus", "witness_suite",
]
