"""Connected and 2-connected Turan problems for Berge paths and cycles.

Berge-copy detection with checkable certificates, the hypergraph to
red-blue graph reduction, Kelmans operations, the extremal constructions
and exact small-instance searches.
"""

from .berge import (
    BergeEmbedding,
    find_berge_path,
    has_berge_cycle_at_least,
    is_berge_cycle_free,
    is_berge_path_free,
    longest_berge_path,
    longest_berge_path_order,
    validate_embedding,
)
from .constructions import FormulaQuery, construct_G2, construct_G3, construct_H, construct_W, formula
from .core import BLUE, RED, Graph, Hypergraph, RedBlueGraph
from .formats import FormatError, parse_any, serialize
from .kelmans import kelmans, kelmans_colored, p_star, recolor_pipeline
from .reduction import ReductionCertificate, g_r, reduce, verify_certificate
from .search import SearchReport, enumerate_graphs, exact_hypergraph_turan

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "BergeEmbedding",
    "FormatError",
    "FormulaQuery",
    "Graph",
    "Hypergraph",
    "RedBlueGraph",
    "ReductionCertificate",
    "SearchReport",
    "construct_G2",
    "construct_G3",
    "construct_H",
    "construct_W",
    "enumerate_graphs",
    "exact_hypergraph_turan",
    "find_berge_path",
    "formula",
    "g_r",
    "has_berge_cycle_at_least",
    "is_berge_cycle_free",
    "is_berge_path_free",
    "kelmans",
    "kelmans_colored",
    "longest_berge_path",
    "longest_berge_path_order",
    "p_star",
    "parse_any",
    "recolor_pipeline",
    "reduce",
    "serialize",
    "validate_embedding",
]
