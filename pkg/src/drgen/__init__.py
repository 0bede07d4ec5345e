"""Derangement generation of digraphs and 1-factor covers of bipartite graphs."""
from .cover import BlockedEdge, MinCover, NoFactor, NotCoverable, OneFactorCover, cover_with_k, is_one_extendable, min_cover
from .derangements import (
    Derangement,
    DerangementSet,
    DigraphCertificate,
    MinDerangements,
    NotGenerable,
    check_conditions,
    cycle_notation,
    generate_with_k,
    min_derangements,
    parse_cycles,
    verify_generates,
)
from .errors import DrgenError, ParseError
from .flow import FlowNetwork, check_flow, max_flow
from .graphs import BipartiteMultigraph, Digraph, OneFactor, bipartite_double, parse_graph, read_graph, serialize
from .kernels import backend_name
from .thickening import Certificate, k_regular_thickening, k_thickening_on, one_factorize, perfect_matching

__version__ = "0.1.0"

__all__ = [
    "BipartiteMultigraph", "BlockedEdge", "Certificate", "Derangement", "DerangementSet", "Digraph",
    "DigraphCertificate", "DrgenError", "FlowNetwork", "MinCover", "MinDerangements", "NoFactor",
    "NotCoverable", "NotGenerable", "OneFactor", "OneFactorCover", "ParseError", "backend_name",
    "bipartite_double", "check_conditions", "check_flow", "cover_with_k", "cycle_notation",
    "generate_with_k", "is_one_extendable", "k_regular_thickening", "k_thickening_on", "max_flow",
    "min_cover", "min_derangements", "one_factorize", "parse_cycles", "parse_graph", "perfect_matching",
    "read_graph", "serialize", "verify_generates",
]
