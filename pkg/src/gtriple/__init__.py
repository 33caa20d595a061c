"""Exact packing and list packing of graph triples."""

from ._kernel import BACKEND
from .graph import (
    CONSTANTS,
    Constants,
    Graph,
    Triple,
    TripleStats,
    VertexClass,
    classify_vertices,
    f_delta,
    graph_from_edges,
    shared_degree,
    triple_stats,
)
from .io import parse_triple, serialize_triple
from .solver import (
    Contraction,
    Violation,
    brute_force_pack,
    contract_placement,
    extend_by_placements,
    solve,
    solve_pack,
    verify_packing,
)

__version__ = "0.1.0"
