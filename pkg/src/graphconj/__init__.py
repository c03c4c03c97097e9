"""Exact graph invariants, extremal families, theorem checks and conjecture generation."""

from .graph import Graph, GraphError, encode_graph6, parse_graph6
from .invariants import CATALOG, InvariantId, InvariantUndefined, compute

__all__ = [
    "CATALOG",
    "Graph",
    "GraphError",
    "InvariantId",
    "InvariantUndefined",
    "compute",
    "encode_graph6",
    "parse_graph6",
]
__version__ = "0.1.0"
