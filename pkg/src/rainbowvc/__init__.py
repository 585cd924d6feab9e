"""Exact rainbow vertex-connection numbers rvc(G) and srvc(G) for small graphs."""

from .graph import Graph, diameter, parse_edge_list, format_edge_list
from .rainbow import Mode, VertexColoring, check_coloring, parse_coloring, format_coloring
from .solver import SearchBudget, Status, compute, rvc, srvc

__version__ = "0.1.0"

__all__ = [
    "Graph", "diameter", "parse_edge_list", "format_edge_list", "Mode", "VertexColoring", "check_coloring",
    "parse_coloring", "format_coloring", "SearchBudget", "Status", "compute", "rvc", "srvc",
]
