"""Planar graphs as subgraphs of H x P with H of simple treewidth at most 6."""

from .graph import Graph, PlaneGraph, build_graph
from .pipeline import NonPlanarError, decompose
from .verifier import verify_certificate

__all__ = ["Graph", "PlaneGraph", "NonPlanarError", "build_graph", "decompose", "verify_certificate"]
__version__ = "0.1.0"
