"""Signed Tutte polynomials, tensor products and the Kauffman bracket."""

from .ring import LaurentZ, ParseError, PolyZ, UsageError
from .sgraph import Edge, GraphError, SignedGraph

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "GraphError",
    "LaurentZ",
    "ParseError",
    "PolyZ",
    "SignedGraph",
    "UsageError",
]
