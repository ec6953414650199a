"""Exact graph colouring with a Grover-query cost model for the searches."""

from .graph import Graph, parse_dimacs, to_dimacs

__version__ = "0.1.0"

__all__ = ["Graph", "parse_dimacs", "to_dimacs", "__version__"]
