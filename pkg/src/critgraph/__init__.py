"""Toolkit for vertex-cover-critical graphs and hidden-solution benchmarks."""

from .graph import Graph, build_graph
from .solver import SolveBudget, mvc
from .criticality import is_critical

__all__ = ["Graph", "build_graph", "SolveBudget", "mvc", "is_critical"]
__version__ = "0.1.0"
