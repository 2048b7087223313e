# ~/epframe/epframe/__init__.py
#
# Packing and covering of A-paths: frame-based dichotomy solvers,
# certificates, an exhaustive oracle and a counterexample gallery.
__version__ = "0.1.0"

from epframe.graph import EPFrameError, Graph, Path, TerminalSet, parse_graph, serialize_graph
from epframe.labeling import EdgeLabeling, GroupSpec, PathSpec, matches_spec
from epframe.epsolve import Certificate, solve
from epframe.oracle import Budget, enumerate_paths, max_disjoint, min_hitting_set, verify_certificate

__all__ = ["EPFrameError", "Graph", "Path", "TerminalSet", "parse_graph", "serialize_graph",
           "EdgeLabeling", "GroupSpec", "PathSpec", "matches_spec", "Certificate", "solve",
           "Budget", "enumerate_paths", "max_disjoint", "min_hitting_set", "verify_certificate"]
