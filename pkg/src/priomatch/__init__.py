"""Maximum priority matchings in general graphs.

Each vertex carries a priority in [1, n] (1 is highest). A matching's score
counts its matched vertices per priority class and is compared
lexicographically; :func:`max_priority_matching` finds a matching with the
largest score using augmenting paths and blossom shrinking.
"""

from .blossom import BlossomSearch, find_i_augmenting_path
from .bipartite import BipartiteSearch, bipartite_augmenting_path, bipartite_priority_matching
from .driver import SolveReport, max_priority_matching, max_size_matching, two_priority_matching
from .graph import Graph, Matching, build_graph, empty_matching, is_valid_matching
from .io import generate_random, parse_graph, parse_matching, render_graph, render_matching
from .oracle import oracle_best_score, oracle_has_i_augmenting_path
from .paths import AugPath, augment
from .score import Ordering, ScoreVector, compare, i_score, priority_score

__all__ = [
    "AugPath", "BipartiteSearch", "BlossomSearch", "Graph", "Matching",
    "Ordering", "ScoreVector", "SolveReport", "augment",
    "bipartite_augmenting_path", "bipartite_priority_matching", "build_graph",
    "compare", "empty_matching", "find_i_augmenting_path", "generate_random",
    "i_score", "is_valid_matching", "max_priority_matching",
    "max_size_matching", "oracle_best_score", "oracle_has_i_augmenting_path",
    "parse_graph", "parse_matching", "priority_score", "render_graph",
    "render_matching", "two_priority_matching",
]
