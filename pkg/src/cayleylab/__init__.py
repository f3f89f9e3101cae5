"""Cayley graphs of the symmetric group over transposition sets.

Builds Cay(S_n, S) for generating sets S of transpositions, computes full
automorphism groups by constrained search, decides normality two independent
ways, and machine-verifies the structural facts behind
Aut = (R(S_n) x| Inn(S_n)) x| Z_2 for the complete transposition set,
exhaustively for n = 3..5.
"""

from .aut import (
    automorphism_group,
    distinct_neighbor_check,
    is_normal_cayley,
    little_group,
    restrict_to_S,
    restriction_analysis,
    right_translation_group,
    vertex_stabilizer,
)
from .cayley import CayleyGraph, DistancePartition, build_cayley, preset_generators
from .errors import CapExceeded
from .groups import NormalityCheck, PermGroup, VertexMap, is_normal_in, is_right_translation
from .perm import Permutation, all_permutations
from .structured import (
    build_structured_group,
    inner_conjugation,
    inversion_map,
    inversion_preserves_edges,
    non_normality_witness,
    predicted_inverse_edge_transposition,
    right_translation,
    verify_main_theorem,
)
from .tgraph import (
    SimpleGraph,
    is_connected,
    line_graph,
    small_graph_automorphisms,
    transposition_graph,
    whitney_check,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CayleyGraph",
    "DistancePartition",
    "NormalityCheck",
    "PermGroup",
    "Permutation",
    "SimpleGraph",
    "VertexMap",
    "all_permutations",
    "automorphism_group",
    "build_cayley",
    "build_structured_group",
    "distinct_neighbor_check",
    "inner_conjugation",
    "inversion_map",
    "inversion_preserves_edges",
    "is_connected",
    "is_normal_cayley",
    "is_normal_in",
    "is_right_translation",
    "line_graph",
    "little_group",
    "non_normality_witness",
    "predicted_inverse_edge_transposition",
    "preset_generators",
    "restrict_to_S",
    "restriction_analysis",
    "right_translation",
    "right_translation_group",
    "small_graph_automorphisms",
    "transposition_graph",
    "verify_main_theorem",
    "vertex_stabilizer",
    "whitney_check",
]
