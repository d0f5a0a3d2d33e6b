"""Tight cuts in matching covered graphs.

Perfect-matching machinery, tight cut decomposition into bricks and braces,
barriers and 2-separations (ELP cuts), and a certified constructive search
for an ELP structure that does not cross a given nontrivial tight cut.
"""

__version__ = "0.1.0"

from .elp import (
    Barrier,
    BarrierCut,
    SeparationCut,
    TwoSeparation,
    find_nontrivial_barrier,
    find_nontrivial_elp_cut,
    find_two_separations,
    is_barrier,
    is_two_separation,
)
from .errors import (
    DomainError,
    GraphFormatError,
    InvariantError,
    NotMatchingCoveredError,
    NotTightError,
    TightcutError,
)
from .formats import parse_edge_list, parse_graph, parse_graph6
from .graph import Cut, Multigraph, boundary, contract
from .laminar import (
    LaminarSeparation,
    ShelteredBarrier,
    find_laminar_elp,
    find_structure_avoiding,
)
from .matching import has_perfect_matching, is_matching_covered, maximum_matching
from .tightcuts import Kind, brick_number, classify, decompose, is_tight

__all__ = [
    "Barrier",
    "BarrierCut",
    "Cut",
    "DomainError",
    "GraphFormatError",
    "InvariantError",
    "Kind",
    "LaminarSeparation",
    "Multigraph",
    "NotMatchingCoveredError",
    "NotTightError",
    "SeparationCut",
    "ShelteredBarrier",
    "TightcutError",
    "TwoSeparation",
    "boundary",
    "brick_number",
    "classify",
    "contract",
    "decompose",
    "find_laminar_elp",
    "find_nontrivial_barrier",
    "find_nontrivial_elp_cut",
    "find_structure_avoiding",
    "find_two_separations",
    "has_perfect_matching",
    "is_barrier",
    "is_matching_covered",
    "is_tight",
    "is_two_separation",
    "maximum_matching",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
]
