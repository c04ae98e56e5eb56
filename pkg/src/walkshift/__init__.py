"""Avoidable walks, trails and paths in multigraphs, and shifting them into place."""

from .avoidability import (
    Extension,
    closing_walk,
    extensions,
    is_avoidable,
    is_closable,
    is_simplicial,
    non_closable_extensions,
)
from .errors import BudgetExceeded, InputError, ParseError
from .families import (
    FamilySpec,
    build,
    claim1_characterization,
    claim2_isometric_cycles,
    family,
    iso_counterexample,
    verify_no_avoidable,
)
from .graph import (
    DfsTree,
    MultiGraph,
    cartesian_product,
    contract_edge,
    delete_closed_neighborhood,
    dfs_tree,
    distance,
    is_isometric_subgraph,
    line_graph,
)
from .graphio import parse_graph, parse_walk, serialize_graph, to_dot
from .report import VerificationReport
from .shifting import (
    ShiftSequence,
    ShiftStats,
    check_Hr,
    is_shift,
    path_shifting_dfs,
    path_shifting_via_line_graph,
    refined_shifting,
    shift_reachable,
    shifting_induced,
    shifts_of,
    verify_shift_sequence,
    walk_shifting,
)
from .walks import (
    KINDS,
    Walk,
    WalkKind,
    canonical_form,
    classify,
    classify_closed,
    enumerate_walks,
    is_closed,
)

__all__ = [
    "BudgetExceeded", "DfsTree", "Extension", "FamilySpec", "InputError", "KINDS", "MultiGraph",
    "ParseError", "ShiftSequence", "ShiftStats", "VerificationReport", "Walk", "WalkKind", "build",
    "canonical_form", "cartesian_product", "check_Hr", "claim1_characterization",
    "claim2_isometric_cycles", "classify", "classify_closed", "closing_walk", "contract_edge",
    "delete_closed_neighborhood", "dfs_tree", "distance", "enumerate_walks", "extensions", "family",
    "is_avoidable", "is_closable", "is_closed", "is_isometric_subgraph", "is_shift", "is_simplicial",
    "iso_counterexample", "line_graph", "non_closable_extensions", "parse_graph", "parse_walk",
    "path_shifting_dfs", "path_shifting_via_line_graph", "refined_shifting", "serialize_graph",
    "shift_reachable", "shifting_induced", "shifts_of", "to_dot", "verify_no_avoidable",
    "verify_shift_sequence", "walk_shifting",
]
