"""tropmat: exact combinatorics of tropical matroid polytopes."""

from .minplus import (
    DimensionMismatch,
    FineType,
    TropicalHalfspace,
    TropicalPoint,
    c0_chart,
    canonical,
    coarse_type,
    corner_point,
    fine_type,
    halfspace_contains,
    in_tconv,
    trop_combination,
    trop_segment,
)
from .matroids import (
    BridgeEdgeError,
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    GroundMatroid,
    LabeledGraph,
    LoopEdgeError,
    MatroidError,
    ParallelEdgeError,
    check_exchange,
    count_b,
    enumerate_bases,
    graph_from_obj,
    matroid_from_bases,
    non_bases,
    parse_bases,
    parse_graph,
    uniform_matroid,
)
from .polytopes import (
    BoundedCell,
    PolytopeModel,
    PseudoVertex,
    build_polytope,
    corner,
    interior_point,
    maximal_bounded_cells,
    pseudovertex_label,
    pseudovertices,
    skeleton_dot,
    valid_sequences,
)
from .cells import (
    CapExceeded,
    CellComplexModel,
    CellRecord,
    CrossValidationReport,
    affine_cell_dim,
    cell_dimension,
    cross_validate,
    enumerate_all_cells,
    enumerate_maximal_cells,
    hypersimplex_coarse_types,
    maximal_cell_coarse_types,
)
from .ideals import (
    MonomialIdeal,
    divides,
    ideal_generators,
    ideal_membership,
    ideal_text,
    is_minimal_generating,
    monomial_str,
    resolution_ranks,
)
from .halfspaces import (
    ContainmentError,
    ExteriorReport,
    HalfspaceSystem,
    cornered_halfspaces,
    hypersimplex_halfspaces,
    inequality_form,
    inequality_str,
    is_minimal_halfspace,
    verify_exterior_description,
)

__version__ = "0.1.0"
