"""Precoloring extension on triangle-free plane graphs via face flows."""

from .coloring import (
    Coloring,
    DualOrientation,
    EdgeClass,
    InconsistentOrientationError,
    brute_force_extend,
    classify_boundary_edges,
    coloring_from_orientation,
    enumerate_outer_colorings,
    face_flux,
    orient_dual,
)
from .criticality import (
    KNOWN_CRITICAL_FACE_MULTISETS,
    CriticalityVerdict,
    EightCycleClass,
    check_k_minus_2,
    check_quadrangulation,
    classify_7cycle,
    classify_8cycle,
    is_c_critical,
    k_minus_2_extends,
    nonextendable_colorings,
    r_of,
)
from .flow_solver import (
    AuxNetwork,
    CutStructure,
    ExtensionVerdict,
    Layout,
    analyze_cut,
    build_aux_network,
    decide_extension,
    enumerate_balanced_layouts,
    max_flow_min_cut,
)
from .generate import GenSpec, enumerate_fillings, fixtures
from .plane_graph import (
    Face,
    FormatError,
    GraphError,
    PlaneGraph,
    cycle_graph,
    cycle_interior,
    face_length_multiset,
    parse_plane_graph,
    plane_graph_from_faces,
    separating_cycles_up_to,
    to_text,
    trace_faces,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
