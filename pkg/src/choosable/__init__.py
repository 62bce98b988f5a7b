"""List edge and total coloring of planar graphs with no triangle adjacent to a 4-cycle."""

from .configurations import (
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    PRIORITY,
    SupportWitness,
    detect_configuration,
    find_support,
    verify_configuration,
)
from .discharging import AuditReport, WeightLedger, audit, run_discharging
from .plane_graph import (
    Dart,
    FaceWalk,
    PlaneGraph,
    build_from_rotation,
    find_triangle_adjacent_c4,
    opposite_in_quad,
    trace_faces,
)
from .reductions import EDGE, TOTAL, ExtensionPlan, extend, reduce
from .solver import HypothesisViolated, NoConfigurationFound, SolveContext, make_context, solve, uniform_lists, verify

__version__ = "0.1.0"
