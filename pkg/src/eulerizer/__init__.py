"""Toolkit for discrete surfaces given as finite simple graphs.

A graph is treated as a two-dimensional manifold when every unit sphere is a
cycle (interior vertex) or a path (boundary vertex).  The package classifies
such graphs, refines and coarsens them, repairs odd-degree vertices until the
graph is Eulerian, runs the geodesic flow on directed edges, 3-colors discs,
and tallies combinatorial curvature.
"""

from .coloring import Coloring, boundary_period, color3, fisk_adjacency_check
from .core import (
    CurvatureLedger,
    Graph,
    SurfaceReport,
    SurfaceType,
    VertexClass,
    VertexKind,
    antipodal,
    build_graph,
    classify_surface,
    classify_vertex,
    curvature_ledger,
    cycle_order,
    dual_sphere,
    is_cycle_graph,
    is_path_graph,
    normalize_edge,
    odd_vertices,
    path_order,
    unit_sphere,
)
from .errors import (
    BadParamsError,
    ColoringConflictError,
    CutBudgetExceededError,
    DanglingEndpointError,
    EulerizerError,
    LocalGeometryTooNarrowError,
    NotABallError,
    NotAnEdgeError,
    NotASurfaceError,
    NotClosed2GraphError,
    NotCycleOrPathError,
    OddInteriorVertexError,
    PreconditionViolatedError,
    SelfLoopError,
    UnknownVertexError,
)
from .eulerize import (
    BallBudgetExhausted,
    BallHealLog,
    BallMove,
    BallRefused,
    BallSuccess,
    HealLog,
    HealStep,
    eulerize_ball,
    eulerize_closed,
    local_finisher,
    plan_first_cut_ball,
    plan_first_cut_closed,
    reduce_triplet,
    replay_heal_log,
    switch_parity,
)
from .flow import (
    ErgodicComponent,
    ErgodicDecomposition,
    FlowMode,
    Trajectory,
    ergodic_components,
    geodesic_distance,
    geodesic_step,
    is_ergodic,
    trajectory,
    undirected_orbit_count,
)
from .refine import (
    RefinementMove,
    barycentric_refine,
    double_edge_refine,
    edge_contract,
    edge_refine,
)
from .rng import Rng
from . import fixtures

__version__ = "0.1.0"

__all__ = [
    "BadParamsError",
    "BallBudgetExhausted",
    "BallHealLog",
    "BallMove",
    "BallRefused",
    "BallSuccess",
    "Coloring",
    "ColoringConflictError",
    "CurvatureLedger",
    "CutBudgetExceededError",
    "DanglingEndpointError",
    "ErgodicComponent",
    "ErgodicDecomposition",
    "EulerizerError",
    "FlowMode",
    "Graph",
    "HealLog",
    "HealStep",
    "LocalGeometryTooNarrowError",
    "NotABallError",
    "NotAnEdgeError",
    "NotASurfaceError",
    "NotClosed2GraphError",
    "NotCycleOrPathError",
    "OddInteriorVertexError",
    "PreconditionViolatedError",
    "RefinementMove",
    "Rng",
    "SelfLoopError",
    "SurfaceReport",
    "SurfaceType",
    "Trajectory",
    "UnknownVertexError",
    "VertexClass",
    "VertexKind",
    "antipodal",
    "barycentric_refine",
    "boundary_period",
    "build_graph",
    "classify_surface",
    "classify_vertex",
    "color3",
    "curvature_ledger",
    "cycle_order",
    "double_edge_refine",
    "dual_sphere",
    "edge_contract",
    "edge_refine",
    "ergodic_components",
    "eulerize_ball",
    "eulerize_closed",
    "fisk_adjacency_check",
    "fixtures",
    "geodesic_distance",
    "geodesic_step",
    "is_cycle_graph",
    "is_ergodic",
    "is_path_graph",
    "local_finisher",
    "normalize_edge",
    "odd_vertices",
    "path_order",
    "plan_first_cut_ball",
    "plan_first_cut_closed",
    "reduce_triplet",
    "replay_heal_log",
    "switch_parity",
    "trajectory",
    "undirected_orbit_count",
    "unit_sphere",
]
