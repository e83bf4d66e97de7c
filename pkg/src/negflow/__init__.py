"""Exact rational analysis of negative-weight circulation polyhedra.

The package enumerates simple cycles of a weighted digraph, derives the
vertices and extreme directions of the associated flow polyhedron from
them, cross-checks both against a brute-force support-enumeration
oracle, and carries a CNF-to-graph construction under which the vertex
set collapses to a trivial family exactly on unsatisfiable inputs.
All arithmetic is over `fractions.Fraction`; nothing is floating point.
"""
from .characterize import (
    CharacterizationReport,
    DEFAULT_CYCLE_CAP,
    direction_from_two_cycle,
    direction_from_zero_cycle,
    directions_from_cycles,
    verify_theorem1,
    vertex_from_cycle,
    vertices_from_negative_cycles,
)
from .cycles import (
    Cycle,
    CycleDecomposition,
    SignClass,
    TwoCycle,
    TwoCycleShape,
    classify,
    decompose_circulation,
    enumerate_cycles,
    enumerate_two_cycles,
    is_two_cycle,
)
from .errors import (
    CapExceeded,
    DichotomyViolation,
    NegflowError,
    NotACirculation,
    ParseError,
)
from .generators import Lcg, gen_fig1, gen_fig3, gen_random
from .graph import (
    Arc,
    ArcVector,
    Rational,
    WeightedDigraph,
    characteristic_vector,
    parse_arc_vector,
    parse_graph,
    serialize_arc_vector,
    serialize_graph,
    strongly_connected_components,
    subgraph,
    total_weight,
)
from .polyhedra import (
    DEFAULT_ORACLE_CAP,
    FeasibilityResult,
    HRep,
    VertexSet,
    build_P,
    build_P_prime,
    exact_rank,
    is_feasible_point,
    oracle_certifies_vertex,
    oracle_extreme_directions,
    oracle_vertices,
)
from .reduction import (
    CnfFormula,
    MAX_SAT_VARIABLES,
    Occurrence,
    ReductionArtifact,
    Ve01Report,
    brute_force_sat,
    build_reduction,
    decide_ve01,
    has_long_cycle,
    parse_dimacs_cnf,
    trivial_vertex_family,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcVector",
    "CapExceeded",
    "CharacterizationReport",
    "CnfFormula",
    "Cycle",
    "CycleDecomposition",
    "DEFAULT_CYCLE_CAP",
    "DEFAULT_ORACLE_CAP",
    "DichotomyViolation",
    "FeasibilityResult",
    "HRep",
    "Lcg",
    "MAX_SAT_VARIABLES",
    "NegflowError",
    "NotACirculation",
    "Occurrence",
    "ParseError",
    "Rational",
    "ReductionArtifact",
    "SignClass",
    "TwoCycle",
    "TwoCycleShape",
    "Ve01Report",
    "VertexSet",
    "WeightedDigraph",
    "brute_force_sat",
    "build_P",
    "build_P_prime",
    "build_reduction",
    "characteristic_vector",
    "classify",
    "decide_ve01",
    "decompose_circulation",
    "direction_from_two_cycle",
    "direction_from_zero_cycle",
    "directions_from_cycles",
    "enumerate_cycles",
    "enumerate_two_cycles",
    "exact_rank",
    "gen_fig1",
    "gen_fig3",
    "gen_random",
    "has_long_cycle",
    "is_feasible_point",
    "is_two_cycle",
    "oracle_certifies_vertex",
    "oracle_extreme_directions",
    "oracle_vertices",
    "parse_arc_vector",
    "parse_dimacs_cnf",
    "parse_graph",
    "serialize_arc_vector",
    "serialize_graph",
    "strongly_connected_components",
    "subgraph",
    "total_weight",
    "trivial_vertex_family",
    "verify_theorem1",
    "vertex_from_cycle",
    "vertices_from_negative_cycles",
]
