"""Anti-Kekule numbers of connected cubic graphs."""

from .graph_core import (
    BipartitionResult,
    Graph,
    bipartition,
    boundary,
    bridges,
    build,
    components,
    is_connected,
    is_cubic,
    odd_component_count,
)
from .matching import (
    HallWitness,
    Matching,
    TutteWitness,
    brute_force_maximum_matching,
    hall_witness,
    has_perfect_matching,
    maximum_matching,
    tutte_witness,
)
from .search import (
    AntiKekuleReport,
    CandidateSet,
    candidate_from_bridge,
    candidate_from_triangle,
    candidate_from_vertex,
    enumerate_smallest,
    is_anti_kekule,
    report_document,
    theorem_bounds,
)
from .generators import FamilySpec, corpus, generate

__all__ = [
    "AntiKekuleReport",
    "BipartitionResult",
    "CandidateSet",
    "FamilySpec",
    "Graph",
    "HallWitness",
    "Matching",
    "TutteWitness",
    "bipartition",
    "boundary",
    "bridges",
    "brute_force_maximum_matching",
    "build",
    "candidate_from_bridge",
    "candidate_from_triangle",
    "candidate_from_vertex",
    "components",
    "corpus",
    "enumerate_smallest",
    "generate",
    "hall_witness",
    "has_perfect_matching",
    "is_anti_kekule",
    "is_connected",
    "is_cubic",
    "maximum_matching",
    "odd_component_count",
    "report_document",
    "theorem_bounds",
    "tutte_witness",
]

__version__ = "0.1.0"
