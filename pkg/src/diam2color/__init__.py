"""List 3-coloring on diameter-two graphs with forbidden induced cycles.

The package bundles an exact polynomial solver for (C4, Cs)-free inputs, one
for (C3, C7)-free inputs, the linear-time two-list subroutine they bottom
out in, a brute-force oracle with named and random instance generators, and
a batch CLI.
"""

from .errors import (
    CertificateInvalid,
    HasInducedCycle,
    InternalInvariantBroken,
    MalformedInstance,
    NotDiameterTwo,
    ParseError,
    PartitionLeftover,
    PreconditionViolated,
    RejectionBudgetExhausted,
    SelfLoop,
    SolverError,
    StructureViolation,
    TooLarge,
    VertexOutOfRange,
    Violation,
)
from .graph import (
    Graph,
    InducedCycleCertificate,
    build_graph,
    diameter,
    find_induced_c5,
    find_induced_cycle,
    is_induced_cycle,
)
from .oracle import (
    GeneratorSpec,
    brute_force,
    complete_graph,
    generate,
    grotzsch_graph,
    pentagon_graph,
    petersen_graph,
    verify_coloring,
)
from .propagation import (
    COLOR_A,
    COLOR_B,
    COLOR_C,
    FULL_LIST,
    PALETTE,
    ListAssignment,
    PropagationOutcome,
    Status,
    narrow_diamond,
    narrow_square,
    narrow_triangle,
    propagate_singleton,
    propagate_to_fixpoint,
    vertex_with_colored_neighborhood,
)
from .results import SolveResult, Telemetry
from .solver_c3c7 import AnchorPartition, decide_by_branching, partition_by_anchor, partition_violations, solve_c3c7
from .solver_c4cs import (
    AlternatingPath,
    C5Decomposition,
    branch_on_components,
    decompose_around_c5,
    grow_chain_or_branch,
    hole_from_chain,
    solve_c4cs,
    structure_violations,
)
from .twolist import solve_two_list

__all__ = [
    "AlternatingPath",
    "AnchorPartition",
    "C5Decomposition",
    "CertificateInvalid",
    "COLOR_A",
    "COLOR_B",
    "COLOR_C",
    "FULL_LIST",
    "GeneratorSpec",
    "Graph",
    "HasInducedCycle",
    "InducedCycleCertificate",
    "InternalInvariantBroken",
    "ListAssignment",
    "MalformedInstance",
    "NotDiameterTwo",
    "PALETTE",
    "ParseError",
    "PartitionLeftover",
    "PreconditionViolated",
    "PropagationOutcome",
    "RejectionBudgetExhausted",
    "SelfLoop",
    "SolveResult",
    "SolverError",
    "Status",
    "StructureViolation",
    "Telemetry",
    "TooLarge",
    "VertexOutOfRange",
    "Violation",
    "branch_on_components",
    "brute_force",
    "build_graph",
    "complete_graph",
    "decide_by_branching",
    "decompose_around_c5",
    "diameter",
    "find_induced_c5",
    "find_induced_cycle",
    "generate",
    "grotzsch_graph",
    "grow_chain_or_branch",
    "hole_from_chain",
    "is_induced_cycle",
    "narrow_diamond",
    "narrow_square",
    "narrow_triangle",
    "partition_by_anchor",
    "partition_violations",
    "pentagon_graph",
    "petersen_graph",
    "propagate_singleton",
    "propagate_to_fixpoint",
    "solve_c3c7",
    "solve_c4cs",
    "solve_two_list",
    "structure_violations",
    "verify_coloring",
    "vertex_with_colored_neighborhood",
]
