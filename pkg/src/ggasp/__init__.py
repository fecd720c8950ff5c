"""Group activity selection on social networks: model, stability
verifiers, exact solvers, and hardness-reduction generators."""

from .clique_flow import FlowNetwork, SizeVector, solve_ns_clique
from .core_algo import solve_core_connected_enum, solve_core_single_activity
from .generators import (
    ReductionMetadata,
    gen_example,
    gen_random,
    make_copyable,
    reduce_clique_to_ns,
    reduce_hitting_set_to_core,
    reduce_mcc_to_ns,
    witness_assignment,
)
from .graph import (
    Topology,
    classify_topology,
    connected_prefix,
    enumerate_connected_subsets,
    is_connected_subset,
)
from .is_tree import IsTreeTable, solve_is_copyable_acyclic, solve_is_forest
from .model import (
    VOID,
    Alternative,
    Assignment,
    BudgetExceeded,
    Instance,
    InstanceError,
    PreferenceOrder,
    UnsupportedTopology,
    approves,
    compare,
    equivalent,
    is_copyable,
    validate_instance,
)
from .ns_tree import NsTreeTable, solve_ns_forest, solve_ns_tree
from .oracle import enumerate_feasible_ir, oracle_find
from .stability import (
    CR,
    IS,
    NS,
    CoreBlock,
    InfeasibleGroup,
    IrViolation,
    IsDeviation,
    NsDeviation,
    StabilityWitness,
    check_feasible,
    check_ir,
    find_core_block,
    find_is_deviation,
    find_ns_deviation,
    is_valid_is_deviation,
    is_valid_ns_deviation,
    verify,
)

__all__ = [
    "VOID", "Alternative", "Assignment", "BudgetExceeded", "Instance",
    "InstanceError", "PreferenceOrder", "UnsupportedTopology",
    "approves", "compare", "equivalent", "is_copyable", "validate_instance",
    "Topology", "classify_topology", "connected_prefix",
    "enumerate_connected_subsets", "is_connected_subset",
    "NS", "IS", "CR", "StabilityWitness", "NsDeviation", "IsDeviation",
    "CoreBlock", "IrViolation", "InfeasibleGroup",
    "check_feasible", "check_ir", "find_core_block", "find_is_deviation",
    "find_ns_deviation", "is_valid_is_deviation", "is_valid_ns_deviation",
    "verify",
    "enumerate_feasible_ir", "oracle_find",
    "NsTreeTable", "solve_ns_forest", "solve_ns_tree",
    "IsTreeTable", "solve_is_copyable_acyclic", "solve_is_forest",
    "FlowNetwork", "SizeVector", "solve_ns_clique",
    "solve_core_connected_enum", "solve_core_single_activity",
    "ReductionMetadata", "gen_example", "gen_random", "make_copyable",
    "reduce_clique_to_ns", "reduce_hitting_set_to_core", "reduce_mcc_to_ns",
    "witness_assignment",
]
