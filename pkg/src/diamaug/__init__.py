"""Budgeted graph diameter reduction by edge insertion.

Solvers insert non-edges of bounded total cost into a weighted graph to
shrink its diameter, with proven cost/quality guarantees; brute-force
oracles, instance generators, and a CLI round out the toolkit.
"""

from .budget_paths import (
    BoundedCostDistances,
    LayeredDigraph,
    NoPathError,
    PathSource,
    PathWitness,
    SourceDistances,
    apsp_b,
    build_layered_digraph,
    reconstruct_path,
    sssp_b,
)
from .clustering import ClusterCenters, greedy_centers
from .core import (
    INF,
    Augmentation,
    Dist,
    InstanceError,
    Pair,
    PairTable,
    WeightedInstance,
    augment,
    diameter,
    ensure_valid,
    sssp,
    validate,
)
from .formats import (
    FormatError,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from .fpt import (
    CenterTree,
    FptOutcome,
    HeightTable,
    InfeasibleEntryError,
    fpt_solve,
    reconstruct_tree,
    solve_height_table,
)
from .generators import (
    ReductionError,
    ReductionLayout,
    SetCoverInstance,
    gen_random,
    reduce_setcover,
    reduce_setcover_multicopy,
)
from .oracle import (
    ExactResult,
    OracleLimitError,
    diameter2_feasible,
    exact_optimum,
    has_cover,
    path_oracle,
    span_height_oracle,
    span_height_profile,
)
from .report import RunReport, instance_digest
from .unit_cost import (
    cluster_spanning_mst,
    ensure_unit_cost,
    pairwise_centers,
    star_centers,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Augmentation",
    "BoundedCostDistances",
    "CenterTree",
    "ClusterCenters",
    "Dist",
    "ExactResult",
    "FormatError",
    "FptOutcome",
    "HeightTable",
    "InfeasibleEntryError",
    "InstanceError",
    "LayeredDigraph",
    "NoPathError",
    "OracleLimitError",
    "Pair",
    "PairTable",
    "PathSource",
    "PathWitness",
    "ReductionError",
    "ReductionLayout",
    "RunReport",
    "SetCoverInstance",
    "SourceDistances",
    "WeightedInstance",
    "apsp_b",
    "augment",
    "build_layered_digraph",
    "cluster_spanning_mst",
    "diameter",
    "diameter2_feasible",
    "ensure_unit_cost",
    "ensure_valid",
    "exact_optimum",
    "fpt_solve",
    "gen_random",
    "greedy_centers",
    "has_cover",
    "instance_digest",
    "parse_instance",
    "parse_solution",
    "path_oracle",
    "pairwise_centers",
    "reconstruct_path",
    "reconstruct_tree",
    "reduce_setcover",
    "reduce_setcover_multicopy",
    "serialize_instance",
    "serialize_solution",
    "solve_height_table",
    "span_height_oracle",
    "span_height_profile",
    "sssp",
    "sssp_b",
    "star_centers",
    "validate",
]
