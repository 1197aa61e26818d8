"""mingle: equilibrium solvers and Monte Carlo simulation for strategic
socializing on random networks.

Agents choose how intensely to mingle within a group; pairwise links then
realize independently with probabilities driven by both sides' intensities.
The package solves the symmetric equilibrium and the planner's efficient
intensity, classifies the low/high-intensity regimes, handles privately
known heterogeneous costs, samples the induced random graphs reproducibly,
and measures the realized networks (connectivity, diameter, giant component,
severing stability).
"""

from ._backend import BACKEND_NAME
from .alpha import AlphaSweepRow, alpha_sweep, solve_alpha_equilibrium
from .equilibrium import (
    AsymptoticDegree,
    EquilibriumSolution,
    asymptotic_degree,
    best_response_utility,
    classify_regime,
    dp_dc,
    dp_dv1,
    dp_dv2,
    foc_rhs,
    solve_symmetric_equilibrium,
    v2_sign_threshold,
)
from .graphstats import (
    GraphStats,
    StabilityReport,
    connected_components,
    count_isolated_triangles,
    diameter,
    giant_component_fraction,
    network_stats,
    unilateral_stability,
)
from .hetero import (
    CostDistribution,
    HeteroEquilibrium,
    SociabilityMoments,
    TauComparison,
    hetero_foc_rhs,
    hetero_threshold,
    lemma_inequality_check,
    low_regime_degree_limit,
    mps_tau_comparative,
    solve_hetero_equilibrium,
)
from .model import (
    InteractionKernel,
    IntensityProfile,
    expected_fof_count,
    expected_friend_count,
    expected_utility,
    link_probability,
    symmetric_expected_utility,
)
from .params import ModelParams, Regime, RegimeLabel
from .planner import (
    PlannerSolution,
    WelfareGap,
    classify_efficiency_regime,
    planner_foc_rhs,
    solve_efficient,
    welfare_gap,
)
from .sampler import (
    Network,
    RNG_ALGORITHM,
    SampleBatchSpec,
    mix_seed,
    read_edge_list,
    sample_batch,
    sample_equilibrium_network,
    sample_gnp,
    sample_network,
    write_edge_list,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSweepRow",
    "AsymptoticDegree",
    "BACKEND_NAME",
    "CostDistribution",
    "EquilibriumSolution",
    "GraphStats",
    "HeteroEquilibrium",
    "InteractionKernel",
    "IntensityProfile",
    "ModelParams",
    "Network",
    "PlannerSolution",
    "Regime",
    "RegimeLabel",
    "RNG_ALGORITHM",
    "SampleBatchSpec",
    "SociabilityMoments",
    "StabilityReport",
    "TauComparison",
    "WelfareGap",
    "alpha_sweep",
    "asymptotic_degree",
    "best_response_utility",
    "classify_efficiency_regime",
    "classify_regime",
    "connected_components",
    "count_isolated_triangles",
    "diameter",
    "dp_dc",
    "dp_dv1",
    "dp_dv2",
    "expected_fof_count",
    "expected_friend_count",
    "expected_utility",
    "foc_rhs",
    "giant_component_fraction",
    "hetero_foc_rhs",
    "hetero_threshold",
    "lemma_inequality_check",
    "link_probability",
    "low_regime_degree_limit",
    "mix_seed",
    "mps_tau_comparative",
    "network_stats",
    "planner_foc_rhs",
    "read_edge_list",
    "sample_batch",
    "sample_equilibrium_network",
    "sample_gnp",
    "sample_network",
    "solve_alpha_equilibrium",
    "solve_efficient",
    "solve_hetero_equilibrium",
    "solve_symmetric_equilibrium",
    "symmetric_expected_utility",
    "unilateral_stability",
    "v2_sign_threshold",
    "welfare_gap",
    "write_edge_list",
]
