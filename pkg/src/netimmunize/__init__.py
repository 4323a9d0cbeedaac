"""netimmunize: budget-k node immunization for undirected graphs.

Pick k nodes whose removal maximally reduces the spectral radius, scored by
(estimated) closed-6-walk counts and selected with a submodular greedy.
"""

from .graph import EdgeListParseError, Graph, LoadReport, load_edge_list, remove_nodes
from .immunize import (EXCLUDED, GreedyState, ImmunizationResult, InfeasibleError,
                       ScoreParams, StepRecord, baseline_select, exhaustive_best_score,
                       greedy1_baseline, greedy_select, marginal_gain, score)
from .sketch import (HashPartition, SummarySketch, WalkEstimates, build_partition,
                     build_summary, default_alpha, estimate_vertex, estimate_walks,
                     identity_partition)
from .spectral import (EigendropReport, PowerIterConfig, SpectralReport, eigendrop,
                       lambda_max, trace_power)
from .walks import (DensePowerCache, SizeCapError, brute_force_cw6, brute_force_cw6_all,
                    exact_cw6_all, exact_cw6_combinatorial, objective_f, objective_g,
                    power_cache)

__version__ = "0.1.0"

__all__ = [
    "EXCLUDED", "DensePowerCache", "EdgeListParseError", "EigendropReport", "Graph",
    "GreedyState", "HashPartition", "ImmunizationResult", "InfeasibleError",
    "LoadReport", "PowerIterConfig", "ScoreParams", "SizeCapError", "SpectralReport",
    "StepRecord", "SummarySketch", "WalkEstimates", "baseline_select", "brute_force_cw6",
    "brute_force_cw6_all", "build_partition", "build_summary", "default_alpha",
    "eigendrop", "estimate_vertex", "estimate_walks", "exact_cw6_all",
    "exact_cw6_combinatorial", "exhaustive_best_score", "greedy1_baseline",
    "greedy_select", "identity_partition", "lambda_max", "load_edge_list",
    "marginal_gain", "objective_f", "objective_g", "power_cache", "remove_nodes",
    "score", "trace_power",
]
