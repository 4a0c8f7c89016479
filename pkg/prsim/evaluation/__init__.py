from prsim.evaluation.harness import (
    SWEEP_HEADER,
    SweepRow,
    SweepSettings,
    evaluate_queries,
    random_sources,
    sweep_degree,
    sweep_gamma,
    sweep_point,
    sweep_scale,
    write_sweep_csv,
)
from prsim.evaluation.metrics import (
    EvalReport,
    EvalRow,
    avg_error_at_k,
    build_pool,
    precision_at_k,
    top_by,
)
from prsim.evaluation.oracles import (
    ExactSimRank,
    default_iterations,
    exact_eta,
    exact_simrank,
    formula_simrank,
    ground_truth_pair_count,
    mc_pair_simrank,
    mc_single_source,
)

__all__ = (
    "ExactSimRank",
    "default_iterations",
    "exact_simrank",
    "exact_eta",
    "formula_simrank",
    "mc_pair_simrank",
    "mc_single_source",
    "ground_truth_pair_count",
    "EvalReport",
    "EvalRow",
    "build_pool",
    "top_by",
    "avg_error_at_k",
    "precision_at_k",
    "evaluate_queries",
    "random_sources",
    "SweepSettings",
    "SWEEP_HEADER",
    "SweepRow",
    "sweep_point",
    "sweep_gamma",
    "sweep_scale",
    "sweep_degree",
    "write_sweep_csv",
)
