"""N-queens optimization workbench: cost model, solvers, tuning helpers."""

from ._core import (
    __version__,
    algorithms,
    default_config,
    evaluate_cost,
    max_cost,
    reference_config,
    reference_sizes,
    self_check,
    solve,
    topsis_rank,
    tuning_factors,
)

__all__ = [
    "__version__",
    "algorithms",
    "default_config",
    "evaluate_cost",
    "max_cost",
    "reference_config",
    "reference_sizes",
    "self_check",
    "solve",
    "topsis_rank",
    "tuning_factors",
]
