"""One-dimensional global minimization via bracket contraction.

The heavy lifting lives in the `_core` extension module; this package just
re-exports its surface.
"""

from ._core import (
    BaselineResult,
    Error,
    Interval,
    LipschitzEstimate,
    Objective,
    OracleResult,
    PointRecord,
    SuGDResult,
    TraceRecord,
    alpha_max,
    default_domain,
    estimate_lipschitz,
    eval_expression,
    finite_diff,
    global_gradient,
    grid_oracle,
    iteration_bound,
    minimize_sugd,
    registry_names,
    run_baseline,
)

__all__ = [
    "BaselineResult",
    "Error",
    "Interval",
    "LipschitzEstimate",
    "Objective",
    "OracleResult",
    "PointRecord",
    "SuGDResult",
    "TraceRecord",
    "alpha_max",
    "default_domain",
    "estimate_lipschitz",
    "eval_expression",
    "finite_diff",
    "global_gradient",
    "grid_oracle",
    "iteration_bound",
    "minimize_sugd",
    "registry_names",
    "run_baseline",
]
