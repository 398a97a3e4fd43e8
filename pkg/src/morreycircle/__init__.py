"""Morrey-space functionals of piecewise-constant functions on the unit circle."""

from .circle_step import (
    Arc,
    DistributionSummary,
    StepFunction,
    constant,
    decreasing_rearrangement,
    distribution,
    equimeasurable,
    indicator,
    integral_p,
    make_step,
    wrap_angle,
)
from .counterexample import (
    BoundedValue,
    CounterexampleParams,
    IndexBounds,
    arc_index_bounds,
    build_f,
    build_g,
    divergence_lower_bound,
    f_prefix_ratio,
    g_ratio_upper_bound,
    gamma_arc,
    gamma_index_range,
    measure_lower_bound_check,
    phi,
    phi_sup,
    validate_params,
)
from .io import load_step_function, save_step_function
from .morrey import (
    MorreyParams,
    NormResult,
    morrey_norm_exact,
    morrey_norm_grid,
    morrey_ratio,
    sup_over_prefix_arcs,
)

__all__ = [
    "Arc",
    "BoundedValue",
    "CounterexampleParams",
    "DistributionSummary",
    "IndexBounds",
    "MorreyParams",
    "NormResult",
    "StepFunction",
    "arc_index_bounds",
    "build_f",
    "build_g",
    "constant",
    "decreasing_rearrangement",
    "distribution",
    "divergence_lower_bound",
    "equimeasurable",
    "f_prefix_ratio",
    "g_ratio_upper_bound",
    "gamma_arc",
    "gamma_index_range",
    "indicator",
    "integral_p",
    "load_step_function",
    "make_step",
    "measure_lower_bound_check",
    "morrey_norm_exact",
    "morrey_norm_grid",
    "morrey_ratio",
    "phi",
    "phi_sup",
    "save_step_function",
    "sup_over_prefix_arcs",
    "validate_params",
    "wrap_angle",
]

__version__ = "0.1.0"
