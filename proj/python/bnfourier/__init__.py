"""Fourier and information measures of Boolean functions and feed-forward Boolean networks."""

from ._core import (
    BoolFn,
    CapExceeded,
    CollapsedNetwork,
    InputError,
    Network,
    ProductDist,
    Spectrum,
    avg_sensitivity,
    collapse,
    cond_entropy,
    determinative_power,
    entropy,
    entropy_bounds,
    influence,
    mutual_information,
    parse_network,
    run_selftest,
    sensitivity_scatter,
    transform,
    truth_table,
    uncertainty_curve,
    unateness,
)

__all__ = [
    "BoolFn",
    "CapExceeded",
    "CollapsedNetwork",
    "InputError",
    "Network",
    "ProductDist",
    "Spectrum",
    "avg_sensitivity",
    "collapse",
    "cond_entropy",
    "determinative_power",
    "entropy",
    "entropy_bounds",
    "influence",
    "mutual_information",
    "parse_network",
    "run_selftest",
    "sensitivity_scatter",
    "transform",
    "truth_table",
    "uncertainty_curve",
    "unateness",
]
