"""Numerical checks of entropic uncertainty relations for binned
position/momentum distributions.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (
    BoundCheck,
    BoxScenarioParams,
    BoxState,
    CompactifiedBins,
    DomainError,
    EntropyOrderPair,
    FamilySpec,
    GaussianScenarioParams,
    GaussianState,
    GridTooSmall,
    HalfLineBins,
    InvalidScenario,
    NonconvergedQuadrature,
    Optimum,
    ParameterRange,
    ProbabilityVector,
    SampledState,
    Space,
    UniformBins,
    ViolationReport,
    bin_probabilities,
    check_norm_inequality,
    compactified_jacobian,
    compactify,
    conjugate_order,
    decompactify,
    discrete_fourier_partner,
    eta,
    eta_compactified,
    gaussian_two_bin_entropy_sum,
    interval_probability,
    minimize_entropy_sum,
    momentum_density,
    norm_sum,
    position_density,
    renyi,
    renyi_bound,
    renyi_tail_bound,
    run_box_counterexample,
    run_gaussian_counterexample,
    run_renyi_ur_check,
    shannon,
    shannon_bound,
    shannon_tail_bound,
    tsallis,
    violation_threshold,
    ww_bound,
    ww_offset,
)

__version__ = "1.0.0"

__all__ = [
    "BoundCheck",
    "BoxScenarioParams",
    "BoxState",
    "CompactifiedBins",
    "DomainError",
    "EntropyOrderPair",
    "FamilySpec",
    "GaussianScenarioParams",
    "GaussianState",
    "GridTooSmall",
    "HalfLineBins",
    "InvalidScenario",
    "NonconvergedQuadrature",
    "Optimum",
    "ParameterRange",
    "ProbabilityVector",
    "SampledState",
    "Space",
    "UniformBins",
    "ViolationReport",
    "bin_probabilities",
    "check_norm_inequality",
    "compactified_jacobian",
    "compactify",
    "conjugate_order",
    "decompactify",
    "discrete_fourier_partner",
    "eta",
    "eta_compactified",
    "gaussian_two_bin_entropy_sum",
    "interval_probability",
    "minimize_entropy_sum",
    "momentum_density",
    "norm_sum",
    "position_density",
    "renyi",
    "renyi_bound",
    "renyi_tail_bound",
    "run_box_counterexample",
    "run_gaussian_counterexample",
    "run_renyi_ur_check",
    "shannon",
    "shannon_bound",
    "shannon_tail_bound",
    "tsallis",
    "violation_threshold",
    "ww_bound",
    "ww_offset",
]
