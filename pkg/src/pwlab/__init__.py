"""Numerical laboratory for composition operators with affine symbols on
bandlimited function spaces.

The package models a bandlimited function by its samples on the critical
lattice, applies composition operators C_phi f = f(cz + d) in that sampling
picture and in the frequency picture, and checks the resulting norms,
spectra, orbit growth, and dynamical classifications against closed forms.
"""

from .core import (
    OVERFLOW_EXPONENT,
    AdmissibilityError,
    AffineSymbol,
    BandwidthMismatchError,
    ConvergenceError,
    KernelPoint,
    OverflowGuardError,
    PwFunction,
    PwLabError,
    adjoint_on_kernel,
    compose_apply,
    composed_inner_product,
    composed_norm,
    grid,
    inner_product,
    kernel_eval,
    kernel_norm_sq,
    lincomb,
    norm,
    pw_eval,
    reproduce,
    scaled,
)
from .dynamics import (
    ExpansivityCertificate,
    GrowthBound,
    OrbitTrace,
    PropertyReport,
    Pseudotrajectory,
    build_pseudotrajectory,
    cesaro_averages,
    cesaro_lower_envelope,
    classify,
    expansivity_certificate,
    growth_constant_second,
    growth_constant_third,
    orbit_norms,
    orbit_norms_resampled,
    shadowing_divergence,
    translation_growth_envelope,
)
from .fourier import (
    L2Function,
    WeightedCompositionData,
    from_l2,
    l2_grid,
    multiplication_norm,
    to_l2,
    weighted_compose_adjoint,
    weighted_compose_apply,
)
from .probes import node_function, rough_probe, smooth_probe, spectral_pulse
from .spectral import (
    OperatorMatrix,
    SpectrumDescriptor,
    build_matrix,
    closed_range_fact,
    compactness_witness,
    isometry_check,
    norm_bounds,
    norm_witness_probe,
    operator_norm_estimate,
    radius_bracket,
    spectral_radius_closed,
    spectral_radius_estimate,
    spectrum_closed_form,
)
from .verify import DEFAULT_SEED, CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "OVERFLOW_EXPONENT",
    "AdmissibilityError",
    "AffineSymbol",
    "BandwidthMismatchError",
    "CheckResult",
    "ConvergenceError",
    "DEFAULT_SEED",
    "ExpansivityCertificate",
    "GrowthBound",
    "KernelPoint",
    "L2Function",
    "OperatorMatrix",
    "OrbitTrace",
    "OverflowGuardError",
    "PropertyReport",
    "Pseudotrajectory",
    "PwFunction",
    "PwLabError",
    "SpectrumDescriptor",
    "WeightedCompositionData",
    "adjoint_on_kernel",
    "build_matrix",
    "build_pseudotrajectory",
    "cesaro_averages",
    "cesaro_lower_envelope",
    "classify",
    "closed_range_fact",
    "compactness_witness",
    "compose_apply",
    "composed_inner_product",
    "composed_norm",
    "expansivity_certificate",
    "from_l2",
    "grid",
    "growth_constant_second",
    "growth_constant_third",
    "inner_product",
    "isometry_check",
    "kernel_eval",
    "kernel_norm_sq",
    "l2_grid",
    "lincomb",
    "multiplication_norm",
    "node_function",
    "norm",
    "norm_bounds",
    "norm_witness_probe",
    "operator_norm_estimate",
    "orbit_norms",
    "orbit_norms_resampled",
    "pw_eval",
    "radius_bracket",
    "reproduce",
    "rough_probe",
    "run_all",
    "scaled",
    "shadowing_divergence",
    "smooth_probe",
    "spectral_pulse",
    "spectral_radius_closed",
    "spectral_radius_estimate",
    "spectrum_closed_form",
    "to_l2",
    "translation_growth_envelope",
    "weighted_compose_adjoint",
    "weighted_compose_apply",
]
