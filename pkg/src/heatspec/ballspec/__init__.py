"""Spectral oracle on the unit ball: Bessel zeros, heat traces, fits and exact residues."""

from .bessel import BesselDomainError, bessel_j, bessel_j_prime
from .fit import CoefficientExtract, HeatTraceExpansion, IllConditionedFitError, extract_coefficients, geometric_grid
from .heat import (
    BallConfig,
    CutoffInfeasibleError,
    HeatTraceSample,
    SmearedF,
    TruncationError,
    heat_trace,
    smeared_heat_trace,
)
from .residues import (
    a3_ball_closed_form,
    ball_coefficient,
    listed_residues,
    radial_integral_r3,
    radial_integral_r5,
    residue_pipeline,
    smeared_a3_exact,
    table_a3_ball,
    theorem_ball_coefficients,
    theorem_smeared_a3,
)
from .zeros import CacheError, ZeroTable, bessel_zeros, load_or_build

__all__ = [
    "BesselDomainError",
    "bessel_j",
    "bessel_j_prime",
    "CoefficientExtract",
    "HeatTraceExpansion",
    "IllConditionedFitError",
    "extract_coefficients",
    "geometric_grid",
    "BallConfig",
    "CutoffInfeasibleError",
    "HeatTraceSample",
    "SmearedF",
    "TruncationError",
    "heat_trace",
    "smeared_heat_trace",
    "a3_ball_closed_form",
    "ball_coefficient",
    "listed_residues",
    "radial_integral_r3",
    "radial_integral_r5",
    "residue_pipeline",
    "smeared_a3_exact",
    "table_a3_ball",
    "theorem_ball_coefficients",
    "theorem_smeared_a3",
    "CacheError",
    "ZeroTable",
    "bessel_zeros",
    "load_or_build",
]
