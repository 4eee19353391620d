"""End-to-end numeric extraction of a_0..a_3 on the ball."""

from __future__ import annotations

from dataclasses import dataclass

from .fit import CoefficientExtract, extract_coefficients, geometric_grid
from .heat import DEFAULT_CUTOFF, BallConfig, HeatTraceSample, SmearedF, smeared_heat_trace
from .zeros import ZeroTable

DEFAULT_T_HI = 0.0125
DEFAULT_K_FIT = 5


@dataclass(frozen=True)
class NumericRun:
    m: int
    samples: tuple[HeatTraceSample, ...]
    extract: CoefficientExtract
    zeros: ZeroTable


def numeric_extraction(
    m: int,
    t_lo: float | None = None,
    t_hi: float = DEFAULT_T_HI,
    cutoff: float = DEFAULT_CUTOFF,
    k_fit: int = DEFAULT_K_FIT,
    F: SmearedF | None = None,
    zeros: ZeroTable | None = None,
) -> NumericRun:
    """Sample K(t) on a sqrt(2)-geometric grid and fit a_0..a_3.

    ``t_lo`` defaults to the smallest t the Bessel range allows.
    """
    cfg = BallConfig(m)
    if t_lo is None:
        t_lo = cfg.t_min(cutoff) * (1 + 1e-9)
    grid = geometric_grid(t_lo, t_hi)
    mu_max = cfg.mu_max(float(grid[0]), cutoff)
    if zeros is None or zeros.x_max < mu_max:
        zeros = ZeroTable.build(m, mu_max)
    F = F or SmearedF()
    samples = tuple(smeared_heat_trace(cfg, F, float(t), cutoff, zeros) for t in grid)
    return NumericRun(m, samples, extract_coefficients(list(samples), m, k_fit), zeros)
