"""Heat trace of the Dirac Laplacian with spectral conditions on the unit ball.

The spectrum is {j_{p,k}^2} with p = n + m/2 - 1 and degeneracy 4 d_n(m), so

    K(t) = 4 sum_n d_n(m) sum_k exp(-t j_{p,k}^2).

Zeros above mu_max = sqrt(j_min^2 + cutoff/t) are dropped, j_min being the
lowest zero, so the cutoff is relative to the leading term at every t.  Per order the dropped part
is at most exp(-t X^2) / (1 - exp(-2 pi t X)) with X = max(mu_max, p), since
zeros of J_p exceed p and are more than pi apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..barnes import multiplicity, spinor_dimension
from .bessel import NU_MAX
from .zeros import ZeroTable, bessel_zeros

DEFAULT_CUTOFF = 48.0
TAIL_REL_TOL = 1e-15


class CutoffInfeasibleError(ValueError):
    """The requested t needs zeros beyond the supported Bessel range."""


class TruncationError(RuntimeError):
    """The tail bound is too large relative to the sampled value."""


@dataclass(frozen=True)
class BallConfig:
    m: int

    def __post_init__(self):
        if self.m % 2 or self.m < 4:
            raise ValueError(f"ball spectra need an even m >= 4, got {self.m}")

    @property
    def d_s(self) -> int:
        return spinor_dimension(self.m)

    def p_of_n(self, n: int) -> int:
        return n + self.m // 2 - 1

    def degeneracy(self, n: int) -> int:
        return 4 * multiplicity(n, self.m)

    @property
    def lowest_zero(self) -> float:
        p = self.p_of_n(0)
        return bessel_zeros(p, p + 10.0)[0]

    def mu_max(self, t: float, cutoff: float = DEFAULT_CUTOFF) -> float:
        return math.sqrt(self.lowest_zero**2 + cutoff / t)

    def t_min(self, cutoff: float = DEFAULT_CUTOFF) -> float:
        return cutoff / (NU_MAX**2 - self.lowest_zero**2)


@dataclass(frozen=True)
class HeatTraceSample:
    t: float
    value: float
    tail_bound: float


@dataclass(frozen=True)
class SmearedF:
    """F(r) = f0 + f1 r^2 + f2 r^4 on the unit ball."""

    f0: float = 1.0
    f1: float = 0.0
    f2: float = 0.0

    @property
    def F_boundary(self):
        return self.f0 + self.f1 + self.f2

    @property
    def F_m(self):
        # inward normal derivative at r = 1
        return -(2 * self.f1 + 4 * self.f2)

    @property
    def F_mm(self):
        return 2 * self.f1 + 12 * self.f2

    def is_unit(self) -> bool:
        return self.f0 == 1 and self.f1 == 0 and self.f2 == 0


def r3_weight(p, mu):
    return (2 * p * p + 3 * p + 1) / (3 * mu * mu) + 1.0 / 3.0


def r5_weight(p, mu):
    mu2 = mu * mu
    return (8 * p**4 + 20 * p**3 - 20 * p - 8) / (15 * mu2 * mu2) + (4 * p * p + 10 * p + 4) / (15 * mu2) + 0.2


def _zero_table(cfg: BallConfig, mu_max: float, zeros: ZeroTable | None) -> ZeroTable:
    if zeros is None:
        return ZeroTable.build(cfg.m, mu_max)
    if zeros.m != cfg.m:
        raise ValueError("zero table built for another dimension")
    if zeros.x_max < mu_max:
        raise ValueError(f"zero table reaches {zeros.x_max}, need {mu_max}")
    return zeros


def _trace(cfg: BallConfig, t: float, cutoff: float, zeros: ZeroTable | None, F: SmearedF | None) -> HeatTraceSample:
    if not t > 0:
        raise ValueError("t must be positive")
    mu_max = cfg.mu_max(t, cutoff)
    if mu_max > NU_MAX:
        raise CutoffInfeasibleError(
            f"t={t:g} with cutoff {cutoff:g} needs zeros up to {mu_max:.1f} > {NU_MAX:g}"
        )
    table = _zero_table(cfg, mu_max, zeros)
    parts = []
    n = 0
    while cfg.p_of_n(n) <= mu_max:
        p = cfg.p_of_n(n)
        z = table.zeros.get(p, np.empty(0))
        z = z[z <= mu_max]
        w = np.exp(-t * z * z)
        if F is not None:
            w = w * (float(F.f0) + float(F.f1) * r3_weight(p, z) + float(F.f2) * r5_weight(p, z))
        parts.append(cfg.degeneracy(n) * math.fsum(w))
        n += 1
    value = math.fsum(parts)
    tail = _tail_bound(cfg, t, mu_max, F)
    if tail > TAIL_REL_TOL * abs(value):
        raise TruncationError(f"tail bound {tail:.3g} exceeds {TAIL_REL_TOL:g} x |K({t:g})|")
    return HeatTraceSample(t, value, tail)


def _tail_bound(cfg: BallConfig, t: float, mu_max: float, F: SmearedF | None) -> float:
    total = 0.0
    n = 0
    while True:
        p = cfg.p_of_n(n)
        X = max(mu_max, float(p))
        term = cfg.degeneracy(n) * math.exp(-t * X * X) / -math.expm1(-2 * math.pi * t * X)
        if F is not None:
            # radial weights decrease in mu, so their value at X bounds them
            term *= abs(float(F.f0)) + abs(float(F.f1)) * r3_weight(p, X) + abs(float(F.f2)) * r5_weight(p, X)
        total += term
        if p > mu_max and term <= 1e-30 * total:
            return total
        n += 1


def heat_trace(cfg: BallConfig, t: float, cutoff: float = DEFAULT_CUTOFF, zeros: ZeroTable | None = None) -> HeatTraceSample:
    return _trace(cfg, t, cutoff, zeros, None)


def smeared_heat_trace(
    cfg: BallConfig, F: SmearedF, t: float, cutoff: float = DEFAULT_CUTOFF, zeros: ZeroTable | None = None
) -> HeatTraceSample:
    """Heat trace with each eigenvalue weighted by its radial integral of F."""
    return _trace(cfg, t, cutoff, zeros, F)
