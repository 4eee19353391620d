"""Uniform large-order expansion of the modified Bessel function I_p(p z).

The Debye polynomials ``u_l(t)`` come from the recursion

    u_{l+1}(t) = t^2 (1 - t^2) u_l'(t) / 2 + (1/8) * int_0^t (1 - 5 s^2) u_l(s) ds

with ``u_0 = 1``, and the cumulant polynomials ``D_q(t)`` are the
coefficients of ``log(1 + sum_l u_l(t) / p^l) = sum_q D_q(t) / p^q``.
Formal series in ``1/p`` are plain lists of :class:`Poly` in ``t`` indexed by
the power of ``1/p``; truncation orders are always explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Poly

T = Poly.variable("t")


@dataclass(frozen=True)
class DebyePolynomial:
    order: int
    poly: Poly


@dataclass(frozen=True)
class CumulantPolynomial:
    order: int
    poly: Poly


def debye_next(u: DebyePolynomial) -> DebyePolynomial:
    """Apply the recursion once: ``u_l -> u_{l+1}`` (integration constant zero)."""
    p = u.poly
    half = Poly.const(Fraction(1, 2), "t")
    lhs = half * T * T * (1 - T * T) * p.derivative()
    rhs = ((1 - 5 * T * T) * p).antiderivative().scale(Fraction(1, 8))
    return DebyePolynomial(u.order + 1, lhs + rhs)


@lru_cache(maxsize=None)
def _debye_list(max_l: int) -> tuple[DebyePolynomial, ...]:
    out = [DebyePolynomial(0, Poly.const(1, "t"))]
    for _ in range(max_l):
        out.append(debye_next(out[-1]))
    return tuple(out)


def debye_polynomials(max_l: int) -> list[DebyePolynomial]:
    """u_0 ... u_max_l."""
    if max_l < 0:
        raise ValueError("max_l must be non-negative")
    return list(_debye_list(max_l))


def _series_mul(a: list[Poly], b: list[Poly], order: int) -> list[Poly]:
    out = [Poly((), "t") for _ in range(order + 1)]
    for i, x in enumerate(a[: order + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def series_log1p(x: list[Poly], order: int) -> list[Poly]:
    """log(1 + X) for a formal series X with zero constant term, to 1/p^order."""
    if x and not x[0].is_zero():
        raise ValueError("series must have zero constant term")
    out = [Poly((), "t") for _ in range(order + 1)]
    power = [Poly((), "t") for _ in range(order + 1)]
    power[0] = Poly.const(1, "t")
    for j in range(1, order + 1):
        power = _series_mul(power, x, order)
        sign = Fraction((-1) ** (j + 1), j)
        out = [o + p.scale(sign) for o, p in zip(out, power)]
    return out


def series_exp(x: list[Poly], order: int) -> list[Poly]:
    """exp(X) for a formal series X with zero constant term, to 1/p^order."""
    if x and not x[0].is_zero():
        raise ValueError("series must have zero constant term")
    out = [Poly((), "t") for _ in range(order + 1)]
    out[0] = Poly.const(1, "t")
    power = list(out)
    for j in range(1, order + 1):
        power = _series_mul(power, x, order)
        inv = Fraction(1, math.factorial(j))
        out = [o + p.scale(inv) for o, p in zip(out, power)]
    return out


def cumulants(max_q: int) -> list[CumulantPolynomial]:
    """D_1 ... D_max_q from the truncated formal logarithm of the Debye series."""
    if max_q < 1:
        raise ValueError("max_q must be at least 1")
    return list(_cumulants(max_q))


@lru_cache(maxsize=None)
def _cumulants(max_q: int) -> tuple[CumulantPolynomial, ...]:
    u = [d.poly for d in _debye_list(max_q)]
    series = [Poly((), "t")] + u[1:]
    logs = series_log1p(series, max_q)
    return tuple(CumulantPolynomial(q, logs[q]) for q in range(1, max_q + 1))


def eta_and_t(z: float) -> tuple[float, float]:
    """The expansion variables ``eta(z)`` and ``t(z) = 1/sqrt(1+z^2)``."""
    if not z > 0:
        raise ValueError(f"z must be positive, got {z}")
    root = math.sqrt(1.0 + z * z)
    eta = root + math.log(z / (1.0 + root))
    return eta, 1.0 / root


def bessel_i_uniform(p: float, z: float, L: int) -> float:
    """I_p(p z) from the uniform expansion truncated after u_L.

    Cross-check oracle only; accurate for large ``p``.
    """
    if p < 10:
        raise ValueError("the uniform expansion is used for p >= 10 only")
    eta, t = eta_and_t(z)
    corr = 1.0
    for l, u in enumerate(debye_polynomials(L)[1:], start=1):
        corr += u.poly(t) / p**l
    lead = math.exp(p * eta) / (math.sqrt(2.0 * math.pi * p) * (1.0 + z * z) ** 0.25)
    return lead * corr
