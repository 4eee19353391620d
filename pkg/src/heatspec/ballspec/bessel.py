"""Bessel functions of the first kind on the supported range."""

from __future__ import annotations

from scipy.special import jv, jvp

NU_MAX = 250.0
X_MAX = 600.0


class BesselDomainError(ValueError):
    pass


def _check(nu: float, x: float) -> None:
    if not (0.0 <= nu <= NU_MAX):
        raise BesselDomainError(f"order {nu} outside [0, {NU_MAX}]")
    if not (0.0 <= x <= X_MAX):
        raise BesselDomainError(f"argument {x} outside [0, {X_MAX}]")


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for 0 <= nu <= 250 and 0 <= x <= 600."""
    _check(nu, x)
    return float(jv(nu, x))


def bessel_j_prime(nu: float, x: float) -> float:
    _check(nu, x)
    return float(jvp(nu, x))
