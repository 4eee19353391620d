"""Pointwise normal form of a second-order operator of Laplace type.

For ``D = -(g^{mu nu} d_mu d_nu + a^mu d_mu + b)`` the connection one-form
and endomorphism are

    omega_delta = 1/2 g_{nu delta} (a^nu + g^{mu sigma} Gamma_{mu sigma}^nu)
    E = b - g^{nu mu} (d_nu omega_mu + omega_nu omega_mu - omega_sigma Gamma_{nu mu}^sigma)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exact import GMatrix, rational_inverse


def laplace_normal_form(
    g: Sequence[Sequence],
    a: Sequence[GMatrix],
    b: GMatrix,
    christoffel: Sequence[Sequence[Sequence]] | None = None,
    d_omega: Sequence[Sequence[GMatrix]] | None = None,
) -> tuple[tuple[GMatrix, ...], GMatrix]:
    """Return ``(omega, E)`` at one point.

    ``christoffel[mu][sigma][nu]`` is Gamma_{mu sigma}^nu (default flat) and
    ``d_omega[nu][mu]`` the supplied derivative d_nu omega_mu (default zero).
    """
    m = len(g)
    n = b.n
    g = [[Fraction(x) for x in row] for row in g]
    g_inv = rational_inverse(g)  # raises on a singular metric
    if len(a) != m:
        raise ValueError(f"a needs {m} components")
    zero = GMatrix.zeros(n)
    if christoffel is None:
        christoffel = [[[0] * m for _ in range(m)] for _ in range(m)]
    gam = [[[Fraction(x) for x in c] for c in row] for row in christoffel]
    contracted = [sum((g_inv[mu][s] * gam[mu][s][nu] for mu in range(m) for s in range(m)), Fraction(0)) for nu in range(m)]
    omega = []
    for delta in range(m):
        acc = zero
        for nu in range(m):
            if g[nu][delta]:
                acc = acc + (a[nu] + GMatrix.scalar(n, contracted[nu])) * (g[nu][delta] / 2)
        omega.append(acc)
    E = b
    for nu in range(m):
        for mu in range(m):
            w = g_inv[nu][mu]
            if not w:
                continue
            term = omega[nu] @ omega[mu]
            if d_omega is not None:
                term = term + d_omega[nu][mu]
            for s in range(m):
                if gam[nu][mu][s]:
                    term = term - omega[s] * gam[nu][mu][s]
            E = E - term * w
    return tuple(omega), E
