"""Random exact boundary data shared by the invariant tests."""

from __future__ import annotations

import random
from fractions import Fraction

from heatspec.exact import GaussRational, GMatrix
from heatspec.invariants import BoundaryGeometryData, clifford_rep


def _q(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def random_matrix(rng: random.Random, n: int) -> GMatrix:
    return GMatrix([[GaussRational(_q(rng), _q(rng)) for _ in range(n)] for _ in range(n)])


def random_hermitian(rng: random.Random, n: int) -> GMatrix:
    x = random_matrix(rng, n)
    return (x + x.adjoint()) * Fraction(1, 2)


def random_symmetric(rng: random.Random, k: int) -> list[list[Fraction]]:
    L = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            L[a][b] = L[b][a] = _q(rng)
    return L


def random_boundary_data(rng: random.Random, m: int) -> BoundaryGeometryData:
    """Flat ball-type data: random psi, Hermitian Theta, symmetric L, F = 1."""
    rep = clifford_rep(m)
    return BoundaryGeometryData(
        rep,
        psi=random_matrix(rng, rep.dim),
        theta=random_hermitian(rng, rep.dim),
        L=random_symmetric(rng, m - 1),
    )
