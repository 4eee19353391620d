"""Exact Clifford module structures.

Generators are anti-Hermitian with ``gamma_i gamma_j + gamma_j gamma_i =
-2 delta_ij``, equivalently ``gamma_i^* gamma_j + gamma_j^* gamma_i =
2 delta_ij``.  Even counts come from the block doubling

    gamma_a(n) = [[0, i gamma_a(n-1)], [-i gamma_a(n-1), 0]],
    gamma_n(n) = [[0, i I], [i I, 0]],

odd counts by appending a scaled product of the existing generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..exact import GMatrix, I


def _block(a: GMatrix, b: GMatrix, c: GMatrix, d: GMatrix) -> GMatrix:
    rows = [ra + rb for ra, rb in zip(a.rows, b.rows)] + [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return GMatrix(rows)


@lru_cache(maxsize=None)
def _generators(n: int) -> tuple[GMatrix, ...]:
    if n < 1:
        raise ValueError("need at least one generator")
    if n == 1:
        return (GMatrix([[I]]),)
    prev = _generators(n - 1)
    if n % 2 == 0:
        k = prev[0].n
        z = GMatrix.zeros(k)
        one = GMatrix.identity(k)
        out = [_block(z, g * I, g * (-I), z) for g in prev]
        out.append(_block(z, one * I, one * I, z))
        return tuple(out)
    prod = prev[0]
    for g in prev[1:]:
        prod = prod @ g
    sq = prod @ prod
    c = 1 if sq == GMatrix.scalar(prod.n, -1) else I
    return prev + (prod * c,)


@dataclass(frozen=True)
class CliffordRep:
    """``m`` generators acting on C^dim; ``gammas[m-1]`` is the normal one."""

    m: int
    gammas: tuple[GMatrix, ...]

    @classmethod
    def generate(cls, m: int) -> "CliffordRep":
        """Any ``m >= 2``; odd ``m`` uses the irreducible module of size 2^((m-1)/2)."""
        if m < 2:
            raise ValueError("a boundary needs m >= 2")
        return cls(m, _generators(m))

    @property
    def dim(self) -> int:
        return self.gammas[0].n

    @property
    def normal(self) -> GMatrix:
        return self.gammas[-1]

    @property
    def normal_inverse(self) -> GMatrix:
        return -self.gammas[-1]

    def gamma_T(self, a: int) -> GMatrix:
        """gamma_a^T = gamma_m^{-1} gamma_a for a tangential index 0 <= a < m-1."""
        if not 0 <= a < self.m - 1:
            raise IndexError(f"tangential index {a} out of range for m={self.m}")
        return self.normal_inverse @ self.gammas[a]

    def tangential(self) -> tuple[GMatrix, ...]:
        return tuple(self.gamma_T(a) for a in range(self.m - 1))

    def tensor_with(self, dim_v: int) -> "CliffordRep":
        """gamma (x) I_V: the module twisted by a trivial coefficient space."""
        one = GMatrix.identity(dim_v)
        return CliffordRep(self.m, tuple(g.kron(one) for g in self.gammas))

    def identity(self) -> GMatrix:
        return GMatrix.identity(self.dim)


def clifford_rep(m: int) -> CliffordRep:
    """The spinor module for an even dimension ``m >= 4``."""
    if m % 2 or m < 4:
        raise ValueError(f"clifford_rep needs an even m >= 4, got {m}")
    return CliffordRep.generate(m)
