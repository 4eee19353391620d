"""Small dense matrices over the Gaussian rationals.

Only what the boundary-invariant evaluators need: products, adjoints,
Kronecker products and traces.  Clifford generators are monomial matrices, so
the product loop skips zero entries, and ``trace_product`` avoids forming
full products when only a trace is wanted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numbers import GaussRational

_ZERO = GaussRational(0)
_ONE = GaussRational(1)


class GMatrix:
    """Immutable square matrix with ``GaussRational`` entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(GaussRational.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("GMatrix must be square")
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n: int) -> "GMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "GMatrix":
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def scalar(cls, n: int, c) -> "GMatrix":
        c = GaussRational.coerce(c)
        return cls([[c if i == j else _ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "GMatrix"):
        if not isinstance(other, GMatrix):
            raise TypeError("GMatrix operand expected")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        self._check(other)
        return GMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        self._check(other)
        return GMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return GMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, GMatrix):
            return NotImplemented
        c = GaussRational.coerce(c)
        return GMatrix([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        self._check(other)
        n = self.n
        cols = other.rows
        out = []
        for row in self.rows:
            acc = [_ZERO] * n
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(cols[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return GMatrix(out)

    def adjoint(self) -> "GMatrix":
        """Conjugate transpose."""
        return GMatrix([[self.rows[j][i].conjugate() for j in range(self.n)] for i in range(self.n)])

    def trace(self) -> GaussRational:
        acc = _ZERO
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def kron(self, other: "GMatrix") -> "GMatrix":
        n, k = self.n, other.n
        return GMatrix(
            [
                [self.rows[i // k][j // k] * other.rows[i % k][j % k] for j in range(n * k)]
                for i in range(n * k)
            ]
        )

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_complex(self):
        import numpy as np

        return np.array([[complex(a) for a in r] for r in self.rows])

    def __repr__(self):
        return "GMatrix([" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "])"


def trace_product(a: GMatrix, b: GMatrix) -> GaussRational:
    """``Tr(a @ b)`` in O(n^2)."""
    a._check(b)
    acc = _ZERO
    for i, row in enumerate(a.rows):
        for j, x in enumerate(row):
            if x:
                y = b.rows[j][i]
                if y:
                    acc = acc + x * y
    return acc


def rational_inverse(g: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a rational matrix by Gauss-Jordan elimination."""
    n = len(g)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(g)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
