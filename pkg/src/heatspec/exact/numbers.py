"""Gaussian rationals and Laurent polynomials in sqrt(pi).

``SqrtPiNumber`` is the home of every Gamma value at a half-integer:
``Gamma(j/2)`` is a rational multiple of ``sqrt(pi)**(j % 2)``, and products
and quotients of such values stay monomials.  Sums are kept as sparse maps
``{k: c_k}`` meaning ``sum c_k * sqrt(pi)**k``.  Because sqrt(pi) is
transcendental the representation is canonical, so ``==`` is exact equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

SQRT_PI = math.sqrt(math.pi)


class GaussRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x, 0)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRational.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return self * GaussRational(other.re / n, -other.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}*i"


I = GaussRational(0, 1)


class SqrtPiNumber:
    """Exact ``sum_k c_k * sqrt(pi)**k`` with rational ``c_k`` and integer ``k``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def rational(cls, c) -> "SqrtPiNumber":
        return cls({0: c})

    @classmethod
    def sqrt_pi_power(cls, k: int, c=1) -> "SqrtPiNumber":
        return cls({k: c})

    @classmethod
    def coerce(cls, x) -> "SqrtPiNumber":
        if isinstance(x, SqrtPiNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        raise TypeError(f"cannot treat {type(x).__name__} as an exact sqrt(pi) number")

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_rational(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def coefficient(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def __add__(self, other):
        try:
            other = SqrtPiNumber.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SqrtPiNumber(out)

    __radd__ = __add__

    def __neg__(self):
        return SqrtPiNumber({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = SqrtPiNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = SqrtPiNumber.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for j, a in self.terms.items():
            for k, b in other.terms.items():
                out[j + k] = out.get(j + k, 0) + a * b
        return SqrtPiNumber(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = SqrtPiNumber.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero sqrt(pi) number")
        if not other.is_monomial():
            raise ValueError(f"division by the non-monomial {other} leaves the ring")
        (k, c), = other.terms.items()
        return SqrtPiNumber({j - k: a / c for j, a in self.terms.items()})

    def __rtruediv__(self, other):
        return SqrtPiNumber.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return SqrtPiNumber.rational(1) / self**(-n)
        out = SqrtPiNumber.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = SqrtPiNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __float__(self):
        return math.fsum(float(c) * SQRT_PI**k for k, c in self.terms.items())

    def __repr__(self):
        return f"SqrtPiNumber({ {k: str(c) for k, c in sorted(self.terms.items())} })"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                parts.append(str(c))
            elif k % 2 == 0:
                parts.append(f"{c}*pi^{{{k // 2}}}")
            else:
                parts.append(f"{c}*pi^{{{k}/2}}")
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def gamma_half(j: int) -> SqrtPiNumber:
    """Gamma(j/2) for a positive integer j."""
    if j < 1:
        raise ValueError(f"gamma_half needs j >= 1, got {j}")
    if j % 2 == 0:
        return SqrtPiNumber.rational(math.factorial(j // 2 - 1))
    # Gamma(j/2) = (j/2 - 1)(j/2 - 2)...(1/2) sqrt(pi)
    c = Fraction(1)
    x = Fraction(j, 2) - 1
    while x > 0:
        c *= x
        x -= 1
    return SqrtPiNumber({1: c})


def gamma_exact(x) -> SqrtPiNumber:
    """Gamma at a half-integer or integer argument that is not a pole."""
    x = Fraction(x)
    if (2 * x).denominator != 1:
        raise ValueError(f"Gamma({x}) is not a half-integer value")
    if x.denominator == 1 and x <= 0:
        raise ZeroDivisionError(f"Gamma has a pole at {x}")
    if x > 0:
        return gamma_half(int(2 * x))
    # Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1))
    denom = Fraction(1)
    while x <= 0:
        denom *= x
        x += 1
    return gamma_half(int(2 * x)) / SqrtPiNumber.rational(denom)


def beta_value(m: int) -> SqrtPiNumber:
    """beta(m) = Gamma(m/2) / (Gamma(1/2) Gamma((m+1)/2))."""
    if m < 1:
        raise ValueError(f"beta(m) needs a positive dimension, got {m}")
    return gamma_half(m) / (gamma_half(1) * gamma_half(m + 1))
