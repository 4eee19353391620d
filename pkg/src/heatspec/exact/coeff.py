"""The coefficient field Q(m)[beta].

Heat-invariant coefficients are rational functions of the dimension ``m``
multiplied by powers of the Gamma ratio ``beta(m)``.  ``beta`` is adjoined as
a free symbol: nothing ever rewrites it in terms of ``m``, so two expressions
are equal exactly when every beta-power coefficient agrees.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .numbers import SqrtPiNumber, beta_value
from .poly import Poly, RationalFunction


class PoleError(ZeroDivisionError):
    """A coefficient was evaluated at a dimension where its denominator vanishes."""


def _rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Poly):
        return RationalFunction(x)
    return RationalFunction(Poly((Fraction(x),), "m"))


class CoeffExpr:
    """Element ``sum_k r_k(m) * beta**k`` of Q(m)[beta]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for k, r in (terms or {}).items():
            if k < 0:
                raise ValueError("beta exponents are non-negative")
            r = _rf(r)
            if not r.is_zero():
                clean[int(k)] = r
        self.terms = clean

    @classmethod
    def m(cls) -> "CoeffExpr":
        return cls({0: Poly((0, 1), "m")})

    @classmethod
    def beta(cls) -> "CoeffExpr":
        return cls({1: 1})

    @classmethod
    def const(cls, c) -> "CoeffExpr":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "CoeffExpr":
        if isinstance(x, CoeffExpr):
            return x
        if isinstance(x, (int, Fraction, Poly, RationalFunction)):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to CoeffExpr")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, k: int) -> RationalFunction:
        return self.terms.get(k, _rf(0))

    def __add__(self, other):
        try:
            other = CoeffExpr.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, r in other.terms.items():
            out[k] = out[k] + r if k in out else r
        return CoeffExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffExpr({k: -r for k, r in self.terms.items()})

    def __sub__(self, other):
        try:
            other = CoeffExpr.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = CoeffExpr.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, RationalFunction] = {}
        for j, a in self.terms.items():
            for k, b in other.terms.items():
                p = a * b
                out[j + k] = out[j + k] + p if j + k in out else p
        return CoeffExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a beta-free (pure rational function) expression only."""
        other = CoeffExpr.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero CoeffExpr")
        if set(other.terms) != {0}:
            raise ValueError("division by an expression containing beta leaves Q(m)[beta]")
        d = other.terms[0]
        return CoeffExpr({k: r / d for k, r in self.terms.items()})

    def __pow__(self, n: int):
        out = CoeffExpr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = CoeffExpr.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def at_m(self, m) -> dict[int, Fraction]:
        """Substitute a concrete dimension, keeping beta symbolic."""
        out = {}
        for k, r in self.terms.items():
            try:
                v = r(Fraction(m))
            except ZeroDivisionError as exc:
                raise PoleError(f"coefficient {self} has a pole at m={m}") from exc
            if v:
                out[k] = v
        return out

    def __repr__(self):
        return f"CoeffExpr({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            r = self.terms[k]
            body = str(r) if r.den.degree > 0 else f"({r.num})"
            if k:
                body += "*beta" + (f"^{k}" if k > 1 else "")
            parts.append(body)
        return " + ".join(parts)


def coeffexpr_eval(x: CoeffExpr, m: int) -> SqrtPiNumber:
    """Substitute ``m`` and ``beta -> beta(m)``; exact."""
    beta = beta_value(m)
    out = SqrtPiNumber()
    for k, v in x.at_m(m).items():
        out = out + SqrtPiNumber.rational(v) * beta**k
    return out
