"""Univariate polynomials and rational functions over Q.

A polynomial is stored as a tuple of :class:`~fractions.Fraction` coefficients
indexed by degree, with trailing zeros trimmed; the zero polynomial is the
empty tuple and has degree ``-1``.  Every polynomial carries a variable tag
(``"t"``, ``"a"``, ``"m"``, ...) and arithmetic between different tags is
refused rather than silently mixed.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

ZERO_DEGREE = -1

_Scalar = (int, Fraction)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [_frac(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Polynomial with exact rational coefficients in a tagged variable."""

    __slots__ = ("var", "coeffs", "_hash")

    def __init__(self, coeffs: Sequence = (), var: str = "x"):
        self.var = var
        self.coeffs = _trim(coeffs)
        self._hash = None

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * degree + [c], var)

    @classmethod
    def variable(cls, var: str = "x") -> "Poly":
        return cls((0, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            # constants are tag-agnostic
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, _Scalar):
            return Poly((other,), self.var)
        return NotImplemented

    def _var_with(self, other: "Poly") -> str:
        if self.degree <= 0 and other.degree > 0:
            return other.var
        return self.var

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)], self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly((), self._var_with(o))
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out, self._var_with(o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = _frac(c)
        return Poly([c * x for x in self.coeffs], self.var)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(o.coeffs) + 1, 0)
        lead = o.lead()
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + o.degree] / lead
            q[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        var = self._var_with(o)
        return Poly(q, var), Poly(rem[: o.degree] if o.degree >= 0 else rem, var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def antiderivative(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.var)

    def __call__(self, x):
        """Horner evaluation; exact for rationals, float for floats."""
        acc = 0 if isinstance(x, _Scalar) else 0.0
        for c in reversed(self.coeffs):
            if isinstance(x, _Scalar):
                acc = acc * x + c
            else:
                acc = acc * x + float(c)
        return Fraction(acc) if isinstance(x, _Scalar) else acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if isinstance(other, _Scalar):
            other = Poly((other,), self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.degree <= 0 or self.var == other.var

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var if self.degree > 0 else None, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Quotient ``num/den`` of polynomials, kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "m"):
        if not isinstance(num, Poly):
            num = Poly((num,), var)
        if den is None:
            den = Poly((1,), num.var)
        elif not isinstance(den, Poly):
            den = Poly((den,), num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Poly((), num.var if num.var == den.var else var)
            self.den = Poly((1,), self.num.var)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead()
        self.num = num.scale(1 / lead)
        self.den = den.scale(1 / lead)

    @property
    def var(self) -> str:
        return self.num.var if self.num.degree > 0 else self.den.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, _Scalar):
            return RationalFunction(Poly((other,), self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFunction(self.num**n, self.den**n)
        return RationalFunction(self.den ** (-n), self.num ** (-n))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {self.var}={x}")
        return self.num(x) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"
