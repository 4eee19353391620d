"""Barnes zeta residues, generalized Bernoulli polynomials and sphere data.

The Barnes zeta function with all weights one is

    zeta_B(s, a) = sum_{n>=0} C(n+d-1, d-1) (n+a)^{-s}.

Its poles and values at non-positive integers are polynomials in ``a``
built from the generalized Bernoulli polynomials ``B_n^{(d)}(a)``, with
generating function ``(t/(e^t-1))^d e^{at} = sum_n B_n^{(d)}(a) t^n / n!``.
The boundary zeta function of the ball is ``2 d_s zeta_B(2s, m/2-1)`` on
``S^{m-1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Poly, SqrtPiNumber

A = Poly.variable("a")


@dataclass(frozen=True)
class GenBernoulli:
    n: int
    d: int
    poly: Poly


@dataclass(frozen=True)
class BarnesResidueValue:
    z: int
    d: int
    value: Poly


def _inverse_series(c: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / c[0]
    for n in range(1, order + 1):
        acc = sum((c[k] * out[n - k] for k in range(1, min(n, len(c) - 1) + 1)), Fraction(0))
        out[n] = -acc / c[0]
    return out


def _mul_series(x: list, y: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(x[: order + 1]):
        if not a:
            continue
        for j, b in enumerate(y[: order + 1 - i]):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


@lru_cache(maxsize=None)
def _todd_power(d: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of (t/(e^t - 1))^d up to t^order."""
    base = [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)]  # (e^t - 1)/t
    inv = _inverse_series(base, order)
    out: list = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(d):
        out = _mul_series(out, inv, order)
    return tuple(out)


@lru_cache(maxsize=None)
def _gen_bernoulli_poly(n: int, d: int) -> Poly:
    todd = _todd_power(d, n)
    # t^n coefficient of todd(t) * e^{at}: sum_j todd[n-j] a^j / j!
    coeffs = [todd[n - j] / math.factorial(j) for j in range(n + 1)]
    return Poly(coeffs, "a").scale(math.factorial(n))


def gen_bernoulli(n: int, d: int) -> GenBernoulli:
    """B_n^{(d)}(a) as an exact polynomial in ``a``."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    return GenBernoulli(n, d, _gen_bernoulli_poly(n, d))


def barnes_residue(z: int, d: int) -> BarnesResidueValue:
    """Res_{s=z} zeta_B(s, a); the zero polynomial when ``z`` is not a pole."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if not 1 <= z <= d:
        return BarnesResidueValue(z, d, Poly((), "a"))
    c = Fraction((-1) ** (d + z), math.factorial(z - 1) * math.factorial(d - z))
    return BarnesResidueValue(z, d, _gen_bernoulli_poly(d - z, d).scale(c))


def barnes_value(k: int, d: int) -> Poly:
    """zeta_B(-k, a) for a non-negative integer ``k``."""
    if k < 0:
        raise ValueError("barnes_value is defined here at s = -k <= 0 only")
    c = Fraction((-1) ** d * math.factorial(k), math.factorial(d + k))
    return _gen_bernoulli_poly(d + k, d).scale(c)


def listed_leading_residues(d: int) -> dict[int, Poly]:
    """The closed forms for the four leading poles z = d, d-1, d-2, d-3, as
    usually quoted in the literature (with ``2a`` in the last numerator)."""
    if d < 4:
        raise ValueError("the four leading formulas need d >= 4")
    f = math.factorial
    return {
        d: Poly.const(Fraction(1, f(d - 1)), "a"),
        d - 1: (d - 2 * A).scale(Fraction(1, 2 * f(d - 2))),
        d - 2: (12 * A * A - d - 12 * d * A + 3 * d * d).scale(Fraction(1, 24 * f(d - 3))),
        d - 3: (-8 * A**3 + 12 * d * A * A + 2 * A - 6 * d * d * A - d * d + d**3).scale(
            Fraction(1, 48 * f(d - 4))
        ),
    }


def corrected_residue_d_minus_3(d: int) -> Poly:
    """Res_{s=d-3} zeta_B with the linear term ``2ad``; agrees with the series."""
    if d < 4:
        raise ValueError("needs d >= 4")
    num = -8 * A**3 + 12 * d * A * A + 2 * d * A - 6 * d * d * A - d * d + d**3
    return num.scale(Fraction(1, 48 * math.factorial(d - 4)))


def hurwitz_residue(z: int, d: int) -> Poly:
    """Independent route to Res_{s=z} zeta_B via Hurwitz decomposition.

    Expanding C(n+d-1, d-1) = sum_j c_j(a) (n+a)^j writes zeta_B as
    sum_j c_j(a) zeta_H(s-j, a), whose only pole at s = j+1 has residue c_j.
    """
    if not 1 <= z <= d:
        return Poly((), "a")
    # C(n+d-1, d-1) = prod_{i=1}^{d-1} (n+i)/i, n = x - a
    coeffs_in_x: list[Poly] = [Poly.const(1, "a")]
    for i in range(1, d):
        # multiply by (x - a + i)/i
        shift = (i - A).scale(Fraction(1, i))
        nxt = [Poly((), "a") for _ in range(len(coeffs_in_x) + 1)]
        for j, c in enumerate(coeffs_in_x):
            nxt[j] = nxt[j] + c * shift
            nxt[j + 1] = nxt[j + 1] + c.scale(Fraction(1, i))
        coeffs_in_x = nxt
    return coeffs_in_x[z - 1]


def spinor_dimension(m: int) -> int:
    if m % 2:
        raise ValueError(f"odd dimension m={m} is not supported")
    return 2 ** (m // 2)


def multiplicity(n: int, m: int) -> int:
    """d_n(m) = (d_s/2) C(m+n-2, n) for even ``m >= 4``."""
    if m % 2 or m < 4:
        raise ValueError(f"multiplicity needs an even m >= 4, got {m}")
    if n < 0:
        raise ValueError("n must be non-negative")
    return spinor_dimension(m) // 2 * math.comb(m + n - 2, n)


@dataclass(frozen=True)
class MultiplicityTable:
    m: int
    d_s: int
    entries: tuple[int, ...]

    @classmethod
    def build(cls, m: int, n_max: int) -> "MultiplicityTable":
        return cls(m, spinor_dimension(m), tuple(multiplicity(n, m) for n in range(n_max + 1)))


def _half_integer(s0) -> Fraction:
    s0 = Fraction(s0)
    if (2 * s0).denominator != 1:
        raise ValueError(f"{s0} is not a half-integer")
    return s0


def base_zeta_residue(s0, m: int) -> SqrtPiNumber:
    """Res_{s=s0} of the boundary zeta function 2 d_s zeta_B(2s, m/2-1).

    The substitution sigma = 2s halves the residue, so the result is
    d_s * Res_{sigma=2 s0} zeta_B.  Zero away from the poles.
    """
    d_s = spinor_dimension(m)
    try:
        s0 = _half_integer(s0)
    except ValueError:
        return SqrtPiNumber()
    sigma = 2 * s0
    d = m - 1
    if not 1 <= sigma <= d:
        return SqrtPiNumber()
    res = barnes_residue(int(sigma), d).value(Fraction(m, 2) - 1)
    return SqrtPiNumber.rational(d_s * res)


def base_zeta_value(s0, m: int) -> SqrtPiNumber:
    """2 d_s zeta_B(2 s0, m/2-1) at a point with 2 s0 a non-positive integer."""
    s0 = _half_integer(s0)
    sigma = 2 * s0
    if sigma > 0:
        raise ValueError("closed form values are available for 2*s0 <= 0 only")
    val = barnes_value(int(-sigma), m - 1)(Fraction(m, 2) - 1)
    return SqrtPiNumber.rational(2 * spinor_dimension(m) * val)
