"""Exact arithmetic kernel: rationals, Gaussian rationals, polynomials,
rational functions, the field Q(m)[beta] and Laurent polynomials in sqrt(pi).

``Rational`` is :class:`fractions.Fraction`.
"""

from fractions import Fraction as Rational

from .coeff import CoeffExpr, PoleError, coeffexpr_eval
from .matrix import GMatrix, rational_inverse, trace_product
from .numbers import I, SQRT_PI, GaussRational, SqrtPiNumber, beta_value, gamma_exact, gamma_half
from .poly import Poly, RationalFunction, poly_gcd

__all__ = [
    "Rational",
    "GaussRational",
    "I",
    "Poly",
    "RationalFunction",
    "poly_gcd",
    "CoeffExpr",
    "PoleError",
    "coeffexpr_eval",
    "SqrtPiNumber",
    "SQRT_PI",
    "gamma_half",
    "gamma_exact",
    "beta_value",
    "GMatrix",
    "trace_product",
    "rational_inverse",
]
