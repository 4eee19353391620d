from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest

from heatspec.debye import (
    bessel_i_uniform,
    cumulants,
    debye_polynomials,
    eta_and_t,
    series_exp,
    series_log1p,
)
from heatspec.exact import Poly


def tpoly(coeffs: dict[int, Fraction]) -> Poly:
    deg = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(deg + 1)], "t")


def test_first_debye_polynomials():
    u = debye_polynomials(2)
    assert u[0].poly == Poly.const(1, "t")
    assert u[1].poly == tpoly({1: Fraction(1, 8), 3: Fraction(-5, 24)})
    assert u[2].poly == tpoly({2: Fraction(81, 1152), 4: Fraction(-462, 1152), 6: Fraction(385, 1152)})


@pytest.mark.parametrize("l", range(1, 7))
def test_debye_parity_and_degree(l):
    u = debye_polynomials(l)[l].poly
    assert u.degree == 3 * l
    nonzero = [k for k in range(u.degree + 1) if u[k]]
    assert all(k % 2 == l % 2 for k in nonzero)
    assert min(nonzero) == l


def test_cumulants_first_two():
    d1, d2 = cumulants(2)
    assert d1.poly == tpoly({1: Fraction(1, 8), 3: Fraction(-5, 24)})
    assert d2.poly == tpoly({2: Fraction(1, 16), 4: Fraction(-3, 8), 6: Fraction(5, 16)})


def test_cumulants_reexponentiate_to_debye_series():
    order = 5
    logs = [Poly((), "t")] + [c.poly for c in cumulants(order)]
    back = series_exp(logs, order)
    u = debye_polynomials(order)
    assert [b for b in back] == [x.poly for x in u]


def test_log_exp_round_trip_on_simple_series():
    x = [Poly((), "t"), Poly.variable("t"), Poly.const(Fraction(1, 3), "t")]
    e = series_exp(x + [Poly((), "t")], 3)
    assert series_log1p([Poly((), "t")] + e[1:], 3)[:3] == x


def test_series_needs_zero_constant_term():
    with pytest.raises(ValueError):
        series_log1p([Poly.const(1, "t")], 2)
    with pytest.raises(ValueError):
        series_exp([Poly.const(1, "t")], 2)


def test_eta_and_t_at_one():
    eta, t = eta_and_t(1.0)
    assert t == pytest.approx(0.70710678, abs=1e-8)
    assert eta == pytest.approx(math.sqrt(2) + math.log(1 / (1 + math.sqrt(2))), rel=1e-15)
    assert eta == pytest.approx(0.53284, abs=1e-5)


def test_eta_and_t_large_z():
    _, t = eta_and_t(1e8)
    assert t < 1e-7


def test_eta_and_t_rejects_nonpositive():
    with pytest.raises(ValueError):
        eta_and_t(0.0)


def _series_i(p: int, x: float) -> float:
    # direct power series, evaluated with extra precision
    with mpmath.workdps(40):
        half = mpmath.mpf(x) / 2
        s = mpmath.nsum(lambda k: half ** (2 * k + p) / (mpmath.factorial(k) * mpmath.factorial(k + p)), [0, mpmath.inf])
        return float(s)


def test_uniform_expansion_against_series():
    exact = _series_i(50, 50.0)
    approx = bessel_i_uniform(50, 1.0, 3)
    assert abs(approx - exact) / exact <= 1e-8


def test_uniform_expansion_leading_term():
    p, z = 50, 1.0
    eta, _ = eta_and_t(z)
    lead = math.exp(p * eta) / (math.sqrt(2 * math.pi * p) * (1 + z * z) ** 0.25)
    assert bessel_i_uniform(p, z, 0) == pytest.approx(lead, rel=1e-15)


def test_uniform_expansion_improves_with_order():
    exact = _series_i(50, 50.0)
    err0 = abs(bessel_i_uniform(50, 1.0, 0) - exact)
    err2 = abs(bessel_i_uniform(50, 1.0, 2) - exact)
    assert err2 < err0


def test_uniform_expansion_rejects_small_order():
    with pytest.raises(ValueError):
        bessel_i_uniform(5, 1.0, 2)
