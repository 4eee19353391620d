"""Exact heat coefficients of the ball from residues of the spectral zeta function.

With z = k/p the uniform expansion of I_p(pz) splits zeta(s) into pieces
A_{-1}, A_0, A_1, ... each of the form

    coef * prod_j Gamma(s + alpha_j)^{e_j} * zeta_S(s + shift)

where zeta_S(s) = 2 d_s zeta_B(2s, m/2 - 1) is the boundary zeta function.
A residue of such a product is read off from Laurent orders: Gamma poles,
the simple poles of zeta_S, and its closed-form values at 2s <= 0.  Then
a_k = Gamma((m-k)/2) * Res_{s=(m-k)/2} zeta(s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..barnes import base_zeta_residue, base_zeta_value, spinor_dimension
from ..debye import cumulants
from ..exact import GMatrix, Poly, SqrtPiNumber, beta_value, coeffexpr_eval, gamma_exact, gamma_half
from ..invariants import BoundaryGeometryData, a1_density, a2_density, a3_density, boundary_prefactor, clifford_rep, sphere_volume
from ..invariants.table import coefficient_table
from .bessel import bessel_j
from .heat import SmearedF, r3_weight, r5_weight

HALF = Fraction(1, 2)


class UnresolvedLaurentError(ArithmeticError):
    """A residue would need a regular value of zeta_S that has no closed form here."""


@dataclass(frozen=True)
class ZetaTerm:
    coef: SqrtPiNumber
    gammas: tuple[tuple[Fraction, int], ...]  # (alpha, exponent)
    shift: Fraction

    def shifted(self, j: int, p_power: int, weight) -> "ZetaTerm":
        """Multiply by weight * p^p_power / mu^{2j}: s -> s + j, zeta argument lowered by p_power/2."""
        return ZetaTerm(
            self.coef * SqrtPiNumber.rational(weight),
            tuple((a + j, e) for a, e in self.gammas),
            self.shift + j - Fraction(p_power, 2),
        )


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def term_residue(term: ZetaTerm, s0: Fraction, m: int) -> SqrtPiNumber:
    """Res_{s=s0} of one term, exact."""
    order = 0
    coef = term.coef
    for alpha, e in term.gammas:
        x = s0 + alpha
        if _is_int(x) and x <= 0:
            k = int(-x)
            lead = SqrtPiNumber.rational(Fraction((-1) ** k, math.factorial(k)))
            order -= e
            coef = coef * lead**e
        else:
            coef = coef * gamma_exact(x) ** e
    sigma = 2 * (s0 + term.shift)
    d = m - 1
    known = True
    if _is_int(sigma) and 1 <= sigma <= d:
        order -= 1
        coef = coef * base_zeta_residue(s0 + term.shift, m)
    elif _is_int(sigma) and sigma <= 0:
        v = base_zeta_value(s0 + term.shift, m)
        if v.is_zero():
            order += 1
            known = False
        else:
            coef = coef * v
    else:
        known = False
    if order >= 0:
        return SqrtPiNumber()
    if order == -1 and known:
        return coef
    raise UnresolvedLaurentError(f"cannot resolve {term} at s={s0} (order {order})")


def a_terms(q: int) -> list[ZetaTerm]:
    """The pieces of A_q for q >= -1."""
    sqrt_pi = gamma_half(1)
    if q == -1:
        return [ZetaTerm(SqrtPiNumber.rational(Fraction(1, 4)) / sqrt_pi, ((-HALF, 1), (Fraction(1), -1)), -HALF)]
    if q == 0:
        return [ZetaTerm(SqrtPiNumber.rational(Fraction(-1, 4)), (), Fraction(0))]
    D = cumulants(q)[q - 1].poly
    out = []
    for l in range(D.degree + 1):
        c = D[l]
        if c:
            coef = SqrtPiNumber.rational(-c) / gamma_exact(Fraction(l, 2))
            out.append(ZetaTerm(coef, ((Fraction(l, 2), 1), (Fraction(0), -1)), Fraction(q, 2)))
    return out


def _check_m(m: int) -> None:
    if m % 2 or m < 4:
        raise ValueError(f"ball coefficients need an even m >= 4, got {m}")


def residue_pipeline(m: int) -> tuple[SqrtPiNumber, SqrtPiNumber, SqrtPiNumber, SqrtPiNumber]:
    """Res_{s=(m-3)/2} of A_{-1}, A_0, A_1, A_2."""
    _check_m(m)
    s0 = Fraction(m - 3, 2)
    out = []
    for q in (-1, 0, 1, 2):
        acc = SqrtPiNumber()
        for term in a_terms(q):
            acc = acc + term_residue(term, s0, m)
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ListedResidues:
    values: tuple[SqrtPiNumber, SqrtPiNumber, SqrtPiNumber, SqrtPiNumber]
    gamma_zero_convention: bool  # True when 1/Gamma(m-4) was read as 0


def listed_residues(m: int) -> ListedResidues:
    """Closed forms of the four residues at s = (m-3)/2.

    The A_0 entry carries 1/Gamma(m-4); at m = 4 it is read as 1/Gamma(0) = 0
    and the flag is set.
    """
    _check_m(m)
    d_s = spinor_dimension(m)
    g = gamma_half(m - 1) * gamma_half(m - 3)  # Gamma((m-1)/2) Gamma((m-3)/2)
    r_m1 = SqrtPiNumber.rational(Fraction(-d_s * (m - 2), 6 * 2**m)) / g
    if m == 4:
        r_0, flag = SqrtPiNumber(), True
    else:
        r_0, flag = SqrtPiNumber.rational(Fraction(d_s, 96 * math.factorial(m - 5))), False
    r_1 = SqrtPiNumber.rational(Fraction(d_s * (5 * m - 13), 6 * 2**m)) / g
    r_2 = SqrtPiNumber.rational(Fraction(-d_s * (m - 3) ** 2 * (5 * m - 9), 256 * math.factorial(m - 2)))
    return ListedResidues((r_m1, r_0, r_1, r_2), flag)


def ball_coefficient(m: int, k: int) -> SqrtPiNumber:
    """a_k of the unit ball (F = 1) for 0 <= k <= 3 via the residue pipeline."""
    _check_m(m)
    if not 0 <= k <= 3:
        raise ValueError("k must be in 0..3")
    s0 = Fraction(m - k, 2)
    acc = SqrtPiNumber()
    for q in range(-1, k):
        for term in a_terms(q):
            acc = acc + term_residue(term, s0, m)
    return gamma_exact(s0) * acc


def a3_ball_closed_form(m: int) -> SqrtPiNumber:
    """2^{-5-m}(m-1) d_s [8(4m-11)G(m/2) + (17-7m)G(1/2)G((m+1)/2)] / [3 G(m/2) G((m+1)/2)]."""
    _check_m(m)
    d_s = spinor_dimension(m)
    gm, g1, gm1 = gamma_half(m), gamma_half(1), gamma_half(m + 1)
    num = SqrtPiNumber.rational(8 * (4 * m - 11)) * gm + SqrtPiNumber.rational(17 - 7 * m) * g1 * gm1
    den = SqrtPiNumber.rational(3) * gm * gm1
    return SqrtPiNumber.rational(Fraction((m - 1) * d_s, 2 ** (5 + m))) * num / den


def table_a3_ball(m: int) -> SqrtPiNumber:
    """(4 pi)^{-(m-1)/2} Vol(S^{m-1}) 2^{m/2} (d_16 (m-1) + d_17 (m-1)^2) at beta = beta(m)."""
    t = coefficient_table()
    expr = t.d[16] * (m - 1) + t.d[17] * (m - 1) ** 2
    return boundary_prefactor(m) * SqrtPiNumber.rational(spinor_dimension(m)) * coeffexpr_eval(expr, m)


def theorem_ball_coefficients(m: int) -> tuple[SqrtPiNumber, SqrtPiNumber, SqrtPiNumber, SqrtPiNumber]:
    """a_0..a_3 of the unit ball (F = 1, psi = 0, L = identity) from the general formulas."""
    _check_m(m)
    d_s = SqrtPiNumber.rational(spinor_dimension(m))
    beta = beta_value(m)
    pi = SqrtPiNumber.sqrt_pi_power(2)
    vol_s = sphere_volume(m)
    vol_b = vol_s / SqrtPiNumber.rational(m)
    four_pi_half_m = SqrtPiNumber.sqrt_pi_power(-m, Fraction(1, 2**m))  # (4 pi)^{-m/2}
    a0 = four_pi_half_m * vol_b * d_s
    a1 = boundary_prefactor(m) * d_s * (beta - 1) / SqrtPiNumber.rational(4)
    a2 = four_pi_half_m * vol_s * d_s * SqrtPiNumber.rational(Fraction(m - 1, 3)) * (
        1 - SqrtPiNumber.rational(Fraction(3, 4)) * pi * beta
    )
    return a0, a1, a2, a3_ball_closed_form(m)


def a2_normalization(m: int) -> float:
    """Size of the two competing a_2 boundary terms; relative a_2 errors use this scale."""
    d_s = spinor_dimension(m)
    beta = float(beta_value(m))
    return float(SqrtPiNumber.sqrt_pi_power(-m, Fraction(1, 2**m)) * sphere_volume(m)) * d_s * (m - 1) / 3 * (
        1 + 0.75 * math.pi * beta
    )


# smeared variant -----------------------------------------------------------

P = Poly.variable("p")


def _smeared_weights(F: tuple[Fraction, Fraction, Fraction]) -> dict[int, Poly]:
    """Radial integral of F as sum_j w_j(p) mu^{-2j}."""
    f0, f1, f2 = F
    return {
        0: Poly.const(f0 + f1 / 3 + f2 / 5, "p"),
        1: (2 * P * P + 3 * P + 1).scale(f1 / 3) + (4 * P * P + 10 * P + 4).scale(f2 / 15),
        2: (8 * P**4 + 20 * P**3 - 20 * P - 8).scale(f2 / 15),
    }


def _exact_f(F: SmearedF) -> tuple[Fraction, Fraction, Fraction]:
    out = []
    for x in (F.f0, F.f1, F.f2):
        if isinstance(x, float):
            if not x.is_integer():
                raise TypeError("exact smeared coefficients need rational f-values")
            x = int(x)
        out.append(Fraction(x))
    return tuple(out)


def smeared_a3_exact(m: int, F: SmearedF) -> SqrtPiNumber:
    """a_3 of the ball with smearing F(r) = f0 + f1 r^2 + f2 r^4, from residues."""
    _check_m(m)
    f = _exact_f(F)
    s0 = Fraction(m - 3, 2)
    acc = SqrtPiNumber()
    for j, w in _smeared_weights(f).items():
        for k in range(w.degree + 1):
            if not w[k]:
                continue
            for q in (-1, 0, 1, 2):
                for term in a_terms(q):
                    acc = acc + term_residue(term.shifted(j, k, w[k]), s0, m)
    return gamma_exact(s0) * acc


def _ball_data(m: int, F: SmearedF) -> BoundaryGeometryData:
    """Boundary data of the unit ball: L = identity, Theta = (m-1)/2, psi = 0."""
    f0, f1, f2 = _exact_f(F)
    rep = clifford_rep(m)
    k = m - 1
    return BoundaryGeometryData(
        rep,
        theta=GMatrix.scalar(rep.dim, Fraction(m - 1, 2)),
        L=[[int(a == b) for b in range(k)] for a in range(k)],
        F=f0 + f1 + f2,
        F_m=-(2 * f1 + 4 * f2),
        F_mm=2 * f1 + 12 * f2,
    )


def theorem_smeared_a3(m: int, F: SmearedF) -> SqrtPiNumber:
    """a_3 from the boundary density on ball data."""
    _check_m(m)
    return boundary_prefactor(m) * a3_density(_ball_data(m, F)).evaluate()


def theorem_smeared_coefficients(m: int, F: SmearedF) -> tuple[SqrtPiNumber, ...]:
    """a_0..a_3 of the ball with smearing F, from the general densities.

    The ball is flat with E = 0, so a_2 has only its boundary part.
    """
    _check_m(m)
    f0, f1, f2 = _exact_f(F)
    data = _ball_data(m, F)
    vol_s = sphere_volume(m)
    four_pi_half_m = SqrtPiNumber.sqrt_pi_power(-m, Fraction(1, 2**m))
    # int_B F = Vol(S^{m-1}) int_0^1 r^{m-1} F(r) dr
    radial = f0 / m + f1 / (m + 2) + f2 / (m + 4)
    a0 = four_pi_half_m * vol_s * SqrtPiNumber.rational(radial * spinor_dimension(m))
    a1 = boundary_prefactor(m) * a1_density(data).evaluate()
    a2 = four_pi_half_m * vol_s * a2_density(data, "boundary").evaluate()
    return a0, a1, a2, theorem_smeared_a3(m, F)


# radial integrals ----------------------------------------------------------

ZERO_TOL = 1e-10


def _require_zero(p: float, mu: float) -> None:
    jp1 = bessel_j(p + 1, mu)
    if abs(bessel_j(p, mu)) > ZERO_TOL * max(1.0, abs(jp1)):
        raise ValueError(f"mu={mu} is not a zero of J_{p}")


def radial_integral_r3(p: float, mu: float) -> float:
    """int_0^1 r^3 (Jbar_p^2 + Jbar_{p+1}^2)(mu r) dr at a zero mu of J_p."""
    _require_zero(p, mu)
    return r3_weight(p, mu)


def radial_integral_r5(p: float, mu: float) -> float:
    """int_0^1 r^5 (Jbar_p^2 + Jbar_{p+1}^2)(mu r) dr at a zero mu of J_p."""
    _require_zero(p, mu)
    return r5_weight(p, mu)
