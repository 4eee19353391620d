from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import jv

from heatspec.ballspec import (
    BallConfig,
    CutoffInfeasibleError,
    HeatTraceExpansion,
    HeatTraceSample,
    IllConditionedFitError,
    SmearedF,
    ZeroTable,
    a3_ball_closed_form,
    ball_coefficient,
    bessel_j,
    bessel_zeros,
    extract_coefficients,
    geometric_grid,
    heat_trace,
    listed_residues,
    radial_integral_r3,
    radial_integral_r5,
    residue_pipeline,
    smeared_a3_exact,
    smeared_heat_trace,
    table_a3_ball,
    theorem_ball_coefficients,
    theorem_smeared_a3,
)
from heatspec.ballspec.bessel import BesselDomainError
from heatspec.ballspec.numeric import numeric_extraction
from heatspec.ballspec.residues import theorem_smeared_coefficients
from heatspec.ballspec.zeros import CacheError, load_or_build
from heatspec.exact import SqrtPiNumber, gamma_exact

SQRT_PI = math.sqrt(math.pi)


# Bessel functions and zeros --------------------------------------------------


def test_bessel_j_basic_values():
    assert bessel_j(0, 0.0) == 1.0
    nu, x = 5, 10.0
    lhs = bessel_j(nu - 1, x) + bessel_j(nu + 1, x)
    assert lhs == pytest.approx(2 * nu / x * bessel_j(nu, x), abs=1e-12)


def test_bessel_j_domain():
    with pytest.raises(BesselDomainError):
        bessel_j(251, 1.0)
    with pytest.raises(BesselDomainError):
        bessel_j(1, 601.0)


def test_bessel_zeros_low_orders():
    z1 = bessel_zeros(1, 10.0)
    assert len(z1) == 2
    assert z1[0] == pytest.approx(float(mpmath.besseljzero(1, 1)), abs=1e-12)
    assert z1[0] == pytest.approx(3.8317059702, abs=1e-10)
    assert z1[1] == pytest.approx(7.0155866698, abs=1e-10)
    assert bessel_zeros(2, 6.0)[0] == pytest.approx(5.1356223018, abs=1e-10)
    assert bessel_zeros(3, 4.0) == []


@pytest.mark.parametrize("p", [1, 7, 40, 120])
def test_bessel_zeros_against_mpmath(p):
    z = bessel_zeros(p, p + 40.0)
    ref = [float(mpmath.besseljzero(p, k)) for k in range(1, 4)]
    assert np.allclose(z[:3], ref, rtol=1e-13)


def test_zero_count_grows_like_x_over_pi():
    for x_max in (50.0, 100.0, 200.0):
        n = len(bessel_zeros(3, x_max))
        assert abs(n - x_max / math.pi) < 3


def test_zero_table_audit_clean():
    table = ZeroTable.build(4, 60.0)
    assert table.audit() == []
    assert table.orders()[0] == 1


def test_zero_table_audit_flags_corruption():
    table = ZeroTable.build(4, 30.0)
    table.zeros[2] = table.zeros[2] + 1e-3
    assert table.audit()


def test_zero_table_round_trip_is_exact():
    table = ZeroTable.build(6, 40.0)
    text = table.dumps()
    assert text.startswith("heatspec-zeros v1 m=6 xmax=40.0\n")
    back = ZeroTable.loads(text)
    assert back.orders() == table.orders()
    for p in table.orders():
        assert np.array_equal(back.zeros[p], table.zeros[p])


@pytest.mark.parametrize(
    "text",
    ["", "zeros v2 m=4 xmax=10\n", "heatspec-zeros v1 m=4\n", "heatspec-zeros v1 m=4 xmax=10.0\n1 2 3.8\n", "heatspec-zeros v1 m=4 xmax=10.0\n1 1 abc\n"],
)
def test_zero_table_loads_rejects_bad_text(text):
    with pytest.raises(CacheError):
        ZeroTable.loads(text)


def test_cache_build_load_and_refresh(tmp_path):
    first = load_or_build(4, 30.0, directory=tmp_path)
    assert first.action == "built"
    assert first.path.read_text().startswith("heatspec-zeros v1")
    second = load_or_build(4, 30.0, directory=tmp_path)
    assert second.action == "loaded" and not second.audit_issues
    assert all(np.array_equal(second.table.zeros[p], first.table.zeros[p]) for p in first.table.orders())

    lines = first.path.read_text().splitlines()
    p, k, x = lines[3].split()
    lines[3] = f"{p} {k} {float(x) + 0.5!r}"
    first.path.write_text("\n".join(lines) + "\n")
    stale = load_or_build(4, 30.0, directory=tmp_path)
    assert stale.audit_issues and stale.action == "loaded"
    fixed = load_or_build(4, 30.0, refresh=True, directory=tmp_path)
    assert fixed.action == "rebuilt" and fixed.table.audit() == []


# heat trace ----------------------------------------------------------------


def test_ball_config():
    cfg = BallConfig(4)
    assert cfg.d_s == 4
    assert cfg.p_of_n(0) == 1
    assert cfg.degeneracy(0) == 8
    assert cfg.lowest_zero == pytest.approx(3.8317059702, abs=1e-10)
    with pytest.raises(ValueError):
        BallConfig(5)


def test_heat_trace_at_one_is_dominated_by_first_zero():
    cfg = BallConfig(4)
    k = heat_trace(cfg, 1.0)
    lead = 8 * math.exp(-cfg.lowest_zero**2)
    assert k.value == pytest.approx(3.4e-6, rel=0.02)
    assert lead <= k.value < 1.01 * lead + 1e-7
    assert k.tail_bound <= 1e-15 * k.value


def test_heat_trace_direct_sum_oracle():
    # independent summation with mpmath zeros for t where few zeros matter
    cfg, t = BallConfig(4), 0.2
    total = 0.0
    for n in range(0, 12):
        p = n + 1
        for k in range(1, 6):
            j = float(mpmath.besseljzero(p, k))
            total += cfg.degeneracy(n) * math.exp(-t * j * j)
    assert heat_trace(cfg, t).value == pytest.approx(total, rel=1e-12)


def test_heat_trace_monotone():
    cfg = BallConfig(4)
    zeros = ZeroTable.build(4, cfg.mu_max(0.01))
    values = [heat_trace(cfg, t, zeros=zeros).value for t in (0.01, 0.02, 0.05, 0.1, 0.5)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_heat_trace_leading_scaling():
    cfg = BallConfig(4)
    t = 0.002
    a0, a1 = (float(x) for x in theorem_ball_coefficients(4)[:2])
    # K t^2 = a0 + a1 sqrt(t) + O(t)
    scaled = heat_trace(cfg, t).value * t**2
    assert scaled == pytest.approx(a0, rel=0.1)
    assert scaled == pytest.approx(a0 + a1 * math.sqrt(t), rel=1e-3)


def test_cutoff_infeasible():
    cfg = BallConfig(4)
    with pytest.raises(CutoffInfeasibleError):
        heat_trace(cfg, cfg.t_min() / 2)
    with pytest.raises(ValueError):
        heat_trace(cfg, 0.0)


def test_smeared_unit_weight_is_plain_trace():
    cfg = BallConfig(4)
    zeros = ZeroTable.build(4, cfg.mu_max(0.05))
    assert smeared_heat_trace(cfg, SmearedF(), 0.05, zeros=zeros).value == heat_trace(cfg, 0.05, zeros=zeros).value


def test_smeared_f_boundary_dictionary():
    F = SmearedF(Fraction(1), Fraction(1), Fraction(1))
    assert (F.F_boundary, F.F_m, F.F_mm) == (3, -6, 14)
    assert SmearedF().is_unit()


# fitting -------------------------------------------------------------------


def _samples(fn, grid):
    return [HeatTraceSample(float(t), float(fn(t)), 0.0) for t in grid]


def test_synthetic_single_term_recovery():
    grid = geometric_grid(1e-2, 1.0)
    ext = extract_coefficients(_samples(lambda t: 2 * t**-2, grid), m=4)
    assert ext.a_hat[0] == pytest.approx(2.0, abs=1e-10)
    assert all(abs(a) < 1e-10 for a in ext.a_hat[1:])


def test_synthetic_two_term_recovery():
    grid = geometric_grid(1e-2, 1.0)
    ext = extract_coefficients(_samples(lambda t: 2 * t**-2 + 0.75 * t**-0.5, grid), m=4)
    assert ext.a_hat[0] == pytest.approx(2.0, abs=1e-10)
    assert ext.a_hat[3] == pytest.approx(0.75, abs=1e-10)


def test_extract_needs_enough_samples():
    with pytest.raises(ValueError):
        extract_coefficients(_samples(lambda t: t**-2, [0.1, 0.2, 0.3]), m=4)


def test_estimator_api():
    t = geometric_grid(1e-2, 1.0)
    y = 2 * t**-2 + t**-1.5
    est = HeatTraceExpansion(m=4, n_terms=4)
    assert est.get_params() == {"m": 4, "n_terms": 4, "max_condition": 1e10}
    est.fit(t[:, None], y)
    assert np.allclose(est.coef_, [2, 1, 0, 0], atol=1e-10)
    assert np.allclose(est.predict(t[:, None]), y, rtol=1e-12)
    assert est.score(t[:, None], y) == pytest.approx(1.0)


def test_estimator_reports_ill_conditioning():
    t = np.linspace(0.5, 0.5001, 12)
    with pytest.raises(IllConditionedFitError):
        HeatTraceExpansion(m=4, n_terms=6).fit(t[:, None], t**-2)


def test_geometric_grid():
    g = geometric_grid(0.01, 0.08, ratio=2.0)
    assert np.allclose(g, [0.01, 0.02, 0.04, 0.08])
    with pytest.raises(ValueError):
        geometric_grid(0.1, 0.01)


# exact residues ------------------------------------------------------------


def test_listed_residue_examples():
    assert listed_residues(6).values[1] == SqrtPiNumber.rational(Fraction(1, 12))
    assert listed_residues(4).values[3] == SqrtPiNumber.rational(Fraction(-11, 128))
    assert listed_residues(4).gamma_zero_convention


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_pipeline_reproduces_listed_residues(m):
    assert residue_pipeline(m) == listed_residues(m).values


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_sum_of_residues_gives_a3(m):
    total = gamma_exact(Fraction(m - 3, 2)) * sum(residue_pipeline(m), SqrtPiNumber())
    assert total == a3_ball_closed_form(m)
    assert table_a3_ball(m) == a3_ball_closed_form(m)


def test_a3_closed_form_m4():
    # (3/128)(40 - 33 pi/4)/((9/4) sqrt pi)
    expected = SqrtPiNumber({-1: Fraction(3 * 40 * 4, 128 * 9), 1: Fraction(-3 * 33, 128 * 9)})
    assert a3_ball_closed_form(4) == expected
    assert float(expected) == pytest.approx(0.0827587403327057, rel=1e-14)


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_ball_coefficients_from_residues_match_general_formulas(m):
    assert tuple(ball_coefficient(m, k) for k in range(4)) == theorem_ball_coefficients(m)


def test_a2_for_m6_has_pi_term():
    assert ball_coefficient(6, 2) == SqrtPiNumber.rational(Fraction(1, 24))


@pytest.mark.parametrize("m", [4, 6, 8])
@pytest.mark.parametrize("F", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, -1, 3)])
def test_smeared_a3_matches_boundary_density(m, F):
    f = SmearedF(*(Fraction(x) for x in F))
    assert smeared_a3_exact(m, f) == theorem_smeared_a3(m, f)


def test_smeared_unit_reduces_to_ball():
    assert smeared_a3_exact(4, SmearedF()) == a3_ball_closed_form(4)


def test_smeared_exact_rejects_non_integral_floats():
    with pytest.raises(TypeError):
        smeared_a3_exact(4, SmearedF(0.5, 0.0, 0.0))


# radial integrals ----------------------------------------------------------


def _quad(power: int, p: int, mu: float) -> float:
    norm = jv(p + 1, mu) ** 2
    f = lambda r: r**power * (jv(p, mu * r) ** 2 + jv(p + 1, mu * r) ** 2) / norm  # noqa: E731
    return quad(f, 0, 1, epsabs=1e-14, epsrel=1e-13, limit=200)[0]


@pytest.mark.parametrize("p", [1, 4, 9])
def test_radial_integrals_against_quadrature(p):
    for mu in bessel_zeros(p, p + 12.0)[:2]:
        assert radial_integral_r3(p, mu) == pytest.approx(_quad(3, p, mu), abs=1e-10)
        assert radial_integral_r5(p, mu) == pytest.approx(_quad(5, p, mu), abs=1e-10)
        assert _quad(1, p, mu) == pytest.approx(1.0, abs=1e-10)


def test_radial_integral_example():
    mu = bessel_zeros(1, 5.0)[0]
    assert radial_integral_r3(1, mu) == pytest.approx(2 / mu**2 + 1 / 3, rel=1e-15)
    assert radial_integral_r3(1, mu) == pytest.approx(0.46955, abs=1e-5)


def test_radial_integral_limits():
    mu = bessel_zeros(2, 240.0)[-1]
    assert radial_integral_r3(2, mu) == pytest.approx(1 / 3, abs=1e-3)
    assert radial_integral_r5(2, mu) == pytest.approx(1 / 5, abs=1e-3)


def test_radial_integral_requires_a_zero():
    with pytest.raises(ValueError):
        radial_integral_r3(1, 4.0)
    with pytest.raises(ValueError):
        radial_integral_r5(1, 4.0)


# smeared numerics ----------------------------------------------------------


@pytest.mark.slow
def test_smeared_numeric_extraction_m4():
    F = SmearedF(Fraction(1), Fraction(1), Fraction(1))
    run = numeric_extraction(4, F=F)
    exact = [float(x) for x in theorem_smeared_coefficients(4, F)]
    for k, tol in enumerate((1e-6, 1e-4, 1e-3, 5e-2)):
        assert abs(run.extract.a_hat[k] - exact[k]) <= tol * abs(exact[k])
