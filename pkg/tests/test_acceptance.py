"""The ten acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (also collected
into the terminal summary) before asserting.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest
from scipy.integrate import quad
from scipy.special import jv

from conftest import ACCEPTANCE_LINES
from datasets import random_boundary_data, random_matrix, random_symmetric
from heatspec.ballspec import (
    SmearedF,
    a3_ball_closed_form,
    bessel_zeros,
    listed_residues,
    radial_integral_r3,
    radial_integral_r5,
    residue_pipeline,
    smeared_a3_exact,
    table_a3_ball,
    theorem_smeared_a3,
)
from heatspec.ballspec.numeric import numeric_extraction
from heatspec.ballspec.residues import a2_normalization, theorem_ball_coefficients
from heatspec.barnes import barnes_residue, listed_leading_residues
from heatspec.debye import cumulants
from heatspec.exact import GaussRational, GMatrix, Poly, SqrtPiNumber, gamma_exact
from heatspec.invariants import (
    BoundaryGeometryData,
    a3_density,
    adjoint_data,
    clifford_rep,
    lemma2_verify,
)


def verdict(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_01_lemma2_relations():
    t0 = time.perf_counter()
    report = lemma2_verify()
    elapsed = time.perf_counter() - t0
    ok = report.passed and len(report.groups) == 11 and elapsed < 1.0
    verdict(1, "eleven relation groups hold exactly", ok, f"{sum(report.groups.values())}/11 groups, {elapsed:.3f} s")


def test_criterion_02_cumulants():
    d1, d2 = cumulants(2)
    want1 = Poly([0, Fraction(1, 8), 0, Fraction(-5, 24)], "t")
    want2 = Poly([0, 0, Fraction(1, 16), 0, Fraction(-3, 8), 0, Fraction(5, 16)], "t")
    verdict(2, "D_1 and D_2 from the Debye recursion", d1.poly == want1 and d2.poly == want2, f"D_1 = {d1.poly}; D_2 = {d2.poly}")


def test_criterion_03_barnes_residues():
    bad, offsets = [], set()
    for d in range(4, 13):
        listed = listed_leading_residues(d)
        for z in (d, d - 1, d - 2, d - 3):
            if listed[z] != barnes_residue(z, d).value:
                offsets.add(f"z = d-{d - z}" if d > z else "z = d")
                bad.append(f"d={d} z={z}: residual {listed[z] - barnes_residue(z, d).value}")
    detail = "all 36 match" if not bad else f"{len(bad)}/36 mismatch, only at {', '.join(sorted(offsets))}; first {bad[0]}"
    verdict(3, "four listed Barnes residues, 4 <= d <= 12", not bad, detail)


def test_criterion_04_residue_pipeline():
    problems = []
    for m in (6, 8, 10):
        if residue_pipeline(m) != listed_residues(m).values:
            problems.append(f"listed residues differ at m={m}")
    for m in (4, 6, 8, 10):
        total = gamma_exact(Fraction(m - 3, 2)) * sum(residue_pipeline(m), SqrtPiNumber())
        if total != a3_ball_closed_form(m):
            problems.append(f"residue sum differs at m={m}")
    verdict(4, "listed residues and Gamma-weighted sum", not problems, "; ".join(problems))


def test_criterion_05_table_identity():
    bad = [m for m in (4, 6, 8, 10) if table_a3_ball(m) != a3_ball_closed_form(m)]
    verdict(5, "a3 closed form equals table evaluation", not bad, f"m = 4, 6, 8, 10; failing {bad}" if bad else "m = 4, 6, 8, 10")


@pytest.mark.slow
def test_criterion_06_numeric_oracle_m4():
    t0 = time.perf_counter()
    run = numeric_extraction(4)
    elapsed = time.perf_counter() - t0
    exact = [float(x) for x in theorem_ball_coefficients(4)]
    tols = (1e-6, 1e-4, 1e-3, 5e-2)
    parts, ok = [], elapsed <= 300
    for k, tol in enumerate(tols):
        # a_2 vanishes at m = 4; its two cancelling boundary terms set the scale
        scale = abs(exact[k]) if exact[k] else a2_normalization(4)
        rel = abs(run.extract.a_hat[k] - exact[k]) / scale
        ok = ok and rel <= tol
        parts.append(f"a{k} rel {rel:.2g} <= {tol:g}")
    verdict(6, "numeric heat-trace extraction at m = 4", ok, ", ".join(parts) + f", {elapsed:.1f} s")


def test_criterion_07_smeared_consistency():
    bad = []
    for F in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
        f = SmearedF(*(Fraction(x) for x in F))
        if smeared_a3_exact(4, f) != theorem_smeared_a3(4, f):
            bad.append(F)
    verdict(7, "smeared a3 from residues equals boundary density at m = 4", not bad, f"failing {bad}" if bad else "")


def test_criterion_08_radial_integrals():
    worst = 0.0
    for p in range(1, 11):
        for mu in bessel_zeros(p, p + 15.0)[:3]:
            norm = jv(p + 1, mu) ** 2
            for power, closed in ((3, radial_integral_r3(p, mu)), (5, radial_integral_r5(p, mu))):
                f = lambda r, w=power: r**w * (jv(p, mu * r) ** 2 + jv(p + 1, mu * r) ** 2) / norm  # noqa: E731
                val = quad(f, 0, 1, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
                worst = max(worst, abs(val - closed))
    verdict(8, "Schafheitlin closed forms against quadrature", worst <= 1e-10, f"max abs error {worst:.2g}")


def test_criterion_09_index_symmetry():
    rng = random.Random(20261019)
    failures = 0
    for m in (4, 6):
        for _ in range(100):
            data = random_boundary_data(rng, m)
            if a3_density(data) != a3_density(adjoint_data(data)):
                failures += 1
    verdict(9, "a3 density invariant under the adjoint data map", failures == 0, f"100 datasets each at m = 4, 6; {failures} failures")


def _structural_problems(m: int) -> list[str]:
    rep = clifford_rep(m)
    n, k = rep.dim, m - 1
    rng = random.Random(m)
    out = []
    for i, gi in enumerate(rep.gammas):
        for j, gj in enumerate(rep.gammas):
            if gi.adjoint() @ gj + gj.adjoint() @ gi != GMatrix.scalar(n, 2 if i == j else 0):
                out.append(f"Clifford relation ({i},{j})")
    for a in range(k):
        ga = rep.gamma_T(a)
        if ga.adjoint() != -ga:
            out.append(f"tangential skewness {a}")
        for b in range(k):
            gb = rep.gamma_T(b)
            if ga @ gb + gb @ ga != GMatrix.scalar(n, -2 if a == b else 0):
                out.append(f"tangential relation ({a},{b})")
    L = random_symmetric(rng, k)
    acc = GMatrix.zeros(n)
    for a in range(k):
        for b in range(k):
            acc = acc + rep.gammas[b] @ rep.gammas[a] * L[a][b]
        acc = acc - rep.normal @ rep.normal * L[a][a]
    if acc != GMatrix.zeros(n):
        out.append("L_ab g_b g_a - L_aa g_m g_m != 0")
    twisted = rep.tensor_with(2)
    spin = GMatrix.identity(n)
    total = GaussRational(0)
    for a in range(k):
        for b in range(a + 1, k):
            w = random_matrix(rng, 2)
            total = total + (spin.kron(w) @ twisted.gamma_T(a) @ twisted.gamma_T(b)).trace()
            total = total + (spin.kron(-w) @ twisted.gamma_T(b) @ twisted.gamma_T(a)).trace()
        if (spin.kron(random_matrix(rng, 2)) @ twisted.gamma_T(a)).trace() != 0:
            out.append(f"Tr W_am g_a^T != 0 at a={a}")
    if total != 0:
        out.append("Tr W_ab g_a^T g_b^T != 0")
    theta = GMatrix.scalar(n, Fraction(m - 1, 2))
    if not a3_density(BoundaryGeometryData(rep, theta=theta)).evaluate().is_zero():
        out.append("constant Theta contribution does not vanish")
    return out


def test_criterion_10_structural_clifford_suite():
    problems = _structural_problems(4) + _structural_problems(6)
    verdict(10, "Clifford, tangential, L-identity, W-trace and constant-Theta checks", not problems, "; ".join(problems[:3]) or "m = 4, 6")
