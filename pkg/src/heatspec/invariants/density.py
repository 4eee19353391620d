"""Boundary and interior densities of a_0 .. a_3 over concrete Clifford data.

Every density is a trace of matrix products times a table coefficient, so
the results live in Q(i)[beta, sqrt(pi)] and all comparisons are exact.
Prefactors such as (4 pi)^{-(m-1)/2} and the boundary volume are kept out of
the densities; :func:`boundary_prefactor` supplies them for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from ..exact import CoeffExpr, GaussRational, GMatrix, SqrtPiNumber, beta_value, gamma_half, trace_product
from .clifford import CliffordRep
from .table import CoefficientTable, coefficient_table

Key = tuple[int, int]  # (power of beta, power of sqrt(pi))


def _exact_scalar(x, name: str) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"{name} must be an exact rational, got {type(x).__name__}")


def _matrix_list(xs, n: int, count: int, name: str) -> tuple[GMatrix, ...]:
    if xs is None:
        return tuple(GMatrix.zeros(n) for _ in range(count))
    xs = tuple(xs)
    if len(xs) != count:
        raise ValueError(f"{name} needs {count} entries, got {len(xs)}")
    for x in xs:
        if x.n != n:
            raise ValueError(f"{name} entry has size {x.n}, expected {n}")
    return xs


@dataclass(frozen=True)
class BoundaryGeometryData:
    """Pointwise boundary data; unspecified slots default to zero.

    ``L`` is the second fundamental form as an (m-1)x(m-1) rational matrix.
    ``psi_hat_m``, ``psi_hat_a`` and ``theta_a`` stand in for the covariant
    derivatives of psi-hat and Theta; ``W_ab`` and ``W_am`` for the
    curvature endomorphisms.  ``F``, ``F_m`` and ``F_mm`` are the smearing
    function and its first two normal derivatives on the boundary.
    """

    rep: CliffordRep
    psi: GMatrix | None = None
    theta: GMatrix | None = None
    L: Sequence[Sequence] | None = None
    tau: Fraction = Fraction(0)
    rho_mm: Fraction = Fraction(0)
    F: Fraction = Fraction(1)
    F_m: Fraction = Fraction(0)
    F_mm: Fraction = Fraction(0)
    E: GMatrix | None = None
    W_ab: Sequence[Sequence[GMatrix]] | None = None
    W_am: Sequence[GMatrix] | None = None
    psi_hat_m: GMatrix | None = None
    psi_hat_a: Sequence[GMatrix] | None = None
    theta_a: Sequence[GMatrix] | None = None

    def __post_init__(self):
        n, k = self.rep.dim, self.rep.m - 1
        set_ = object.__setattr__
        for name in ("psi", "theta", "E", "psi_hat_m"):
            x = getattr(self, name)
            if x is None:
                set_(self, name, GMatrix.zeros(n))
            elif x.n != n:
                raise ValueError(f"{name} has size {x.n}, expected {n}")
        if not self.theta.is_hermitian():
            raise ValueError("theta must be Hermitian")
        for name in ("tau", "rho_mm", "F", "F_m", "F_mm"):
            set_(self, name, _exact_scalar(getattr(self, name), name))
        if self.L is None:
            L = tuple(tuple(Fraction(0) for _ in range(k)) for _ in range(k))
        else:
            L = tuple(tuple(_exact_scalar(x, "L") for x in row) for row in self.L)
            if len(L) != k or any(len(r) != k for r in L):
                raise ValueError(f"L must be {k}x{k}")
            if any(L[a][b] != L[b][a] for a in range(k) for b in range(k)):
                raise ValueError("L must be symmetric")
        set_(self, "L", L)
        if self.W_ab is None:
            W = tuple(tuple(GMatrix.zeros(n) for _ in range(k)) for _ in range(k))
        else:
            W = tuple(_matrix_list(row, n, k, "W_ab") for row in self.W_ab)
            if len(W) != k:
                raise ValueError(f"W_ab needs {k} rows")
        set_(self, "W_ab", W)
        set_(self, "W_am", _matrix_list(self.W_am, n, k, "W_am"))
        set_(self, "psi_hat_a", _matrix_list(self.psi_hat_a, n, k, "psi_hat_a"))
        set_(self, "theta_a", _matrix_list(self.theta_a, n, k, "theta_a"))

    @property
    def m(self) -> int:
        return self.rep.m

    @property
    def psi_hat(self) -> GMatrix:
        return self.rep.normal_inverse @ self.psi

    @property
    def L_trace(self) -> Fraction:
        return sum((self.L[a][a] for a in range(self.m - 1)), Fraction(0))

    @property
    def L_square(self) -> Fraction:
        return sum((x * x for row in self.L for x in row), Fraction(0))


@dataclass(frozen=True)
class DensityValue:
    """``sum c_{jk} beta^j sqrt(pi)^k`` with Gaussian-rational ``c_{jk}`` at fixed m."""

    m: int
    terms: Mapping[Key, GaussRational] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    @property
    def c0(self) -> GaussRational:
        return self.terms.get((0, 0), GaussRational(0))

    @property
    def c1(self) -> GaussRational:
        return self.terms.get((1, 0), GaussRational(0))

    def is_real(self) -> bool:
        return all(v.im == 0 for v in self.terms.values())

    def _part(self, which: str) -> SqrtPiNumber:
        beta = beta_value(self.m)
        out = SqrtPiNumber()
        for (j, k), v in self.terms.items():
            out = out + SqrtPiNumber.sqrt_pi_power(k, getattr(v, which)) * beta**j
        return out

    def evaluate(self) -> SqrtPiNumber:
        """Substitute beta(m); the value must be real."""
        if not self.is_real():
            raise ValueError(f"density has a non-zero imaginary part: {self.imag()}")
        return self._part("re")

    def imag(self) -> SqrtPiNumber:
        return self._part("im")

    def __float__(self):
        return float(self.evaluate())

    def __add__(self, other: "DensityValue") -> "DensityValue":
        if not isinstance(other, DensityValue):
            return NotImplemented
        if other.m != self.m:
            raise ValueError("densities at different dimensions")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, GaussRational(0)) + v
        return DensityValue(self.m, out)

    def scale(self, c) -> "DensityValue":
        return DensityValue(self.m, {k: v * Fraction(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, DensityValue):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (j, k), v in sorted(self.terms.items()):
            s = f"({v})"
            if j:
                s += "*beta" + (f"^{j}" if j > 1 else "")
            if k:
                s += f"*pi^{{{k}/2}}" if k % 2 else f"*pi^{{{k // 2}}}"
            parts.append(s)
        return " + ".join(parts)


class _Accumulator:
    def __init__(self, m: int):
        self.m = m
        self.terms: dict[Key, GaussRational] = {}

    def add(self, coeff: CoeffExpr, value, sqrt_pi: int = 0):
        value = GaussRational.coerce(value)
        if not value:
            return
        for j, c in coeff.at_m(self.m).items():
            key = (j, sqrt_pi)
            self.terms[key] = self.terms.get(key, GaussRational(0)) + value * c

    def result(self) -> DensityValue:
        return DensityValue(self.m, self.terms)


def _sandwich(gs: Sequence[GMatrix], x: GMatrix, y: GMatrix) -> GaussRational:
    """sum_a Tr(gamma_a x gamma_a y)."""
    acc = GaussRational(0)
    for g in gs:
        acc = acc + trace_product(g @ x, g @ y)
    return acc


def _pair_trace(gs: Sequence[GMatrix], xs: Sequence[GMatrix]) -> GaussRational:
    """sum_a Tr(gamma_a x_a)."""
    acc = GaussRational(0)
    for g, x in zip(gs, xs):
        acc = acc + trace_product(g, x)
    return acc


def a3_density(data: BoundaryGeometryData, table: CoefficientTable | None = None) -> DensityValue:
    """The full a_3 boundary integrand, every basis invariant included."""
    t = table if table is not None else coefficient_table()
    d, e = t.d, t.e
    acc = _Accumulator(data.m)
    gs = data.rep.tangential()
    tr_i = data.rep.dim
    F, Fm, Fmm = data.F, data.F_m, data.F_mm
    ph = data.psi_hat
    ps = ph.adjoint()
    theta = data.theta
    laa = data.L_trace

    def add_pm(k_plus: int, k_minus: int, x: GaussRational, y: GaussRational, weight):
        acc.add(d[k_plus], (x + y) * weight)
        acc.add(d[k_minus], (x - y) * weight)

    add_pm(0, 1, trace_product(ph, ph), trace_product(ps, ps), F)
    acc.add(d[2], trace_product(ps, ph) * F)
    add_pm(3, 4, _sandwich(gs, ph, ph), _sandwich(gs, ps, ps), F)
    acc.add(d[5], _sandwich(gs, ps, ph) * F)
    pm = data.psi_hat_m
    add_pm(6, 7, pm.trace(), pm.adjoint().trace(), F)
    pa = data.psi_hat_a
    add_pm(8, 9, _pair_trace(gs, pa), _pair_trace(gs, [x.adjoint() for x in pa]), F)
    add_pm(10, 11, ph.trace() * laa, ps.trace() * laa, F)
    acc.add(d[12], F * data.tau * tr_i)
    acc.add(d[13], F * data.rho_mm * tr_i)
    k = data.m - 1
    w_ab = GaussRational(0)
    for a in range(k):
        for b in range(k):
            w_ab = w_ab + trace_product(data.W_ab[a][b], gs[a] @ gs[b])
    acc.add(d[14], w_ab * F)
    acc.add(d[15], _pair_trace(gs, data.W_am) * F)
    acc.add(d[16], F * data.L_square * tr_i)
    acc.add(d[17], F * laa * laa * tr_i)
    add_pm(18, 19, ph.trace(), ps.trace(), Fm)
    acc.add(d[20], Fm * laa * tr_i)
    acc.add(d[21], Fmm * tr_i)

    acc.add(e[0], trace_product(theta, theta) * F)
    acc.add(e[1], _sandwich(gs, theta, theta) * F)
    acc.add(e[2], _pair_trace(gs, data.theta_a) * F)
    acc.add(e[3], theta.trace() * laa * F)
    acc.add(e[4], (trace_product(theta, ph) + trace_product(theta, ps)) * F)
    acc.add(e[5], (trace_product(theta, ph) - trace_product(theta, ps)) * F)
    acc.add(e[6], (_sandwich(gs, theta, ph) + _sandwich(gs, theta, ps)) * F)
    acc.add(e[7], (_sandwich(gs, theta, ph) - _sandwich(gs, theta, ps)) * F)
    acc.add(e[8], theta.trace() * Fm)
    return acc.result()


def a0_density(data: BoundaryGeometryData) -> DensityValue:
    """Interior density Tr{F}."""
    acc = _Accumulator(data.m)
    acc.add(CoeffExpr.const(1), data.F * data.rep.dim)
    return acc.result()


def a1_density(data: BoundaryGeometryData) -> DensityValue:
    """Boundary density (beta - 1)/4 Tr{F}."""
    acc = _Accumulator(data.m)
    acc.add((CoeffExpr.beta() - 1) / 4, data.F * data.rep.dim)
    return acc.result()


def a2_density(data: BoundaryGeometryData, part: str = "boundary") -> DensityValue:
    """a_2 integrand; ``part`` is "interior" (tau, E) or "boundary"."""
    acc = _Accumulator(data.m)
    tr_i = data.rep.dim
    one = CoeffExpr.const(1)
    if part == "interior":
        acc.add(one, data.F * data.tau * tr_i / 6)
        acc.add(one, data.E.trace() * data.F)
    elif part == "boundary":
        m = data.m
        ph = data.psi_hat
        acc.add(one, (ph.trace() + ph.adjoint().trace()) * (data.F / 2))
        lf = data.L_trace * data.F * tr_i
        acc.add(one, lf / 3)
        # the pi*beta pieces carry sqrt(pi)^2
        acc.add(CoeffExpr.beta(), lf * Fraction(-1, 4), sqrt_pi=2)
        fm = data.F_m * tr_i * Fraction(-(m - 1), 2 * (m - 2))
        acc.add(one, fm)
        acc.add(CoeffExpr.beta(), fm * Fraction(-1, 2), sqrt_pi=2)
    else:
        raise ValueError(f"part must be 'interior' or 'boundary', got {part!r}")
    return acc.result()


def adjoint_data(data: BoundaryGeometryData) -> BoundaryGeometryData:
    """Data of the adjoint problem: psi -> psi^*, Theta -> -g Theta g^{-1} + L_aa."""
    g, g_inv = data.rep.normal, data.rep.normal_inverse
    theta2 = -(g @ data.theta @ g_inv) + GMatrix.scalar(data.rep.dim, data.L_trace)
    return replace(data, psi=data.psi.adjoint(), theta=theta2)


def sphere_volume(m: int) -> SqrtPiNumber:
    """Vol(S^{m-1}) = 2 sqrt(pi)^m / Gamma(m/2)."""
    return SqrtPiNumber.sqrt_pi_power(m, 2) / gamma_half(m)


def boundary_prefactor(m: int) -> SqrtPiNumber:
    """(4 pi)^{-(m-1)/2} Vol(S^{m-1}), turning a constant density into a_3 on the unit ball."""
    return SqrtPiNumber.sqrt_pi_power(1 - m, Fraction(1, 2 ** (m - 1))) * sphere_volume(m)
