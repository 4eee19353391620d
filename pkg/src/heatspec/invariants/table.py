"""The universal coefficients d_0..d_21 and e_0..e_8 of the a_3 boundary term."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import CoeffExpr

N_D = 22
N_E = 9

M = CoeffExpr.m()
BETA = CoeffExpr.beta()


def _q(p: int, q: int = 1) -> CoeffExpr:
    return CoeffExpr.const(Fraction(p, q))


@dataclass(frozen=True)
class CoefficientTable:
    d: tuple[CoeffExpr, ...]
    e: tuple[CoeffExpr, ...]

    def __post_init__(self):
        if len(self.d) != N_D or len(self.e) != N_E:
            raise ValueError(f"table needs {N_D} d-entries and {N_E} e-entries")

    def replace(self, *, d: dict[int, CoeffExpr] | None = None, e: dict[int, CoeffExpr] | None = None):
        """A copy with some entries overridden (alternative tables, negative controls)."""
        dd = list(self.d)
        ee = list(self.e)
        for i, v in (d or {}).items():
            dd[i] = CoeffExpr.coerce(v)
        for i, v in (e or {}).items():
            ee[i] = CoeffExpr.coerce(v)
        return CoefficientTable(tuple(dd), tuple(ee))

    def nonzero(self) -> dict[str, CoeffExpr]:
        out = {f"d{i}": x for i, x in enumerate(self.d) if not x.is_zero()}
        out.update({f"e{i}": x for i, x in enumerate(self.e) if not x.is_zero()})
        return out


def _build() -> CoefficientTable:
    m, b = M, BETA
    r = b / (m - 2)  # beta/(m-2) recurs everywhere
    d = [CoeffExpr() for _ in range(N_D)]
    e = [CoeffExpr() for _ in range(N_E)]
    d[0] = _q(1, 32) * (1 - r)
    d[2] = _q(1, 16) * (5 - 2 * m + (7 - 8 * m + 2 * m * m) * r)
    d[3] = (2 * m - 3 - (2 * m * m - 6 * m + 5) * r) / (32 * (m - 1))
    d[5] = (1 + (3 - 2 * m) * r) / (16 * (m - 1))
    d[12] = _q(-1, 48) * ((m - 1) * r - 1)
    d[13] = _q(1, 48) * (1 - (4 * m - 10) * r)
    d[16] = (17 + 5 * m) / (192 * (m + 1)) + (23 - 2 * m - 4 * m * m) * r / (48 * (m + 1))
    d[17] = -(17 + 7 * m * m) / (384 * (m * m - 1)) + (4 * m**3 - 11 * m * m + 5 * m - 1) * r / (
        48 * (m * m - 1)
    )
    d[20] = ((5 * m - 7) / 8 - (5 * m - 9) * b / 3) / (8 * (m - 3))
    d[21] = (m - 1) * (2 * b - 1) / (16 * (m - 3))
    e[0] = r / 8
    e[1] = r / (8 * (m - 1))
    return CoefficientTable(tuple(d), tuple(e))


_TABLE = _build()


def coefficient_table(tamper: bool = False) -> CoefficientTable:
    """The exact table.  ``tamper=True`` returns a negative control with a
    spurious ``d_1 = 1/7`` and a perturbed ``e_1``."""
    if not tamper:
        return _TABLE
    return _TABLE.replace(d={1: _q(1, 7)}, e={1: _TABLE.e[1] + _q(1, 1000)})
