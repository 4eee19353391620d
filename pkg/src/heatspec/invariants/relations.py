"""Exact verification of the linear relations tying the coefficient table
together.  Every relation is a residual in Q(m)[beta] that must vanish
identically; nothing is evaluated at a sample dimension."""

from __future__ import annotations

from dataclasses import dataclass

from ..exact import CoeffExpr
from .table import BETA, M, CoefficientTable, coefficient_table


@dataclass(frozen=True)
class RelationLine:
    group: int
    label: str
    residual: CoeffExpr

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"({self.label})  residual = {self.residual}  {verdict}"


@dataclass(frozen=True)
class RelationReport:
    lines: tuple[RelationLine, ...]

    @property
    def groups(self) -> dict[int, bool]:
        out: dict[int, bool] = {}
        for line in self.lines:
            out[line.group] = out.get(line.group, True) and line.passed
        return out

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def failing(self) -> list[str]:
        return [line.label for line in self.lines if not line.passed]

    def render(self) -> str:
        return "\n".join(line.render() for line in self.lines)


def _relations(t: CoefficientTable) -> list[tuple[int, str, CoeffExpr]]:
    d, e = t.d, t.e
    m, b = M, BETA
    r = (m - 1) * b / (m - 2) - 1
    rels: list[tuple[int, str, CoeffExpr]] = []
    for i in (1, 4, 7, 8, 11, 19):
        rels.append((1, f"1:d{i}", d[i]))
    for i in (2, 5, 7):
        rels.append((1, f"1:e{i}", e[i]))
    rels += [
        (2, "2a:e3", e[3]),
        (2, "2a:e8", e[8]),
        (2, "2b", e[0] - (m - 1) * e[1]),
        (2, "2c", e[4] - (m - 1) * e[6]),
        (3, "3:d14", d[14]),
        (3, "3:d15", d[15]),
        (4, "4:d6", d[6]),
        (4, "4:d10", d[10]),
        (5, "5a", d[18]),
        (5, "5b", 2 * (m - 1) * d[12] + d[13] - 2 * d[16] + 2 * (1 - m) * d[17] + (3 - m) * d[20]),
        (5, "5c", 2 * (1 - m) * d[12] + (1 - m) * d[13] + (3 - m) * d[21]),
        (6, "6a", 2 * d[0] + d[2] + (m - 3) * (2 * d[3] + d[5])),
        (6, "6b", -2 * d[0] + d[2] + (m - 1) * (2 * d[3] - d[5])),
        (6, "6c", e[4] + (m - 3) * e[6]),
        (6, "6d", d[9]),
        (7, "7", -2 * d[0] + d[2] - (m - 1) * (2 * d[3] - d[5]) - (m - 2) * (b - 1) / 4),
        (
            8,
            "8",
            (b - 1) / 4
            + 2 * d[0]
            + d[2]
            + 2 * (m - 1) * d[3]
            + (m - 1) * d[5]
            + e[0]
            + (m - 1) * e[1]
            - 2 * e[4]
            - 2 * (m - 1) * e[6],
        ),
        (9, "9a", 2 * d[0] + d[2] - (m - 3) * r / 8),
        (9, "9b", 2 * d[3] + d[5] + r / 8),
        (9, "9c", d[12] + r / 48),
        (10, "10a", d[16] + (m - 1) * d[17] - ((17 - 7 * m) / 384 + (4 * m - 11) * b / 48)),
        (10, "10b", d[20] - ((5 * m - 7) / 8 - (5 * m - 9) * b / 3) / (8 * (m - 3))),
        (10, "10c", d[21] - (m - 1) * (2 * b - 1) / (16 * (m - 3))),
        (
            11,
            "11",
            d[16] + d[17] - ((m * m + 8 * m - 17) / 8 - (3 * m - 4) * b) / (16 * (m * m - 1)),
        ),
    ]
    return rels


def lemma2_verify(table: CoefficientTable | None = None) -> RelationReport:
    """Evaluate every relation group on ``table`` (default: the true table)."""
    t = table if table is not None else coefficient_table()
    return RelationReport(tuple(RelationLine(g, lab, res) for g, lab, res in _relations(t)))

