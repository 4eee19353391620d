"""Zeros of J_p and their on-disk cache.

Cache format (plain text)::

    heatspec-zeros v1 m=<m> xmax=<x>
    <p> <k> <zero>          # one line per zero, zero printed with %.17g

``%.17g`` round-trips a double exactly, so a reread table is bit-identical.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bessel import NU_MAX, X_MAX, bessel_j, bessel_j_prime

HEADER = "heatspec-zeros v1"
RESIDUAL_TOL = 1e-12


class CacheError(RuntimeError):
    pass


def _polish(p: float, lo: float, hi: float, f_lo: float) -> float:
    """Newton iteration kept inside the sign-change bracket [lo, hi]."""
    x = 0.5 * (lo + hi)
    for _ in range(200):
        f = bessel_j(p, x)
        if f == 0.0:
            return x
        if (f > 0) == (f_lo > 0):
            lo, f_lo = x, f
        else:
            hi = x
        df = bessel_j_prime(p, x)
        step = f / df if df != 0.0 else math.inf
        nxt = x - step
        if not (lo < nxt < hi):
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 2e-16 * x or hi - lo <= 4e-16 * x:
            return nxt
        x = nxt
    return x


def bessel_zeros(p: float, x_max: float) -> list[float]:
    """All zeros of J_p in (0, x_max], in increasing order.

    Consecutive zeros are more than pi apart and the first exceeds p, so a
    sweep from x = p with step pi/2 sees every zero as a single sign change.
    """
    if p > NU_MAX:
        raise ValueError(f"order {p} beyond the supported {NU_MAX}")
    if x_max > X_MAX:
        raise ValueError(f"x_max {x_max} beyond the supported {X_MAX}")
    out: list[float] = []
    x = max(p, 1e-3)
    if x >= x_max:
        return out
    f = bessel_j(p, x)
    step = math.pi / 2
    while x < x_max:
        x2 = min(x + step, x_max)
        f2 = bessel_j(p, x2)
        if f2 == 0.0:
            out.append(x2)
        elif f != 0.0 and (f > 0) != (f2 > 0):
            out.append(_polish(p, x, x2, f))
        x, f = x2, f2
    return out


@dataclass
class ZeroTable:
    """Zeros of J_p for p = n + m/2 - 1, all orders with a zero below x_max."""

    m: int
    x_max: float
    zeros: dict[int, np.ndarray] = field(default_factory=dict)

    @classmethod
    def build(cls, m: int, x_max: float) -> "ZeroTable":
        if m % 2 or m < 4:
            raise ValueError(f"ball spectra need an even m >= 4, got {m}")
        table = cls(m, float(x_max))
        p = m // 2 - 1
        while p < x_max:
            table.zeros[p] = np.array(bessel_zeros(p, x_max))
            p += 1
        return table

    def orders(self) -> list[int]:
        return sorted(self.zeros)

    def count(self) -> int:
        return sum(len(z) for z in self.zeros.values())

    def audit(self) -> list[str]:
        """Monotonicity, interlacing and residual checks; empty when clean."""
        issues = []
        for p in self.orders():
            z = self.zeros[p]
            if len(z) and (np.any(np.diff(z) <= 0) or z[0] <= p):
                issues.append(f"p={p}: zeros not strictly increasing above p")
            for k, x in enumerate(z):
                r = abs(bessel_j(p, x))
                if r > RESIDUAL_TOL * max(1.0, abs(bessel_j_prime(p, x))):
                    issues.append(f"p={p} k={k + 1}: residual {r:.3g}")
            nxt = self.zeros.get(p + 1)
            if nxt is None:
                continue
            for k in range(len(nxt)):
                if not z[k] < nxt[k]:
                    issues.append(f"p={p} k={k + 1}: interlacing j(p,k) < j(p+1,k) broken")
                if k + 1 < len(z) and not nxt[k] < z[k + 1]:
                    issues.append(f"p={p} k={k + 1}: interlacing j(p+1,k) < j(p,k+1) broken")
            if len(nxt) > len(z):
                issues.append(f"p={p}: order p+1 has more zeros than order p")
        return issues

    def restricted(self, mu_max: float) -> dict[int, np.ndarray]:
        return {p: z[z <= mu_max] for p, z in self.zeros.items() if p <= mu_max}

    def dumps(self) -> str:
        lines = [f"{HEADER} m={self.m} xmax={self.x_max!r}"]
        for p in self.orders():
            for k, x in enumerate(self.zeros[p], start=1):
                lines.append(f"{p} {k} {x:.17g}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ZeroTable":
        lines = text.splitlines()
        if not lines or not lines[0].startswith(HEADER + " "):
            raise CacheError("missing or unknown zero-cache header")
        try:
            fields = dict(item.split("=", 1) for item in lines[0][len(HEADER) + 1 :].split())
            m, x_max = int(fields["m"]), float(fields["xmax"])
        except (KeyError, ValueError) as exc:
            raise CacheError(f"bad header {lines[0]!r}") from exc
        table = cls(m, x_max)
        acc: dict[int, list[float]] = {}
        for ln, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if not parts:
                continue
            try:
                p, k, x = int(parts[0]), int(parts[1]), float(parts[2])
            except (IndexError, ValueError) as exc:
                raise CacheError(f"line {ln}: malformed record {line!r}") from exc
            lst = acc.setdefault(p, [])
            if k != len(lst) + 1:
                raise CacheError(f"line {ln}: zero index {k} out of sequence")
            lst.append(x)
        p = m // 2 - 1
        while p < x_max:
            table.zeros[p] = np.array(acc.pop(p, []))
            p += 1
        if acc:
            raise CacheError(f"unexpected orders {sorted(acc)} in cache")
        return table


def cache_dir() -> Path:
    return Path(os.environ.get("HEATSPEC_CACHE_DIR", "cache"))


def cache_path(m: int, x_max: float, directory: Path | None = None) -> Path:
    return (directory or cache_dir()) / f"zeros_m{m}_x{x_max:g}.txt"


@dataclass
class CacheOutcome:
    table: ZeroTable
    path: Path
    action: str  # "built", "loaded" or "rebuilt"
    audit_issues: list[str]


def load_or_build(m: int, x_max: float, refresh: bool = False, directory: Path | None = None) -> CacheOutcome:
    """Read the cached table, audit it, and build or rebuild when needed.

    A cache that fails to parse or audit is rebuilt only with ``refresh``;
    otherwise the problems are returned with the (untrusted) table.
    """
    path = cache_path(m, x_max, directory)
    issues: list[str] = []
    if path.exists():
        try:
            table = ZeroTable.loads(path.read_text())
            if table.m != m or table.x_max != float(x_max):
                issues.append("header does not match the requested table")
            issues += table.audit()
        except CacheError as exc:
            table, issues = None, [str(exc)]
        if not issues:
            return CacheOutcome(table, path, "loaded", [])
        if not refresh:
            if table is None:
                table = ZeroTable(m, float(x_max))
            return CacheOutcome(table, path, "loaded", issues)
    table = ZeroTable.build(m, x_max)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(table.dumps())
    tmp.replace(path)
    return CacheOutcome(table, path, "rebuilt" if issues else "built", issues)
