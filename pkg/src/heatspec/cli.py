"""Command-line front end.

Every command builds a report with the keys ``command``, ``inputs``,
``verdicts`` (name, passed, detail), ``values`` (name, exact, float) and
``timings`` (seconds).  ``--json`` prints it as JSON, otherwise as text.
The exit status is 0 exactly when every verdict passed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact import PoleError, SqrtPiNumber, coeffexpr_eval, gamma_exact


@dataclass
class RunReport:
    command: str
    inputs: dict
    verdicts: list[dict] = field(default_factory=list)
    values: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def verdict(self, name: str, passed: bool, detail: str = "") -> None:
        self.verdicts.append({"name": name, "passed": bool(passed), "detail": detail})

    def value(self, name: str, exact=None, approx: float | None = None, project: bool = True) -> None:
        if approx is None and exact is not None and project:
            approx = float(exact)
        self.values.append({"name": name, "exact": None if exact is None else str(exact), "float": approx})

    @contextmanager
    def timed(self, label: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - t0, 6)

    @property
    def passed(self) -> bool:
        return all(v["passed"] for v in self.verdicts)

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "values": self.values,
            "timings": self.timings,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def render(self) -> str:
        lines = [f"== {self.command} {' '.join(f'{k}={v}' for k, v in self.inputs.items())}"]
        for v in self.values:
            exact = f"{v['exact']}  " if v["exact"] is not None else ""
            lines.append(f"  {v['name']} = {exact}({v['float']:.15g})" if v["float"] is not None else f"  {v['name']} = {exact}")
        for v in self.verdicts:
            mark = "PASS" if v["passed"] else "FAIL"
            lines.append(f"  [{mark}] {v['name']}" + (f": {v['detail']}" if v["detail"] else ""))
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append(f"  overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


# commands -------------------------------------------------------------------


def cmd_lemma2(args) -> RunReport:
    from .invariants import coefficient_table, lemma2_verify

    rep = RunReport("lemma2", {"tamper": args.tamper})
    with rep.timed("verify"):
        report = lemma2_verify(coefficient_table(tamper=args.tamper))
    for line in report.lines:
        rep.verdict(f"relation {line.label}", line.passed, f"residual = {line.residual}")
    groups = report.groups
    rep.value("relation groups passing", None, float(sum(groups.values())))
    rep.notes.append(f"{sum(groups.values())}/{len(groups)} relation groups pass")
    return rep


def cmd_coeffs(args) -> RunReport:
    from .invariants import coefficient_table

    table = coefficient_table()
    if args.symbolic:
        rep = RunReport("coeffs", {"symbolic": True})
        for name, expr in table.nonzero().items():
            rep.value(name, expr, project=False)
        return rep
    if args.m < 4:
        raise SystemExit(f"error: coefficients need m >= 4 (the table has poles at m = 1, 2, 3), got m={args.m}")
    rep = RunReport("coeffs", {"m": args.m})
    try:
        for name, expr in table.nonzero().items():
            rep.value(name, coeffexpr_eval(expr, args.m))
    except PoleError as exc:
        raise SystemExit(f"error: {exc}") from exc
    return rep


def _exact_f_args(args):
    from .ballspec import SmearedF

    return SmearedF(args.f0, args.f1, args.f2)


def cmd_ball(args) -> RunReport:
    from .ballspec import residues as R
    from .ballspec.numeric import numeric_extraction

    F = _exact_f_args(args)
    inputs = {"m": args.m, "mode": args.mode, "f": [str(F.f0), str(F.f1), str(F.f2)]}
    rep = RunReport("ball", inputs)
    m = args.m
    if m % 2 or m < 4:
        raise SystemExit(f"error: ball computations need an even m >= 4, got {m}")
    smeared = not F.is_unit()
    if args.mode in ("exact", "both"):
        if m > 10:
            raise SystemExit("error: exact mode supports 4 <= m <= 10")
        with rep.timed("exact"):
            a3 = R.a3_ball_closed_form(m)
            rep.value("a3 closed form", a3)
            res = R.residue_pipeline(m)
            listed = R.listed_residues(m)
            for name, got, want in zip(("A_-1", "A_0", "A_1", "A_2"), res, listed.values):
                rep.value(f"Res {name}", got)
                rep.verdict(f"Res {name} matches listed formula", got == want, f"listed {want}")
            if listed.gamma_zero_convention:
                rep.notes.append("m=4: the listed A_0 residue uses 1/Gamma(0) = 0")
            total = gamma_exact(Fraction(m - 3, 2)) * sum(res, SqrtPiNumber())
            rep.verdict("Gamma((m-3)/2) * sum Res = a3 closed form", total == a3, str(total))
            tab = R.table_a3_ball(m)
            rep.verdict("a3 closed form = coefficient table evaluation", tab == a3, str(tab))
            if smeared:
                s_res = R.smeared_a3_exact(m, F)
                s_thm = R.theorem_smeared_a3(m, F)
                rep.value("smeared a3 (residues)", s_res)
                rep.value("smeared a3 (boundary density)", s_thm)
                rep.verdict("smeared a3 residues = boundary density", s_res == s_thm)
    if args.mode in ("numeric", "both"):
        if m not in (4, 6):
            raise SystemExit("error: numeric mode supports m = 4 or 6")
        with rep.timed("numeric"):
            run = numeric_extraction(m, t_lo=args.t_lo, t_hi=args.t_hi, cutoff=args.cutoff, F=F)
        exact = R.theorem_smeared_coefficients(m, F)
        tols = (args.tol_a0, args.tol_a1, args.tol_a2, args.tol_a3)
        ext = run.extract
        rep.notes.append(
            f"{ext.n_samples} samples on t in [{run.samples[0].t:.4g}, {run.samples[-1].t:.4g}], "
            f"{ext.n_terms} fitted powers, condition {ext.condition:.3g}"
        )
        for k in range(4):
            ref = float(exact[k])
            # a_2 vanishes for F = 1 at m = 4; then the size of its two terms sets the scale
            scale = abs(ref) if ref else R.a2_normalization(m)
            rel = abs(ext.a_hat[k] - ref) / scale
            rep.value(f"a{k} numeric", None, ext.a_hat[k])
            rep.value(f"a{k} numeric error bar", None, ext.error[k])
            rep.value(f"a{k} exact", exact[k])
            rep.verdict(f"a{k} numeric within {tols[k]:g} (relative)", rel <= tols[k], f"relative error {rel:.3g}")
    return rep


def cmd_zeros(args) -> RunReport:
    from .ballspec.zeros import load_or_build

    directory = Path(args.cache_dir) if args.cache_dir else None
    rep = RunReport("zeros", {"m": args.m, "xmax": args.xmax, "refresh": args.refresh})
    if args.m % 2 or args.m < 4:
        raise SystemExit(f"error: zero tables need an even m >= 4, got {args.m}")
    if args.xmax > 250:
        raise SystemExit("error: --xmax is limited to 250 (Bessel order range)")
    try:
        with rep.timed("zeros"):
            out = load_or_build(args.m, args.xmax, refresh=args.refresh, directory=directory)
    except OSError as exc:
        raise SystemExit(f"error: cache I/O failed: {exc}") from exc
    rep.inputs["path"] = str(out.path)
    rep.value("zeros", None, float(out.table.count()))
    rep.value("orders", None, float(len(out.table.zeros)))
    rep.notes.append(f"cache {out.action}: {out.path}")
    if out.action == "rebuilt":
        rep.notes.append(f"audit failure detected before rebuild: {out.audit_issues[:3]}")
        rep.verdict("rebuilt table passes audit", not out.table.audit())
    else:
        detail = "; ".join(out.audit_issues[:3])
        rep.verdict("zero table audit (monotone, interlacing, residual)", not out.audit_issues, detail)
    return rep


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heatspec", description="Boundary heat invariants and ball spectral checks.")
    parser.add_argument("--json", action="store_true", help="print a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemma2", help="verify the coefficient relations exactly")
    p.add_argument("--tamper", action="store_true", help="use a deliberately wrong table (negative control)")
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("coeffs", help="print the coefficient table")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("ball", help="exact and numeric heat coefficients of the unit ball")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "numeric", "both"), default="exact")
    p.add_argument("--f0", type=_frac, default=Fraction(1))
    p.add_argument("--f1", type=_frac, default=Fraction(0))
    p.add_argument("--f2", type=_frac, default=Fraction(0))
    p.add_argument("--t-lo", type=float, default=None, help="smallest t (default: Bessel range limit)")
    p.add_argument("--t-hi", type=float, default=0.0125)
    p.add_argument("--cutoff", type=float, default=48.0)
    p.add_argument("--tol-a0", type=float, default=1e-6)
    p.add_argument("--tol-a1", type=float, default=1e-4)
    p.add_argument("--tol-a2", type=float, default=1e-3)
    p.add_argument("--tol-a3", type=float, default=5e-2)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("zeros", help="build, cache and audit Bessel zero tables")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--refresh", action="store_true", help="rebuild a cache that fails to parse or audit")
    p.add_argument("--cache-dir", default=None, help="overrides HEATSPEC_CACHE_DIR")
    p.set_defaults(func=cmd_zeros)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
