"""Command line front end: ``radius``, ``table`` and ``verify``.

Exit codes: 0 success, 1 verification violation or table mismatch,
2 usage error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .radii import RadiusKind, RadiusProblem, RadiusResult, SolverError, solve
from .tables import K_VALUES, TABLES
from .verify import SamplePlan, Theorem, VerificationReport, run_check

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
ROW_FIELDS = ("kind", "k", "a", "root", "residual", "bracket_width")


class UsageError(Exception):
    pass


def parse_fraction(text: str) -> float:
    """Accept ``0.75`` as well as ``3/4``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number or p/q fraction: {text!r}") from exc


def result_row(res: RadiusResult) -> dict:
    row = {"kind": res.problem.kind.value, "k": res.problem.k}
    if res.problem.a is not None:
        row["a"] = res.problem.a
    row.update(root=res.root, residual=res.residual, bracket_width=res.bracket_width)
    return row


# -- renderers -----------------------------------------------------------------


def _columns(rows):
    cols = [c for c in ROW_FIELDS if any(c in r for r in rows)]
    extra = [c for r in rows for c in r if c not in cols]
    return cols + list(dict.fromkeys(extra))


def render_json(rows) -> str:
    return json.dumps(list(rows), indent=2)


def render_csv(rows) -> str:
    rows = list(rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: repr(v) if isinstance(v, float) else v for c, v in row.items()})
    return buf.getvalue()


def parse_csv(text: str) -> list[dict]:
    """Inverse of :func:`render_csv` for numeric fields."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        parsed = {}
        for c, v in row.items():
            if v == "":
                continue
            if c == "k":
                parsed[c] = int(v)
            elif c in ("kind", "printed", "match"):
                parsed[c] = v
            else:
                parsed[c] = float(v)
        out.append(parsed)
    return out


def render_markdown(rows, precision: int = 6) -> str:
    rows = list(rows)
    cols = _columns(rows)
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for row in rows:
        cells = []
        for c in cols:
            v = row.get(c, "")
            if c == "root":
                cells.append(f"{v:.{precision}f}")
            elif c in ("residual", "bracket_width"):
                cells.append(f"{v:.3e}")
            elif c == "a":
                cells.append(f"{v:.6g}")
            else:
                cells.append(str(v))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_rows(rows, fmt: str, precision: int) -> str:
    if fmt == "json":
        return render_json(rows) + "\n"
    if fmt == "csv":
        return render_csv(rows)
    return render_markdown(rows, precision)


def report_dict(rep: VerificationReport) -> dict:
    out = {
        "theorem": rep.theorem.value,
        "radius_used": rep.radius_used,
        "samples_checked": rep.samples_checked,
        "max_lhs": rep.max_lhs,
        "violations": rep.violations,
    }
    if rep.witness_radius is not None:
        out["witness_radius"] = rep.witness_radius
        out["witness_lhs"] = rep.witness_lhs
    return out


def render_report(rep: VerificationReport, fmt: str, precision: int) -> str:
    d = report_dict(rep)
    if fmt == "json":
        return render_json([d]) + "\n"
    if fmt == "csv":
        return render_csv([d])
    lines = [
        f"theorem:         {d['theorem']}",
        f"radius used:     {rep.radius_used:.{precision}f}",
        f"samples checked: {rep.samples_checked}",
        f"max lhs:         {rep.max_lhs:.15f}",
        f"violations:      {rep.violations}",
    ]
    if rep.witness_radius is not None:
        lines.append(
            f"equality witness: r = {rep.witness_radius:.{precision}f}, "
            f"lhs = {rep.witness_lhs:.12f}"
        )
    lines.append("PASS" if rep.passed else "FAIL")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_radius(args) -> tuple[str, int]:
    kind = RadiusKind(args.kind)
    if (kind is RadiusKind.REFINED_RHO) != (args.a is not None):
        raise UsageError("--a is required for refined-rho and not accepted otherwise")
    res = solve(RadiusProblem(kind, args.k, args.a))
    if args.format == "markdown":
        text = (
            f"{res.root:.{args.precision}f}\n"
            f"bracket [{res.lo!r}, {res.hi!r}] width {res.bracket_width:.3e}, "
            f"residual {res.residual:.3e}, "
            f"monotonicity certified: {res.monotonicity_certified}\n"
        )
    else:
        text = render_rows([result_row(res)], args.format, args.precision)
    return text, EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    spec = TABLES[args.which]
    rows, mismatches, compared = [], 0, 0
    for k in args.k or K_VALUES:
        row = result_row(solve(spec.problem(k)))
        if args.diff and k in spec.values:
            printed = spec.values[k]
            ok = abs(row["root"] - float(printed)) <= spec.tolerance(printed)
            row["printed"], row["match"] = printed, "yes" if ok else "NO"
            compared += 1
            mismatches += not ok
        rows.append(row)
    if args.diff:
        print(f"{spec.which}: {compared - mismatches}/{compared} match", file=sys.stderr)
    return render_rows(rows, args.format, args.precision), EXIT_VIOLATION if mismatches else EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    theorem = Theorem(args.theorem)
    if theorem is Theorem.TH3 and args.a is None:
        raise UsageError("--a is required for th3")
    k = 0 if theorem is Theorem.CLASSICAL else args.k
    if k is None:
        raise UsageError("--k is required")
    plan = SamplePlan(k, args.count, seed=args.seed)
    rep = run_check(theorem, plan, args.a)
    return render_report(rep, args.format, args.precision), EXIT_OK if rep.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    common.add_argument("--precision", type=int, default=6, help="decimals printed for radii")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="bohr-radii", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", parents=[common], help="solve one radius equation")
    p.add_argument("--kind", required=True, choices=[k.value for k in RadiusKind])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=parse_fraction)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("table", parents=[common], help="regenerate a reference table")
    p.add_argument("--which", required=True, choices=sorted(TABLES))
    p.add_argument("--k", type=int, nargs="+", help="rows to emit (default: the 20 tabulated rows)")
    p.add_argument("--diff", action="store_true", help="compare against the tabulated values")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a seeded inequality check")
    p.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=parse_fraction)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
