"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 infeasible data, 3 rejected
degenerate configuration (cylinder/cone/planar).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import DegenerateCaseError, InfeasibleProblemError
from .fileio import (SolveReport, export_obj, parse_curve, parse_problem,
                     parse_solution, serialize_curve, serialize_solution)
from .solvers import solve_problem1, solve_problem2, solve_problem3
from .strip import RuledPatch
from .verify import developability_scan, planarity_report

VERIFY_TOL = 1e-8
REPORT_SAMPLES_PER_PIECE = 100


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="devstrip",
        description="Construct developable surface patches from boundary "
                    "spline data.")
    parser.add_argument("--version", action="version",
                        version=f"devstrip {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser(
        "solve", help="solve a problem file; write surface mesh and reports")
    solve.add_argument("--problem", required=True, metavar="FILE",
                       help="problem description (JSON)")
    solve.add_argument("--root", type=int, default=None, metavar="IDX",
                       help="override the problem file's root choice")
    solve.add_argument("--out", default="out", metavar="DIR",
                       help="output directory (default: out)")
    solve.add_argument("--u-samples", type=int, default=None, metavar="N",
                       help="mesh samples per piece along the curve")
    solve.add_argument("--v-samples", type=int, default=None, metavar="N",
                       help="mesh samples along the rulings")

    verify = sub.add_parser(
        "verify", help="check a solved surface for developability")
    verify.add_argument("--surface", required=True, metavar="FILE",
                        help="solution JSON written by solve")
    verify.add_argument("--samples", type=int, default=100, metavar="N",
                        help="samples per piece (default: 100)")

    elevate = sub.add_parser(
        "elevate", help="degree-elevate a curve file, print the result")
    elevate.add_argument("--curve", required=True, metavar="FILE",
                         help="curve description (JSON)")
    return parser


def _positive_samples(value: Optional[int], fallback: int, name: str) -> int:
    if value is None:
        return fallback
    if value < 2:
        raise ValueError(f"{name} must be at least 2")
    return value


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = parse_problem(Path(args.problem).read_text())
    root = spec.root_choice if args.root is None else args.root
    if root < 0:
        raise ValueError("--root must be nonnegative")
    u_samples = _positive_samples(args.u_samples, spec.u_samples,
                                  "--u-samples")
    v_samples = _positive_samples(args.v_samples, spec.v_samples,
                                  "--v-samples")

    curve = spec.to_curve()
    pinch = None
    if spec.problem_kind == "problem1":
        anchor = ({"d0": spec.anchor_point} if spec.anchor_end == "start"
                  else {"dL": spec.anchor_point})
        solution = solve_problem1(curve, spec.v, spec.w,
                                  root_choice=root, **anchor)
        patch: RuledPatch = solution.strip
        inner = solution
    elif spec.problem_kind == "problem2":
        solution2 = solve_problem2(curve, spec.d0, spec.dL, root_choice=root)
        patch = RuledPatch(solution2.elevated_c, solution2.elevated_d)
        inner = solution2.report.problem1
        pinch = solution2.report.pinch_u
    else:
        solution3 = solve_problem3(curve, spec.dL, spec.apex_velocity,
                                   root_choice=root)
        patch = RuledPatch(solution3.final_c, solution3.final_d)
        inner = solution3.report.problem1
        pinch = solution3.report.problem2.report.pinch_u

    scan = developability_scan(patch, REPORT_SAMPLES_PER_PIECE)
    report = SolveReport(
        problem_kind=spec.problem_kind,
        polynomial_coefficients=tuple(float(c)
                                      for c in inner.polynomial.coef),
        roots=tuple(float(r) for r in inner.m_star_roots),
        chosen_m_star=float(inner.chosen_root),
        lambda_star=float(inner.lambda_star),
        alpha=float(inner.alpha),
        beta=float(inner.beta),
        sigma=float(inner.sigma),
        tau=float(inner.tau),
        base_polygon=tuple(tuple(float(x) for x in p)
                           for p in patch.base.control),
        opposite_polygon=tuple(tuple(float(x) for x in p)
                               for p in patch.opposite.control),
        max_developability=float(scan.max_residual),
        worst_cell_planarity=float(max(planarity_report(patch))),
        pinch_u=pinch,
    )

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "solution.json").write_text(serialize_solution(patch))
    (out / "surface.obj").write_text(export_obj(patch, u_samples, v_samples))
    (out / "report.json").write_text(report.as_json())
    (out / "report.txt").write_text(report.as_text())

    roots_text = ", ".join(f"{r:.6g}" for r in inner.m_star_roots)
    print(f"solved {spec.problem_kind}: admissible M* roots [{roots_text}], "
          f"chosen M* = {inner.chosen_root:.6g}, "
          f"lambda* = {inner.lambda_star:.6g}")
    print(f"max developability residual {scan.max_residual:.3e} "
          f"({scan.samples} samples)")
    print(f"wrote solution.json, surface.obj, report.json, report.txt "
          f"to {out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    patch = parse_solution(Path(args.surface).read_text())
    scan = developability_scan(patch, samples_per_piece=args.samples)
    print(f"max developability residual {scan.max_residual:.3e} "
          f"at u = {scan.argmax_u:.6g}")
    print(f"samples: {scan.samples} used, {scan.skipped} skipped "
          f"(collapsed rulings)")
    if scan.max_residual <= VERIFY_TOL:
        print(f"developable within tolerance {VERIFY_TOL:.0e}")
        return 0
    print(f"NOT developable within tolerance {VERIFY_TOL:.0e}")
    return 2


def _cmd_elevate(args: argparse.Namespace) -> int:
    curve = parse_curve(Path(args.curve).read_text())
    sys.stdout.write(serialize_curve(curve.elevate_degree()))
    return 0


def run_cli(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    handlers = {"solve": _cmd_solve, "verify": _cmd_verify,
                "elevate": _cmd_elevate}
    try:
        return handlers[args.command](args)
    except InfeasibleProblemError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except DegenerateCaseError as exc:
        print(f"degenerate case: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
