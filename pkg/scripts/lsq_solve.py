"""Command-line entry point for solving, verifying and generating linear systems."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, NoReturn

from shared.config import get_settings
from shared.errors import EXIT_USAGE, SolverError
from shared.models import LineSearch, SolverConfig, SolverMethod
from shared.observability import configure_logging
from solvers.cli.constants import SERVICE_NAME, TERMINATION_EXIT_CODES
from solvers.cli.formats import format_system, load_system, parse_system
from solvers.cli.generator import generate_system
from solvers.cli.observability import cli_solve_context, logger, summarize_for_logging
from solvers.cli.reporting import ReportFormat, emit_problem, emit_report
from solvers.cli.suite import format_suite_table, run_paper_suite
from solvers.dispatch import solve_system

_METHODS = {
    "relax": SolverMethod.RELAXATION,
    "relaxation": SolverMethod.RELAXATION,
    "cg": SolverMethod.CG,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 64."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="lsq-solve",
        description=(
            "Minimum-norm least-squares solutions of linear systems through the "
            "Lagrange multiplier functional."
        ),
    )
    parser.add_argument(
        "--log-level",
        dest="log_level",
        default=None,
        help="Override the configured log level (logs are written to stderr).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve the system stored in a file.")
    solve.add_argument("file", help="System file, or '-' to read standard input.")
    solve.add_argument(
        "--method",
        choices=sorted(_METHODS),
        default="relax",
        help="Backend: Gauss-Seidel relaxation or conjugate gradients (default: relax).",
    )
    solve.add_argument("--tol", type=float, default=None, help="Stopping tolerance.")
    solve.add_argument(
        "--max-passes",
        dest="max_passes",
        type=int,
        default=None,
        help="Cap on sweeps or conjugate gradient iterations.",
    )
    solve.add_argument(
        "--line-search",
        dest="line_search",
        choices=[mode.value for mode in LineSearch],
        default=None,
        help="Conjugate gradient step rule.",
    )
    solve.add_argument(
        "--format",
        choices=[fmt.value for fmt in ReportFormat],
        default=ReportFormat.HUMAN.value,
        help="Report format written to standard output.",
    )
    solve.add_argument(
        "--oracle",
        action="store_true",
        help="Append the pseudoinverse answer and its distance to the iterate.",
    )
    solve.add_argument(
        "--project-rhs",
        dest="project_rhs",
        action="store_true",
        default=None,
        help="Relax the right-hand side onto the column space first (relaxation only).",
    )
    solve.set_defaults(handler=_run_solve)

    suite = commands.add_parser(
        "paper-suite", help="Solve the bundled examples and compare with golden values."
    )
    suite.add_argument(
        "--format",
        choices=[fmt.value for fmt in ReportFormat],
        default=ReportFormat.HUMAN.value,
        help="Table or JSON output.",
    )
    suite.set_defaults(handler=_run_suite)

    gen = commands.add_parser("gen", help="Emit a seeded random system.")
    gen.add_argument("--rows", type=int, required=True)
    gen.add_argument("--cols", type=int, required=True)
    gen.add_argument("--rank", type=int, required=True)
    gen.add_argument(
        "--cond",
        type=float,
        required=True,
        help="Ratio of the largest to the smallest nonzero singular value.",
    )
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument(
        "--noise",
        type=float,
        default=0.0,
        help="Standard deviation of noise added to the right-hand side.",
    )
    gen.set_defaults(handler=_run_gen)
    return parser


def _run_solve(args: argparse.Namespace) -> int:
    if args.file == "-":
        system = parse_system(sys.stdin)
    else:
        system = load_system(args.file)
    config = SolverConfig.from_settings(
        method=_METHODS[args.method],
        tolerance=args.tol,
        max_passes=args.max_passes,
        line_search=args.line_search,
        project_rhs=args.project_rhs,
    )
    logger.info(
        "solve_requested",
        config=summarize_for_logging(config),
        rows=system.rows,
        cols=system.cols,
    )
    report = solve_system(system, config, with_oracle=args.oracle)
    sys.stdout.write(emit_report(report, args.format))
    return TERMINATION_EXIT_CODES[report.termination]


def _run_suite(args: argparse.Namespace) -> int:
    result = run_paper_suite()
    if args.format == ReportFormat.JSON.value:
        sys.stdout.write(json.dumps(result.model_dump(mode="json")) + "\n")
    else:
        sys.stdout.write(format_suite_table(result))
    return result.exit_code


def _run_gen(args: argparse.Namespace) -> int:
    system = generate_system(
        args.rows, args.cols, args.rank, args.cond, args.seed, noise=args.noise
    )
    sys.stdout.write(format_system(system))
    return 0


def main(argv: Iterable[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(None if argv is None else list(argv))

    settings = get_settings()
    try:
        configure_logging(
            service_name=SERVICE_NAME, level=args.log_level or settings.logging.level
        )
    except ValueError as exc:
        parser.error(str(exc))
    fmt = getattr(args, "format", ReportFormat.HUMAN.value)
    instance = getattr(args, "file", None)

    with cli_solve_context(command=args.command):
        try:
            return args.handler(args)
        except SolverError as exc:
            problem = exc.to_problem_details(instance=instance)
            stream = sys.stdout if fmt == ReportFormat.JSON.value else sys.stderr
            stream.write(emit_problem(problem, fmt))
            return exc.exit_code
        except KeyboardInterrupt:  # pragma: no cover - manual cancellation guard
            return 130


if __name__ == "__main__":  # pragma: no cover - CLI entry point
    raise SystemExit(main())
