"""Command-line entry point.

Exit codes: 0 success, 2 input or domain error, 3 iteration limit.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from fractions import Fraction

from pydantic import ValidationError

from birkhoff_gm import __version__
from birkhoff_gm._internal.rational import as_fraction
from birkhoff_gm.cli.commands import (
    EXIT_INPUT_ERROR,
    OBJECTIVE_CHOICES,
    run_bound,
    run_bound_for_order,
    run_match,
    run_oracle,
    run_polytope,
    run_sweep,
    run_verify,
    select_objective,
)
from birkhoff_gm.cli.parsing import load_graph
from birkhoff_gm.cli.render import render_report
from birkhoff_gm.cli.reports import Report
from birkhoff_gm.config import BirkhoffSettings
from birkhoff_gm.errors import BirkhoffError
from birkhoff_gm.observability import setup_logging
from birkhoff_gm.solver import SolverOptions


def _rational_arg(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (TypeError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--config", metavar="PATH", help="TOML or YAML settings file")

    solving = argparse.ArgumentParser(add_help=False)
    solving.add_argument("--max-iterations", type=int, metavar="N", help="branch-and-bound budget")
    solving.add_argument(
        "--rule",
        choices=("omega", "longest-edge"),
        help="simplex subdivision rule",
    )
    solving.add_argument(
        "--strategy",
        choices=("vertex-cluster", "simplicial"),
        help="branch-and-bound strategy",
    )

    parser = argparse.ArgumentParser(
        prog="birkhoff-gm",
        description="Exact graph matching over a perturbed Birkhoff polytope.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    match = commands.add_parser("match", parents=[common, solving], help="match two graphs")
    match.add_argument("g1")
    match.add_argument("g2")
    match.add_argument("--t", type=_rational_arg, help="override the certified perturbation")

    bound = commands.add_parser("bound", parents=[common], help="certified parameters only")
    bound.add_argument("g1", nargs="?")
    bound.add_argument("g2", nargs="?")
    bound.add_argument("--n", type=int, help="worst case over all graphs of this order")

    oracle = commands.add_parser("oracle", parents=[common], help="exhaustive search")
    oracle.add_argument("g1")
    oracle.add_argument("g2")

    verify = commands.add_parser(
        "verify",
        parents=[common, solving],
        help="check the surrogate's basis against the original optimum",
    )
    verify.add_argument("g1", nargs="?")
    verify.add_argument("g2", nargs="?")
    verify.add_argument("--t", type=_rational_arg, help="perturbation to test")
    verify.add_argument("--objective", choices=OBJECTIVE_CHOICES, default="gm")

    sweep = commands.add_parser(
        "sweep",
        parents=[common, solving],
        help="repeat verify while halving t",
    )
    sweep.add_argument("g1", nargs="?")
    sweep.add_argument("g2", nargs="?")
    sweep.add_argument("--steps", type=int, default=6)
    sweep.add_argument("--objective", choices=OBJECTIVE_CHOICES, default="gm")

    polytope = commands.add_parser("polytope", parents=[common], help="inspect the constraint system")
    polytope.add_argument("n", type=int)
    polytope.add_argument("--t", type=_rational_arg, help="perturbation (0 for the original)")
    polytope.add_argument("--enumerate", action="store_true", help="list every vertex")
    polytope.add_argument("--check-tu", action="store_true", help="sample minor determinants")
    return parser


def load_settings(args: argparse.Namespace) -> BirkhoffSettings:
    settings = BirkhoffSettings.from_file(args.config) if args.config else BirkhoffSettings()
    overrides = {}
    if getattr(args, "max_iterations", None) is not None:
        overrides["max_iterations"] = args.max_iterations
    if getattr(args, "rule", None) is not None:
        overrides["subdivision_rule"] = args.rule
    if getattr(args, "strategy", None) is not None:
        overrides["strategy"] = args.strategy
    if overrides:
        solver = SolverOptions.model_validate({**settings.solver.model_dump(), **overrides})
        settings = settings.model_copy(update={"solver": solver})
    return settings


def _graphs(args: argparse.Namespace, *, required: bool = True):
    if args.g1 is None or args.g2 is None:
        if required:
            raise BirkhoffError("two graph files are required")
        return None, None
    return load_graph(args.g1), load_graph(args.g2)


def dispatch(args: argparse.Namespace, settings: BirkhoffSettings) -> tuple[Report, int]:
    """Run the selected subcommand."""
    if args.command == "match":
        e1, e2 = _graphs(args)
        return run_match(e1, e2, settings, args.t)
    if args.command == "bound":
        if args.n is not None:
            return run_bound_for_order(args.n)
        e1, e2 = _graphs(args)
        return run_bound(e1, e2)
    if args.command == "oracle":
        e1, e2 = _graphs(args)
        return run_oracle(e1, e2, settings)
    if args.command in ("verify", "sweep"):
        e1, e2 = _graphs(args, required=args.objective == "gm")
        objective = select_objective(args.objective, e1, e2)
        if args.command == "verify":
            return run_verify(objective, args.objective, settings, args.t)
        return run_sweep(objective, args.objective, args.steps, settings)
    return run_polytope(
        args.n,
        settings,
        args.t,
        list_vertices=args.enumerate,
        check_tu=args.check_tu,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run a subcommand, print its report, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = load_settings(args)
        logger = setup_logging(settings.logging).bind(command=args.command)
        logger.debug("settings loaded", settings=settings.summary())
        report, code = dispatch(args, settings)
        output = report.model_dump_json(indent=2) if args.json else render_report(report)
    except (BirkhoffError, ValidationError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(output.rstrip("\n"))
    return code


if __name__ == "__main__":
    sys.exit(main())
