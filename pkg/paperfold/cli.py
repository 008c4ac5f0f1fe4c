# encoding: utf-8
""" The `paperfold` command.

    paperfold generate -d D -n N [--method recursion|substitution] [-o out.json]
    paperfold check equivalence|primitivity|coincidence -d D [-k K]
    paperfold complexity -d D --n-max N [-o out.csv]
    paperfold cohomology -d D
    paperfold render -i in.json [-o out.svg]

Exit status is 0 when the command succeeded or the check passed, 1 when a
check failed and 2 when the request itself was wrong.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .analysis import complexity_table, find_coincidence, is_primitive
from .cohomology import paperfolding_cohomology
from .exceptions import CellBudgetExceeded, InconclusiveLimitError
from .export import (
    RenderStyle,
    dumps,
    pattern_from_json,
    pattern_to_json,
    render_svg,
    symbolic_to_json,
)
from .fold import RecursiveFolding, SubstitutionFolding
from .limits import (
    DEFAULT_CELL_BUDGET,
    DEFAULT_COINCIDENCE_STEPS,
    DEFAULT_PRIMITIVITY_STEPS,
    DEFAULT_STABILIZATION_STEPS,
)
from .substitution import derive_rule, equivalence_check

__all__ = ["main", "build_parser"]

logger = logging.getLogger("paperfold")

#: Substitution steps checked against the recursion when -k is not given.
EQUIVALENCE_STEPS = {1: 8, 2: 5, 3: 3}

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """A request that cannot be served as given."""


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info("Wrote %s", output)


def _generate(args: argparse.Namespace) -> int:
    if args.method == "recursion":
        if args.letters:
            raise UsageError("--letters needs --method substitution")
        folder = RecursiveFolding(args.d, args.cell_budget)
        pattern = folder.generate(args.n)
        _write(dumps(pattern_to_json(pattern)), args.output)
        return EXIT_OK

    folder = SubstitutionFolding(args.d, args.cell_budget)
    if args.letters:
        _write(dumps(symbolic_to_json(folder.generate_symbols(args.n))), args.output)
    else:
        _write(dumps(pattern_to_json(folder.generate(args.n))), args.output)
    return EXIT_OK


def _check(args: argparse.Namespace) -> int:
    if args.property == "equivalence":
        k = args.k if args.k is not None else EQUIVALENCE_STEPS.get(args.d, 2)
        for steps in range(k + 1):
            report = equivalence_check(args.d, steps, args.cell_budget)
            logger.info("%d substitution steps: %d faces compared", steps, report.faces_compared)
            if report.equal:
                continue
            print(
                "mismatch after {} steps at face {}: recursion {} substitution {}".format(
                    report.steps, tuple(report.mismatch), report.expected, report.found
                )
            )
            return EXIT_CHECK_FAILED
        print("equivalent: d={} k=0..{}".format(args.d, k))
        return EXIT_OK

    rule = derive_rule(args.d)
    if args.property == "primitivity":
        k_max = args.k if args.k is not None else DEFAULT_PRIMITIVITY_STEPS
        primitive, k = is_primitive(rule, k_max)
        print(json.dumps({"primitive": primitive, "k": k}, sort_keys=True))
        return EXIT_OK if primitive else EXIT_CHECK_FAILED

    k_max = args.k if args.k is not None else DEFAULT_COINCIDENCE_STEPS
    report = find_coincidence(rule, k_max)
    document = report.to_json()
    if report.found:
        corner = report.far_corner
        document["coincidence"]["far_corner"] = list(corner) if corner else None
    print(json.dumps(document, sort_keys=True))
    return EXIT_OK if report.found else EXIT_CHECK_FAILED


def _complexity(args: argparse.Namespace) -> int:
    table = complexity_table(args.d, args.n_max, args.cell_budget)
    _write(table.to_csv(), args.output)
    return EXIT_OK if all(row.stabilized for row in table.rows) else EXIT_CHECK_FAILED


def _cohomology(args: argparse.Namespace) -> int:
    try:
        groups = paperfolding_cohomology(args.d, args.k_stab)
    except InconclusiveLimitError as e:
        print("inconclusive: {}".format(e), file=sys.stderr)
        return EXIT_CHECK_FAILED
    for q, group in enumerate(groups):
        print("H^{} = {}".format(q, group))
    return EXIT_OK


def _render(args: argparse.Namespace) -> int:
    try:
        text = args.input.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError("cannot read {}: {}".format(args.input, e.strerror))
    try:
        pattern = pattern_from_json(text)
    except json.JSONDecodeError as e:
        raise UsageError("malformed JSON in {}: {}".format(args.input, e))
    style = RenderStyle(cell_size=args.cell_size, margin=args.margin)
    _write(render_svg(pattern, style), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paperfold",
        description="Multidimensional paperfolding structures and their substitution.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def dimension(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("-d", type=int, required=True, metavar="D", help="dimension of the sheet")

    def budget(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--cell-budget",
            type=int,
            default=DEFAULT_CELL_BUDGET,
            metavar="CELLS",
            help="largest number of unit cells to materialize (default: %(default)s)",
        )

    generate = commands.add_parser("generate", help="write S_d(n) as JSON")
    dimension(generate)
    generate.add_argument("-n", type=int, required=True, metavar="N", help="number of d-folds")
    generate.add_argument(
        "--method", choices=("recursion", "substitution"), default="recursion"
    )
    generate.add_argument(
        "--letters",
        action="store_true",
        help="with --method substitution, write the letters instead of the creases",
    )
    generate.add_argument("-o", "--output", type=Path, metavar="FILE")
    budget(generate)
    generate.set_defaults(run=_generate)

    check = commands.add_parser("check", help="verify a property of the substitution")
    check.add_argument("property", choices=("equivalence", "primitivity", "coincidence"))
    dimension(check)
    check.add_argument("-k", type=int, metavar="K", help="number of steps or largest power")
    budget(check)
    check.set_defaults(run=_check)

    complexity = commands.add_parser("complexity", help="count n-patterns as CSV")
    dimension(complexity)
    complexity.add_argument("--n-max", type=int, required=True, metavar="N")
    complexity.add_argument("-o", "--output", type=Path, metavar="FILE")
    budget(complexity)
    complexity.set_defaults(run=_complexity)

    cohomology = commands.add_parser("cohomology", help="Čech cohomology of the tiling space")
    dimension(cohomology)
    cohomology.add_argument(
        "--k-stab", type=int, default=DEFAULT_STABILIZATION_STEPS, metavar="K"
    )
    cohomology.set_defaults(run=_cohomology)

    render = commands.add_parser("render", help="draw a JSON crease pattern as SVG")
    render.add_argument("-i", "--input", type=Path, required=True, metavar="FILE")
    render.add_argument("-o", "--output", type=Path, metavar="FILE")
    render.add_argument("--cell-size", type=float, default=RenderStyle.cell_size)
    render.add_argument("--margin", type=float, default=RenderStyle.margin)
    render.set_defaults(run=_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse has already printed the usage and the reason.
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.captureWarnings(True)

    try:
        return args.run(args)
    except CellBudgetExceeded as e:
        print("paperfold: cell budget exceeded: {}".format(e), file=sys.stderr)
    except UsageError as e:
        print("paperfold: {}".format(e), file=sys.stderr)
    except ValueError as e:
        print("paperfold: invalid input: {}".format(e), file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
