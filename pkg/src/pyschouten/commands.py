import argparse
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from .brackets import (bv_laplacian, check_zimes, delta_squared, evolutionary_commutator, jacobiator,
                       schouten_multibase, schouten_old)
from .calculus import euler
from .cohomology import find_primitive, is_exact
from .dsl import FUNCTIONAL_SUFFIX, STRUCTURED_SCHEMA, STRUCTURED_SCHEMA_VERSION, parse_expression, parse_functional, \
    provenance, render
from .errors import NotExactError, ParseError, SchoutenError, UnsupportedAntiderivativeError
from .expr import DEFAULT_BASE, Expression, FieldKind, Functional, Side
from .geometric import geometric_bracket, jacobiator_geometric, lift
from .reference import render_suite_table, run_reproduction_suite, suite_passed
from .reference.suite import DEFAULT_SEED, RANDOM_SAMPLES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2

BRACKET_MODES = ("old", "multibase", "geometric")
OUTPUT_FORMATS = ("text", "structured", "latex")


@dataclass(frozen=True)
class CommandResult:
    """
    Outcome of one CLI invocation.

    Attributes:
        status (int): 0 on success, 1 on a failed mathematical verdict, 2 on usage or parse errors.
        output (str): Text for standard output.
        error (str): Text for standard error.
    """
    status: int
    output: str = ""
    error: str = ""


def read_source(argument: str) -> str:
    """Returns the contents of the file named by argument if it exists (or ends in .fun), else argument itself."""
    path = Path(argument)
    if argument.endswith(FUNCTIONAL_SUFFIX) or path.is_file():
        return path.read_text(encoding="utf-8")
    return argument


def load_functional(argument: str) -> Functional:
    return parse_functional(read_source(argument))


def load_density(argument: str) -> Expression:
    """Accepts either a functional ("int ... dx") or a bare expression."""
    source = read_source(argument)
    if source.lstrip().startswith("int"):
        return parse_functional(source).density
    return parse_expression(source)


def load_characteristic(argument: str) -> Expression:
    """A bare characteristic X, or the characteristic δF/δq† of a one-vector functional ("int X*qd dx")."""
    source = read_source(argument)
    if source.lstrip().startswith("int"):
        return euler(parse_functional(source).density, FieldKind.ODD)
    return parse_expression(source)


def _emit(args: argparse.Namespace, value, inputs: Sequence = ()) -> str:
    return render(value, args.output, provenance(args.command, inputs))


def _verdict(args: argparse.Namespace, holds: bool) -> int:
    return EXIT_VERDICT if getattr(args, "assert_holds", False) and not holds else EXIT_OK


def cmd_bracket(args: argparse.Namespace) -> CommandResult:
    F, G = load_functional(args.first), load_functional(args.second)
    if args.mode == "geometric":
        return CommandResult(EXIT_OK, _emit(args, geometric_bracket(lift(F), lift(G)), (F, G)))
    result = schouten_multibase(F, G) if args.mode == "multibase" else schouten_old(F, G)
    return CommandResult(EXIT_OK, _emit(args, result, (F, G)))


def cmd_laplacian(args: argparse.Namespace) -> CommandResult:
    F = load_functional(args.functional)
    return CommandResult(EXIT_OK, _emit(args, bv_laplacian(F), (F,)))


def cmd_jacobi(args: argparse.Namespace) -> CommandResult:
    F, G, H = (load_functional(a) for a in (args.first, args.second, args.third))
    if args.mode == "geometric":
        residual = jacobiator_geometric(F, G, H)
        return CommandResult(_verdict(args, residual.is_empty), _emit(args, residual, (F, G, H)))
    result = jacobiator(F, G, H, mode="multibase" if args.mode == "multibase" else "single")
    if args.diagonal:
        result = result.rebase(args.base or DEFAULT_BASE)
    return CommandResult(EXIT_OK, _emit(args, result, (F, G, H)))


def cmd_euler(args: argparse.Namespace) -> CommandResult:
    density = load_density(args.functional)
    kind = FieldKind.ODD if args.field == "qd" else FieldKind.EVEN
    value = euler(density, kind, args.index, Side(args.side))
    return CommandResult(EXIT_OK, _emit(args, value, (density,)))


def _base_of(args: argparse.Namespace, argument: str) -> tuple:
    source = read_source(argument)
    if source.lstrip().startswith("int"):
        functional = parse_functional(source)
        return functional.density, args.base or functional.base
    return parse_expression(source), args.base or DEFAULT_BASE


def cmd_exact(args: argparse.Namespace) -> CommandResult:
    density, base = _base_of(args, args.functional)
    report = is_exact(density, base, with_primitive=True)
    return CommandResult(_verdict(args, report.is_trivial), _emit(args, report, (density,)))


def cmd_primitive(args: argparse.Namespace) -> CommandResult:
    density, base = _base_of(args, args.functional)
    try:
        primitive = find_primitive(density, base)
    except (NotExactError, UnsupportedAntiderivativeError) as error:
        return CommandResult(EXIT_VERDICT, error=f"[-] {error}")
    return CommandResult(EXIT_OK, _emit(args, primitive, (density,)))


def cmd_zimes(args: argparse.Namespace) -> CommandResult:
    F, G = load_functional(args.first), load_functional(args.second)
    report = check_zimes(F, G)
    return CommandResult(_verdict(args, report.holds), _emit(args, report, (F, G)))


def cmd_delta2(args: argparse.Namespace) -> CommandResult:
    F = load_functional(args.functional)
    report = delta_squared(F)
    return CommandResult(_verdict(args, report.holds), _emit(args, report, (F,)))


def cmd_commutator(args: argparse.Namespace) -> CommandResult:
    X, Y = load_characteristic(args.first), load_characteristic(args.second)
    report = evolutionary_commutator(X, Y, args.base or DEFAULT_BASE)
    return CommandResult(_verdict(args, report.holds), _emit(args, report, (X, Y)))


def cmd_reproduce(args: argparse.Namespace) -> CommandResult:
    results = run_reproduction_suite(seed=args.seed, samples=args.samples)
    status = EXIT_OK if suite_passed(results) else EXIT_VERDICT
    if args.output != "structured":
        return CommandResult(status, render_suite_table(results))
    document = {
        "schema": STRUCTURED_SCHEMA,
        "version": STRUCTURED_SCHEMA_VERSION,
        "kind": "ReproductionSuite",
        "value": {"passed": status == EXIT_OK, "checks": [r.export() for r in results]},
        "provenance": provenance(args.command),
    }
    return CommandResult(status, json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False))


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subcommand per operation.

    Every subcommand accepts --output, --base, --assert-holds and -v/--verbose.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", choices=OUTPUT_FORMATS, default="text", help="Output format.")
    common.add_argument("-b", "--base", type=str, help="Base label for single-base queries and restriction.")
    common.add_argument("--assert-holds", action="store_true",
                        help="Exit with status 1 if the computed identity or triviality verdict fails.")
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr.")

    parser = argparse.ArgumentParser(
        prog="pyschouten", description="Variational Schouten bracket and BV Laplacian calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help: str, *positionals: str,
            aliases: Sequence[str] = ()) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help, aliases=list(aliases))
        for positional in positionals:
            command.add_argument(positional, help="Path to a .fun file or inline DSL source.")
        command.set_defaults(handler=handler)
        return command

    bracket = add("bracket", cmd_bracket, "Schouten bracket of two functionals.", "first", "second")
    bracket.add_argument("-m", "--mode", choices=BRACKET_MODES, default="old")

    add("laplacian", cmd_laplacian, "Naive BV Laplacian of a functional.", "functional")

    jacobi = add("jacobi", cmd_jacobi, "Jacobi residual of three functionals.", "first", "second", "third")
    jacobi.add_argument("-m", "--mode", choices=BRACKET_MODES, default="old")
    jacobi.add_argument("--diagonal", action="store_true", help="Restrict a multi-base residual to --base.")

    euler_command = add("euler", cmd_euler, "Variational derivative of a density.", "functional")
    euler_command.add_argument("--field", choices=("q", "qd"), default="q")
    euler_command.add_argument("--index", type=int, default=1)
    euler_command.add_argument("--side", choices=[s.value for s in Side], default=Side.LEFT.value)

    add("exact", cmd_exact, "Cohomological triviality test with primitive.", "functional")
    add("primitive", cmd_primitive, "Primitive of a total derivative.", "functional")
    add("zimes", cmd_zimes, "Check Δ⟦F,G⟧ ≅ ⟦ΔF,G⟧ ± ⟦F,ΔG⟧.", "first", "second")
    add("delta2", cmd_delta2, "Check Δ²F ≅ 0.", "functional")
    add("commutator", cmd_commutator, "Compare a bracket of one-vectors with the commutator.", "first", "second")
    suite = add("paper-suite", cmd_reproduce, "Run the embedded reproduction suite.", aliases=("reproduce",))
    suite.add_argument("--seed", type=int, default=DEFAULT_SEED)
    suite.add_argument("--samples", type=int, default=RANDOM_SAMPLES, help="Random cases per sampled check.")
    return parser


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """
    Parses argv and runs the selected command without touching the process state.

    Returns:
        CommandResult: Status and rendered output. Parse errors and library errors map to status 2.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return CommandResult(error.code if isinstance(error.code, int) else EXIT_USAGE)
    logger.debug(f"Running {args.command}")
    try:
        return args.handler(args)
    except ParseError as error:
        return CommandResult(EXIT_USAGE, error=f"[-] Parse error: {error}")
    except SchoutenError as error:
        return CommandResult(EXIT_USAGE, error=f"[-] {type(error).__name__}: {error}")
    except OSError as error:
        return CommandResult(EXIT_USAGE, error=f"[-] Cannot read input: {error}")
