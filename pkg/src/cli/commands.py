"""Command implementations for the intervalsep CLI.

Each ``cmd_*`` function takes parsed argparse arguments, writes its output and
returns an exit code. Library exceptions are turned into exit codes in one
place, ``run_command``.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO, Type

from pydantic import ValidationError

from src.cli.bench import format_bench, run_bench
from src.cli.formats import SolutionRecord, parse_instance, parse_solution, read_text, render_instance, render_solution
from src.core.exceptions import (
    DegenerateIntervalError,
    EmptyInstanceError,
    InstanceTooLargeError,
    IntervalSepException,
    InvalidInputError,
    InvalidScalarError,
    ParseError,
    VerificationError,
)
from src.core.model import Configuration, Direction, Instance, format_scalar, max_displacement, to_scalar
from src.oracles.generators import GenSpec, gen_distinctness, gen_random
from src.solvers.solve import solve
from src.utils.logging import debug_line_sink, get_logger
from src.utils.settings import get_settings

logger = get_logger("cli.commands")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_TOO_LARGE = 3
EXIT_SOLVER_ERROR = 4
EXIT_UNEXPECTED = 70

# Map exception types to exit codes
EXIT_CODES: Dict[Type[IntervalSepException], int] = {
    ParseError: EXIT_BAD_INPUT,
    InvalidScalarError: EXIT_BAD_INPUT,
    DegenerateIntervalError: EXIT_BAD_INPUT,
    EmptyInstanceError: EXIT_BAD_INPUT,
    InvalidInputError: EXIT_BAD_INPUT,
    InstanceTooLargeError: EXIT_TOO_LARGE,
    VerificationError: EXIT_VERIFY_FAILED,
}


def exit_code_for(exc: IntervalSepException) -> int:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return EXIT_SOLVER_ERROR


def run_command(fn: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Run a command, reporting failures on stderr as ``error [<code>]: <message>``."""
    try:
        return fn(args)
    except IntervalSepException as e:
        logger.error(f"{args.command} failed with {e.error_code}: {e.message}")
        print(f"error [{e.error_code}]: {e.message}", file=sys.stderr)
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        print(f"error [UNEXPECTED]: {e}", file=sys.stderr)
        return EXIT_UNEXPECTED


def _write(text: str, output: Optional[str], stdout: TextIO) -> None:
    if output is None or output == "-":
        stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(read_text(args.input))
    trace_lines: List[str] = []
    trace = trace_lines.append if args.trace else debug_line_sink(get_logger("solvers.fast"))
    debug = True if args.debug else None

    sol = solve(inst, algo=args.algo, mode=args.mode, debug=debug, trace=trace)

    _write(render_solution(sol), args.output, sys.stdout)
    if args.trace:
        Path(args.trace).write_text("".join(line + "\n" for line in trace_lines), encoding="utf-8")
    return EXIT_OK


def verify_solution(inst: Instance, record: SolutionRecord, direction: Direction) -> None:
    """Check a parsed solution against its instance.

    Raises:
        VerificationError: naming the first problem found
    """
    expected_ids = {iv.id for iv in inst.intervals}
    seen = set()
    positions = {}
    for interval_id, new_left, displacement in record.rows:
        if interval_id not in expected_ids:
            raise VerificationError(f"unknown interval id {interval_id}")
        if interval_id in seen:
            raise VerificationError(f"interval {interval_id} appears more than once")
        seen.add(interval_id)
        iv = inst.by_id(interval_id)
        if new_left - iv.left != displacement:
            raise VerificationError(
                f"interval {interval_id}: stated displacement {format_scalar(displacement)} "
                f"but {format_scalar(new_left)} - {format_scalar(iv.left)} = {format_scalar(new_left - iv.left)}"
            )
        positions[inst.index_of(interval_id)] = new_left
    missing = sorted(expected_ids - seen)
    if missing:
        raise VerificationError(f"no position for interval(s) {', '.join(map(str, missing))}")

    config = Configuration(positions)
    if direction == Direction.ONE:
        j = config.negative_displacement(inst)
        if j is not None:
            iv = inst.interval(j)
            raise VerificationError(
                f"interval {iv.id} moves left by {format_scalar(-config.displacement(j, inst))} in one-direction mode"
            )
    pair = config.overlapping_pair(inst)
    if pair is not None:
        a, b = (inst.interval(j).id for j in pair)
        raise VerificationError(f"intervals {a} and {b} overlap")

    actual = max_displacement(config, inst, direction)
    if actual != record.delta:
        raise VerificationError(
            f"stated delta {format_scalar(record.delta)} but max displacement is {format_scalar(actual)}"
        )


def cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(read_text(args.input))
    record = parse_solution(read_text(args.solution))
    verify_solution(inst, record, Direction(args.mode))
    print(f"ok delta {format_scalar(record.delta)}")
    return EXIT_OK


def _parse_values(text: str) -> List[int]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidInputError(f"--values expects integers, got {token!r}", field="values") from None
    if not values:
        raise InvalidInputError("--values needs at least one integer", field="values")
    return values


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "distinct":
        inst = gen_distinctness(_parse_values(args.values))
    else:
        try:
            spec = GenSpec(
                n=args.n,
                seed=args.seed,
                coord_max=args.coord_max,
                min_length=args.min_length,
                max_length=args.max_length,
                containment_bias=args.containment_bias,
            )
        except ValidationError as e:
            raise InvalidInputError(f"invalid generator options: {e.errors()[0]['msg']}") from e
        inst = gen_random(spec)
    sys.stdout.write(render_instance(inst))
    return EXIT_OK


def parse_sizes(text: str) -> List[int]:
    """Parse a comma list such as ``1e4,2e4`` into positive integers."""
    sizes = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            value = to_scalar(token)
        except InvalidScalarError:
            raise InvalidInputError(f"invalid size {token!r}", field="sizes") from None
        if value.denominator != 1 or value < 1:
            raise InvalidInputError(f"size must be a positive integer, got {token!r}", field="sizes")
        sizes.append(int(value))
    if not sizes:
        raise InvalidInputError("--sizes needs at least one size", field="sizes")
    return sizes


def cmd_bench(args: argparse.Namespace) -> int:
    prelim_max = args.prelim_max if args.prelim_max is not None else get_settings().bench_prelim_max
    table = run_bench(parse_sizes(args.sizes), seed=args.seed, repeat=args.repeat, prelim_max=prelim_max)
    sys.stdout.write(format_bench(table))
    return EXIT_OK
