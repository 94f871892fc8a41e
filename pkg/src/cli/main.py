"""Argument parsing and dispatch for the intervalsep CLI.

Usage:
    intervalsep solve --input FILE [--mode one|two] [--algo fast|prelim|brute] [--output FILE]
    intervalsep verify --input FILE --solution FILE [--mode one|two]
    intervalsep gen distinct --values 3,5,3
    intervalsep gen random --n 8 --seed 7
    intervalsep bench --sizes 1e4,2e4 --seed 0 --repeat 3
"""

import argparse
from typing import List, Optional

from dotenv import load_dotenv

from src.cli.commands import cmd_bench, cmd_gen, cmd_solve, cmd_verify, run_command
from src.oracles.generators import DEFAULT_CONTAINMENT_BIAS
from src.utils.logging import setup_logging
from src.utils.settings import get_settings

COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalsep",
        description="Separate overlapping intervals on a line with minimum maximum movement.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Log level for stderr (default: LOG_LEVEL or WARNING)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="Solve an instance file")
    p_solve.add_argument("--input", required=True, help="Instance file")
    p_solve.add_argument("--mode", choices=["one", "two"], default="one", help="Movement direction")
    p_solve.add_argument("--algo", choices=["fast", "prelim", "brute"], default="fast", help="Algorithm")
    p_solve.add_argument("--output", default="-", help="Solution file (default: stdout)")
    p_solve.add_argument("--trace", default=None, help="Write the fast solver's per-step trace here")
    p_solve.add_argument("--debug", action="store_true", help="Check solver invariants after every step")

    p_verify = sub.add_parser("verify", help="Check a solution file against an instance")
    p_verify.add_argument("--input", required=True, help="Instance file")
    p_verify.add_argument("--solution", required=True, help="Solution file")
    p_verify.add_argument("--mode", choices=["one", "two"], default="one", help="Movement direction")

    p_gen = sub.add_parser("gen", help="Generate an instance on stdout")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    p_distinct = gen_sub.add_parser("distinct", help="Unit intervals centred at 10*a for each value a")
    p_distinct.add_argument("--values", required=True, help="Comma-separated integers")
    p_random = gen_sub.add_parser("random", help="Seeded random instance")
    p_random.add_argument("--n", type=int, required=True, help="Number of intervals")
    p_random.add_argument("--seed", type=int, default=0)
    p_random.add_argument("--coord-max", type=int, default=None, help="Largest left endpoint (default: 4n)")
    p_random.add_argument("--min-length", type=int, default=1)
    p_random.add_argument("--max-length", type=int, default=None, help="Default: n")
    p_random.add_argument(
        "--containment-bias",
        type=float,
        default=DEFAULT_CONTAINMENT_BIAS,
        help="Probability that an interval nests inside an earlier one",
    )

    p_bench = sub.add_parser("bench", help="Time the solvers over a ladder of sizes")
    p_bench.add_argument("--sizes", default="1e4,2e4,4e4", help="Comma-separated sizes, e.g. 1e5,2e5")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.add_argument(
        "--prelim-max",
        type=int,
        default=None,
        help="Largest size that also times the preliminary solver (default: INTERVALSEP_BENCH_PRELIM_MAX)",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and run one command.

    Returns:
        Process exit code
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or get_settings().log_level)
    return run_command(COMMANDS[args.command], args)
