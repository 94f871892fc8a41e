"""Single entry point over the three algorithms."""

from enum import Enum
from typing import Optional, Union

from src.core.exceptions import ReconstructionError
from src.core.model import (
    Direction,
    Instance,
    Solution,
    left_possible_placement,
    max_displacement,
    to_two_direction,
)
from src.oracles.brute_force import brute_force
from src.solvers.fast import TraceSink, solve_fast
from src.solvers.preliminary import solve_preliminary
from src.solvers.reconstruction import replay
from src.utils.logging import get_logger

logger = get_logger("solvers.solve")


class Algorithm(str, Enum):
    FAST = "fast"
    PRELIM = "prelim"
    BRUTE = "brute"


def solve(
    inst: Instance,
    algo: Union[Algorithm, str] = Algorithm.FAST,
    mode: Union[Direction, str] = Direction.ONE,
    debug: Optional[bool] = None,
    trace: Optional[TraceSink] = None,
) -> Solution:
    """Solve an instance with the chosen algorithm.

    The returned configuration is always the left-possible placement of the
    returned order; for two-direction mode it is then shifted left by half
    the one-direction optimum.

    Args:
        inst: Normalized instance
        algo: "fast", "prelim" or "brute"
        mode: "one" or "two"
        debug: Enable per-step consistency checks in the solvers
        trace: Per-step trace sink (fast solver only)

    Returns:
        Optimal Solution for the requested direction

    Raises:
        IntervalSepException: any solver error, see the individual solvers
    """
    algo = Algorithm(algo)
    mode = Direction(mode)

    if algo == Algorithm.FAST:
        delta, lineage = solve_fast(inst, debug=debug, trace=trace)
        order = replay(inst, lineage)
    elif algo == Algorithm.PRELIM:
        sol = solve_preliminary(inst, debug=debug)
        delta, order = sol.delta, sol.order
    else:
        sol = brute_force(inst)
        delta, order = sol.delta, sol.order

    config = left_possible_placement(inst, order)
    placed = max_displacement(config, inst)
    if placed != delta:
        raise ReconstructionError(
            f"{algo.value} solver reported delta {delta} but its order places at {placed}",
            expected=delta,
            actual=placed,
        )

    solution = Solution(delta=delta, order=tuple(order), config=config, direction=Direction.ONE, instance=inst)
    if mode == Direction.TWO:
        solution = to_two_direction(solution)
    logger.info(f"Solved n={inst.n} with {algo.value} ({mode.value}-direction): delta={solution.delta}")
    return solution
