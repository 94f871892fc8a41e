"""Independent oracles for the one-direction problem.

brute_force tries every order; for a fixed order the left-possible placement
is optimal, so the best order found is a true optimum. greedy_equal_length is
the sorted-order shortcut that is optimal when all lengths agree.
"""

from fractions import Fraction
from itertools import permutations
from typing import Optional

from src.core.exceptions import EmptyInstanceError, InstanceTooLargeError, UnequalLengthsError
from src.core.model import Direction, Instance, Solution, left_possible_placement, max_displacement
from src.utils.logging import get_logger
from src.utils.settings import BRUTE_FORCE_HARD_LIMIT, get_settings

logger = get_logger("oracles.brute_force")


def brute_force(inst: Instance, limit: Optional[int] = None) -> Solution:
    """Minimum max-displacement over all n! orders.

    Ties go to the lexicographically smallest order.

    Args:
        inst: Normalized instance
        limit: Largest n accepted. Defaults to INTERVALSEP_BRUTE_FORCE_LIMIT
            and never exceeds 10.

    Returns:
        Optimal one-direction Solution

    Raises:
        EmptyInstanceError: if the instance has no intervals
        InstanceTooLargeError: if n exceeds the limit
    """
    if limit is None:
        limit = get_settings().brute_force_limit
    limit = min(limit, BRUTE_FORCE_HARD_LIMIT)
    n = inst.n
    if n == 0:
        raise EmptyInstanceError()
    if n > limit:
        logger.warning(f"Brute force refused: n={n} exceeds limit {limit}")
        raise InstanceTooLargeError(n, limit)

    lefts, lengths = inst.lefts, inst.lengths
    best_delta = None
    best_order = None
    for order in permutations(range(1, n + 1)):
        delta = 0
        end = None
        for j in order:
            pos = lefts[j] if end is None or end < lefts[j] else end
            d = pos - lefts[j]
            if d > delta:
                delta = d
                if best_delta is not None and delta >= best_delta:
                    break
            end = pos + lengths[j]
        else:
            if best_delta is None or delta < best_delta:
                best_delta = delta
                best_order = order

    config = left_possible_placement(inst, best_order)
    return Solution(
        delta=Fraction(best_delta),
        order=best_order,
        config=config,
        direction=Direction.ONE,
        instance=inst,
    )


def greedy_equal_length(inst: Instance) -> Solution:
    """Place equal-length intervals in input-sorted order.

    Raises:
        EmptyInstanceError: if the instance has no intervals
        UnequalLengthsError: if two intervals differ in length
    """
    if inst.n == 0:
        raise EmptyInstanceError()
    lengths = sorted({iv.length for iv in inst.intervals})
    if len(lengths) > 1:
        raise UnequalLengthsError(lengths)

    order = tuple(range(1, inst.n + 1))
    config = left_possible_placement(inst, order)
    return Solution(
        delta=max_displacement(config, inst),
        order=order,
        config=config,
        direction=Direction.ONE,
        instance=inst,
    )
