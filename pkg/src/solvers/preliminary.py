"""Quadratic candidate-list solver for the one-direction problem.

Intervals are processed in sorted order. Every candidate list is extended by
the new interval i according to how i relates to the list's last interval m:

- i ends at or after m: append i (Case I).
- i ends before m and fits at m's position: insert i right before m (Case II).
- otherwise: append i, and also spawn a copy with i and m swapped (Case III).

Of all lists spawned in one step only the one with the smallest delta is kept,
so the set holds at most i lists after step i.

Lists are persistent: the positions of everything but the last interval live in
a shared cons chain, so a step costs O(1) per list.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from src.core.exceptions import EmptyInstanceError, InvariantViolationError
from src.core.model import (
    Configuration,
    Direction,
    Instance,
    Solution,
    left_possible_placement,
    max_displacement,
)
from src.utils.logging import get_logger
from src.utils.settings import get_settings

logger = get_logger("solvers.preliminary")

# (index, position, rest) cons cells, innermost first
_Prefix = Optional[Tuple[int, Any, Any]]

CASE_APPEND = "append"
CASE_INSERT = "insert"
CASE_SWAP = "swap"


@dataclass(frozen=True, slots=True)
class CandidateList:
    """An ordered list of the processed prefix with its left-possible placement.

    ``last`` is the index m of the rightmost interval; ``last_pos`` its placed
    left endpoint; ``x_end`` its placed right endpoint; ``prefix`` holds the
    placed positions of every other interval.
    """

    last: int
    last_pos: Any
    x_end: Any
    delta: Any
    prefix: _Prefix = None
    size: int = 1

    @property
    def order(self) -> Tuple[int, ...]:
        items = []
        cell = self.prefix
        while cell is not None:
            items.append(cell[0])
            cell = cell[2]
        items.reverse()
        items.append(self.last)
        return tuple(items)

    @property
    def config(self) -> Configuration:
        positions = {self.last: Fraction(self.last_pos)}
        cell = self.prefix
        while cell is not None:
            positions[cell[0]] = Fraction(cell[1])
            cell = cell[2]
        return Configuration(positions)


def initial_list(inst: Instance) -> CandidateList:
    """The single list holding interval 1 at its input position."""
    return CandidateList(last=1, last_pos=inst.lefts[1], x_end=inst.rights[1], delta=0)


def classify(inst: Instance, lst: CandidateList, i: int) -> str:
    """Return which case extending ``lst`` by interval i falls into."""
    if inst.rights[i] >= inst.rights[lst.last]:
        return CASE_APPEND
    if inst.lefts[i] <= lst.last_pos:
        return CASE_INSERT
    return CASE_SWAP


def append_interval(inst: Instance, lst: CandidateList, i: int) -> CandidateList:
    """Append interval i at the end of the list, as far left as possible."""
    left_i = inst.lefts[i]
    pos = lst.x_end if lst.x_end > left_i else left_i
    return CandidateList(
        last=i,
        last_pos=pos,
        x_end=pos + inst.lengths[i],
        delta=max(lst.delta, pos - left_i),
        prefix=(lst.last, lst.last_pos, lst.prefix),
        size=lst.size + 1,
    )


def insert_before_last(inst: Instance, lst: CandidateList, i: int) -> CandidateList:
    """Put interval i at the last interval's position and push the last one right."""
    m = lst.last
    pos_m = lst.last_pos + inst.lengths[i]
    return CandidateList(
        last=m,
        last_pos=pos_m,
        x_end=lst.x_end + inst.lengths[i],
        delta=max(lst.delta, lst.last_pos - inst.lefts[i], pos_m - inst.lefts[m]),
        prefix=(i, lst.last_pos, lst.prefix),
        size=lst.size + 1,
    )


def swap_with_last(inst: Instance, lst: CandidateList, i: int) -> CandidateList:
    """Place i at its input position and move the last interval right after it."""
    m = lst.last
    right_i = inst.rights[i]
    return CandidateList(
        last=m,
        last_pos=right_i,
        x_end=right_i + inst.lengths[m],
        delta=max(lst.delta, right_i - inst.lefts[m]),
        prefix=(i, inst.lefts[i], lst.prefix),
        size=lst.size + 1,
    )


def step_list(
    inst: Instance, lst: CandidateList, i: int
) -> Tuple[CandidateList, Optional[CandidateList]]:
    """Extend one candidate list by interval i.

    Args:
        inst: Normalized instance
        lst: List over the prefix 1..i-1
        i: Next interval index

    Returns:
        Tuple of (updated list, spawned list or None). A spawned list only
        appears when i ends before the last interval and cannot fit at its
        position.
    """
    case = classify(inst, lst, i)
    if case == CASE_APPEND:
        return append_interval(inst, lst, i), None
    if case == CASE_INSERT:
        return insert_before_last(inst, lst, i), None
    return append_interval(inst, lst, i), swap_with_last(inst, lst, i)


def list_violations(inst: Instance, lst: CandidateList) -> List[str]:
    """Compare a list's stored placement and delta with a fresh placement of its order."""
    problems = []
    expected = left_possible_placement(inst, lst.order)
    if dict(expected.positions) != dict(lst.config.positions):
        problems.append(f"list ending in {lst.last}: stored positions differ from left-possible placement")
    if max_displacement(expected, inst) != lst.delta:
        problems.append(f"list ending in {lst.last}: stored delta {lst.delta} is not the max displacement")
    return problems


class PreliminarySolver:
    """Stateful quadratic solver; one instance per solve."""

    def __init__(self, inst: Instance, debug: bool = False):
        if inst.n == 0:
            raise EmptyInstanceError()
        self.inst = inst
        self.debug = debug
        self.lists: List[CandidateList] = [initial_list(inst)]
        self.processed = 1

    def process_interval(self, i: int) -> Optional[CandidateList]:
        """Extend every list by interval i and keep the best spawned list.

        Returns:
            The spawned list that was kept, or None
        """
        inst = self.inst
        updated = []
        best: Optional[CandidateList] = None
        for lst in self.lists:
            new, spawned = step_list(inst, lst, i)
            updated.append(new)
            if spawned is not None and (
                best is None or (spawned.delta, spawned.x_end) < (best.delta, best.x_end)
            ):
                best = spawned
        if best is not None:
            updated.append(best)
        self.lists = updated
        self.processed = i

        if self.debug:
            problems = [p for lst in self.lists for p in list_violations(inst, lst)]
            if len(self.lists) > i:
                problems.append(f"{len(self.lists)} lists after step {i}")
            if problems:
                raise InvariantViolationError(problems, i)
        return best

    def best_list(self) -> CandidateList:
        """The list with minimum delta, ties broken by smaller x_end then earlier list."""
        return min(self.lists, key=lambda lst: (lst.delta, lst.x_end))

    def run(self) -> CandidateList:
        for i in range(self.processed + 1, self.inst.n + 1):
            self.process_interval(i)
        return self.best_list()


def solve_preliminary(inst: Instance, debug: Optional[bool] = None) -> Solution:
    """Solve the one-direction problem in O(n^2) time.

    Args:
        inst: Normalized instance with at least one interval
        debug: Check every list against a fresh placement after each step.
            Defaults to the INTERVALSEP_DEBUG_CHECKS setting.

    Returns:
        Optimal one-direction Solution

    Raises:
        EmptyInstanceError: if the instance has no intervals
        InvariantViolationError: in debug mode, if a list's stored state is wrong
    """
    if debug is None:
        debug = get_settings().debug_checks
    logger.debug(f"Preliminary solve started (n={inst.n}, debug={debug})")

    solver = PreliminarySolver(inst, debug=debug)
    best = solver.run()

    logger.debug(f"Preliminary solve finished: delta={best.delta}, lists={len(solver.lists)}")
    return Solution(
        delta=Fraction(best.delta),
        order=best.order,
        config=best.config,
        direction=Direction.ONE,
        instance=inst,
    )
