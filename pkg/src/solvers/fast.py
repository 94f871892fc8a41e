"""O(n log n) solver for the one-direction problem.

Candidate lists are kept implicitly. Each live list is a Leaf holding only its
placed right end (x) and its max-displacement (delta), stored in a
SortedKeyList ordered by x. Leaves sorted by x never increase in delta, so
the rightmost leaf is the best candidate.

Most x-values change by the same amount |I_i| in step i, so the stored key is
``x - R`` for a global shift R and only a constant number of leaves get an
explicit write per step. Every other leaf that is touched is deleted, and a
leaf is created at most once per step, which bounds the total work.

All lists end in one of at most two intervals: m, or m' whose input interval
lies inside m's. Lists ending in m' sit to the left of lists ending in m, and
``b_leaf`` is the last of them.

A list ending in m' only dominates a list ending in m when its delta is at
most the displacement of m itself in the other list. So ``b_leaf`` and its
right neighbour may share a delta, the neighbour's delta coming from intervals
before m; both are kept. Everywhere else delta strictly decreases. Once both
sides end in the same interval again the right one of such a pair is dropped.

A step dispatches on how I_i ends relative to m (and m'):

- single_append: one last index, i ends at or after m. Every list appends i.
- single_split: one last index, i ends before m. Lists whose m sits left of
  i's input start append i and the rightmost of them also spawns a copy with
  i and m swapped; the others insert i before m.
- dual_append: two last indices, i ends at or after m. Every list appends i.
- dual_split: i ends between m' and m. m'-lists append; m-lists split as above.
- dual_insert: i ends before m'. Every list inserts i before its last interval.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from operator import attrgetter
from typing import Any, Callable, List, Optional, Tuple

from sortedcontainers import SortedKeyList

from src.core.exceptions import EmptyInstanceError, InvariantViolationError
from src.core.model import Instance
from src.solvers.preliminary import CandidateList, initial_list, step_list
from src.solvers.reconstruction import BranchNode, Lineage, record_spawn
from src.utils.logging import get_logger
from src.utils.settings import get_settings

logger = get_logger("solvers.fast")

CASE_SINGLE_APPEND = "single_append"
CASE_SINGLE_SPLIT = "single_split"
CASE_DUAL_APPEND = "dual_append"
CASE_DUAL_SPLIT = "dual_split"
CASE_DUAL_INSERT = "dual_insert"
CASE_TAGS = (
    CASE_SINGLE_APPEND,
    CASE_SINGLE_SPLIT,
    CASE_DUAL_APPEND,
    CASE_DUAL_SPLIT,
    CASE_DUAL_INSERT,
)

# No list of the split region needs i before m.
BRANCH_C_ZERO = "c_zero"
# Every list of the split region needs i before m.
BRANCH_C_ALL = "c_all"
# The best appended list of the split region dominated every list ending in m.
BRANCH_C_PRIME_EXHAUSTED = "c_prime_exhausted"
# The best m'-list dominated every list of the split region.
BRANCH_B_PRIME_EXHAUSTED = "b_prime_exhausted"
# The best m'-list dominated every m-list in the insert case.
BRANCH_B_PRIME_EXHAUSTED_E2 = "b_prime_exhausted_e2"
# The spawned list landed on the same x as its right neighbour and was dropped.
BRANCH_SPAWN_X_TIE = "spawn_x_tie"
# b_leaf and the first m-list end the step with the same delta.
BRANCH_DELTA_TIE = "delta_tie"
# A boundary delta tie became a same-interval tie and its right list was dropped.
BRANCH_DELTA_TIE_MERGED = "delta_tie_merged"
BRANCH_TAGS = (
    BRANCH_C_ZERO,
    BRANCH_C_ALL,
    BRANCH_C_PRIME_EXHAUSTED,
    BRANCH_B_PRIME_EXHAUSTED,
    BRANCH_B_PRIME_EXHAUSTED_E2,
    BRANCH_SPAWN_X_TIE,
    BRANCH_DELTA_TIE,
    BRANCH_DELTA_TIE_MERGED,
)

TraceSink = Callable[[str], None]


@dataclass(eq=False, slots=True)
class Leaf:
    """One implicit candidate list.

    ``x`` is the stored key (true x minus R) and must not change while the
    leaf is in the tree. ``shadow`` is the explicit list, kept in debug mode only.
    """

    x: Any
    delta: Any
    node: BranchNode
    alive: bool = True
    shadow: Optional[CandidateList] = None
    pending: Optional[Tuple[CandidateList, Optional[CandidateList]]] = None


@dataclass(frozen=True)
class StepOutcome:
    """What one call to process_interval did."""

    step: int
    case_tag: str
    removed_count: int
    spawned: bool
    leaf_count: int
    branches: Tuple[str, ...] = ()

    def to_trace_line(self) -> str:
        return "\t".join(
            [
                str(self.step),
                self.case_tag,
                str(self.removed_count),
                "1" if self.spawned else "0",
                str(self.leaf_count),
                ",".join(self.branches) or "-",
            ]
        )


@dataclass
class _Split:
    """Bookkeeping from splitting the region of lists that end in m."""

    threshold: Any
    c1: Optional[int] = None
    parent: Optional[Leaf] = None
    spawn: Optional[Leaf] = None


class FastSolver:
    """Solver state for one fast solve.

    Create with an instance, then feed intervals 2..n to process_interval in
    order (or call run()).
    """

    def __init__(self, inst: Instance, debug: bool = False, trace: Optional[TraceSink] = None):
        if inst.n == 0:
            raise EmptyInstanceError()
        self.inst = inst
        self.debug = debug
        self.trace = trace
        self.lineage = Lineage()
        self.leaves = SortedKeyList(key=attrgetter("x"))
        self.R: Any = 0
        self.m = 1
        self.m_prime: Optional[int] = None
        self.b_leaf: Optional[Leaf] = None
        self.processed = 1
        self.created = 1
        self.removed_total = 0
        self.case_counts: Counter = Counter()
        self.branch_counts: Counter = Counter()

        first = Leaf(x=inst.rights[1], delta=0, node=self.lineage.root)
        if debug:
            first.shadow = initial_list(inst)
        self.leaves.add(first)

        self._removed = 0
        self._branches: List[str] = []

    # -- tree helpers -------------------------------------------------------

    def _remove_at(self, pos: int) -> Leaf:
        leaf = self.leaves.pop(pos)
        leaf.alive = False
        self._removed += 1
        return leaf

    def _rekey(self, pos: int, key: Any) -> None:
        leaf = self.leaves.pop(pos)
        leaf.x = key
        self.leaves.add(leaf)

    def _mark(self, branch: str) -> None:
        self._branches.append(branch)

    # -- region procedures --------------------------------------------------

    def _append_region(self, i: int, lo: int, hi: int) -> int:
        """Every list in positions lo..hi appends i.

        Lists whose x is at most i's input start all place i at its input
        position; only the last of them survives, re-keyed to x = right(i).
        Of the rest, the leaves right of the delta minimum are dominated.

        Returns:
            Position of the surviving leaf with the smallest new delta
        """
        sl = self.leaves
        left_i = self.inst.lefts[i]
        t = left_i - self.R
        a1 = min(max(sl.bisect_key_right(t) - lo, 0), hi - lo + 1)
        first = lo + a1 - 1 if a1 else lo

        # new delta of an appended list: max(delta, x_true - left_i)
        off = self.R - left_i
        j = hi
        leaf = sl[j]
        fj = max(leaf.delta, leaf.x + off)
        while j > first:
            prev = sl[j - 1]
            fp = max(prev.delta, prev.x + off)
            if fp > fj:
                break
            self._remove_at(j)
            j -= 1
            fj = fp
        sl[j].delta = fj

        for _ in range(first - lo):
            self._remove_at(lo)
        j -= first - lo
        if a1:
            self._rekey(lo, t)
        return j

    def _split_region(self, i: int, start: int) -> _Split:
        """Lists from ``start`` to the end all end in m and i ends before m."""
        sl = self.leaves
        inst = self.inst
        m = self.m
        left_i, right_i, len_i = inst.lefts[i], inst.rights[i], inst.lengths[i]
        R = self.R

        # Stored key of the list spawned by swapping i and m. Lists keyed below
        # it have m left of i's input start.
        t = left_i - R + inst.lengths[m]
        split = _Split(threshold=t)
        c_end = max(sl.bisect_key_left(t), start)
        if c_end == start:
            self._mark(BRANCH_C_ZERO)
        elif c_end == len(sl):
            self._mark(BRANCH_C_ALL)

        spawn_delta = None
        first_insert = start
        if c_end > start:
            parent = sl[c_end - 1]
            split.parent = parent
            spawn_delta = max(parent.delta, right_i - inst.lefts[m])

            off = R - left_i
            j = c_end - 1
            leaf = sl[j]
            fj = max(leaf.delta, leaf.x + off)
            while j > start:
                prev = sl[j - 1]
                fp = max(prev.delta, prev.x + off)
                if fp > fj:
                    break
                self._remove_at(j)
                j -= 1
                fj = fp
            sl[j].delta = fj
            split.c1 = j
            first_insert = j + 1

        # lists that insert i before m: new delta is max(delta, x_true + |I_i| - right(m))
        off2 = R + len_i - inst.rights[m]
        inserts_alive = False
        j = len(sl) - 1
        if j >= first_insert:
            leaf = sl[j]
            gj = max(leaf.delta, leaf.x + off2)
            while j > first_insert:
                prev = sl[j - 1]
                gp = max(prev.delta, prev.x + off2)
                if gp > gj:
                    break
                self._remove_at(j)
                j -= 1
                gj = gp
            if spawn_delta is not None and j == first_insert and spawn_delta <= gj:
                self._remove_at(j)
            else:
                sl[j].delta = gj
                inserts_alive = True

        if spawn_delta is None:
            return split

        if inserts_alive and sl[first_insert].x == t:
            self._mark(BRANCH_SPAWN_X_TIE)
        else:
            spawn = Leaf(x=t, delta=spawn_delta, node=split.parent.node)
            if self.debug:
                spawn.shadow = split.parent.pending[1]
            sl.add(spawn)
            self.created += 1
            split.spawn = spawn

        if self._prune_after(split.c1, inst.rights[m], len_i):
            self._mark(BRANCH_C_PRIME_EXHAUSTED)
        return split

    def _insert_region(self, lo: int, hi: int, last_right: Any, len_i: Any) -> int:
        """Lists in positions lo..hi insert i before their last interval."""
        sl = self.leaves
        off = self.R + len_i - last_right
        j = hi
        leaf = sl[j]
        gj = max(leaf.delta, leaf.x + off)
        while j > lo:
            prev = sl[j - 1]
            gp = max(prev.delta, prev.x + off)
            if gp > gj:
                break
            self._remove_at(j)
            j -= 1
            gj = gp
        sl[j].delta = gj
        return j

    def _prune_after(self, pos: int, outer_right: Any, len_i: Any, same_below: Any = None) -> bool:
        """Drop leaves right of ``pos`` dominated by it; True if none are left.

        The leaf at ``pos`` ends in an interval nested in the enclosing last
        interval, whose input right end is ``outer_right``. Leaves keyed below
        ``same_below`` end in the same interval as ``pos`` and are compared by
        delta. The others end in the enclosing interval and are compared by its
        own displacement, which is their new true x minus ``outer_right``.
        """
        sl = self.leaves
        ref = sl[pos].delta
        off = self.R + len_i - outer_right
        p = pos + 1
        while p < len(sl):
            leaf = sl[p]
            if same_below is not None and leaf.x < same_below:
                own = leaf.delta
            else:
                own = leaf.x + off
            if ref > own:
                break
            self._remove_at(p)
        return p == len(sl)

    def _drop_boundary_tie(self, leaf: Leaf) -> None:
        """After a merge of last indices, drop the right twin of a tie at ``leaf``."""
        if not leaf.alive:
            return
        sl = self.leaves
        pos = sl.index(leaf)
        if pos + 1 < len(sl) and sl[pos + 1].delta >= leaf.delta:
            self._remove_at(pos + 1)
            self._mark(BRANCH_DELTA_TIE_MERGED)

    def _mark_boundary_tie(self) -> None:
        if self.b_leaf is None:
            return
        sl = self.leaves
        pos = sl.index(self.b_leaf)
        if pos + 1 < len(sl) and sl[pos + 1].delta == self.b_leaf.delta:
            self._mark(BRANCH_DELTA_TIE)

    def _update_last_indices(self, i: int, first_m_pos: int) -> None:
        """Lists before ``first_m_pos`` now end in i, the rest still end in m."""
        sl = self.leaves
        if first_m_pos >= len(sl):
            self.m = i
            self.m_prime = None
            self.b_leaf = None
        elif first_m_pos > 0:
            self.m_prime = i
            self.b_leaf = sl[first_m_pos - 1]

    # -- public API ---------------------------------------------------------

    def process_interval(self, i: int) -> StepOutcome:
        """Extend every implicit list by interval i and prune dominated lists.

        Args:
            i: Next interval index; must be ``processed + 1``

        Returns:
            StepOutcome describing the step

        Raises:
            ValueError: if i is not the next interval
            InvariantViolationError: in debug mode, if the new state is inconsistent
        """
        if i != self.processed + 1:
            raise ValueError(f"expected interval {self.processed + 1}, got {i}")
        inst = self.inst
        sl = self.leaves
        right_i = inst.rights[i]
        len_i = inst.lengths[i]
        m = self.m
        self._removed = 0
        self._branches = []

        if self.debug:
            for leaf in sl:
                leaf.pending = step_list(inst, leaf.shadow, i)

        split: Optional[_Split] = None
        if self.b_leaf is None:
            if right_i >= inst.rights[m]:
                case = CASE_SINGLE_APPEND
                self._append_region(i, 0, len(sl) - 1)
                self.m = i
            else:
                case = CASE_SINGLE_SPLIT
                split = self._split_region(i, 0)
                self._update_last_indices(i, sl.bisect_key_left(split.threshold))
        else:
            m_prime = self.m_prime
            b_pos = sl.index(self.b_leaf)
            if right_i >= inst.rights[m]:
                case = CASE_DUAL_APPEND
                old_b = self.b_leaf
                self._append_region(i, 0, len(sl) - 1)
                self._drop_boundary_tie(old_b)
                self.m = i
                self.m_prime = None
                self.b_leaf = None
            elif right_i >= inst.rights[m_prime]:
                case = CASE_DUAL_SPLIT
                a2 = self._append_region(i, 0, b_pos)
                split = self._split_region(i, a2 + 1)
                # lists keyed below the threshold appended i, like the one at a2
                if self._prune_after(a2, inst.rights[m], len_i, same_below=split.threshold):
                    self._mark(BRANCH_B_PRIME_EXHAUSTED)
                self._update_last_indices(i, max(sl.bisect_key_left(split.threshold), a2 + 1))
            else:
                case = CASE_DUAL_INSERT
                e1 = self._insert_region(0, b_pos, inst.rights[m_prime], len_i)
                self._insert_region(e1 + 1, len(sl) - 1, inst.rights[m], len_i)
                if self._prune_after(e1, inst.rights[m], len_i):
                    self._mark(BRANCH_B_PRIME_EXHAUSTED_E2)
                    self.m = m_prime
                    self.m_prime = None
                    self.b_leaf = None
                else:
                    self.b_leaf = sl[e1]

        self._mark_boundary_tie()
        self.R += len_i

        spawned = False
        if split is not None and split.spawn is not None:
            spawned = True
            if split.spawn.alive:
                child_append, child_swap = record_spawn(self.lineage, split.parent.node, i, m)
                if split.parent.alive:
                    split.parent.node = child_append
                split.spawn.node = child_swap

        if self.debug:
            for leaf in sl:
                if leaf.pending is not None:
                    leaf.shadow = leaf.pending[0]
                leaf.pending = None

        self.processed = i
        self.removed_total += self._removed
        self.case_counts[case] += 1
        for branch in self._branches:
            self.branch_counts[branch] += 1

        outcome = StepOutcome(
            step=i,
            case_tag=case,
            removed_count=self._removed,
            spawned=spawned,
            leaf_count=len(sl),
            branches=tuple(self._branches),
        )
        if self.trace is not None:
            self.trace(outcome.to_trace_line())

        if self.debug:
            violations = self.check_invariants()
            if violations:
                raise InvariantViolationError(violations, i)
        return outcome

    def check_invariants(self) -> List[str]:
        """Return a description of every broken invariant; empty when consistent.

        Checks that x-values are pairwise distinct and that delta strictly
        decreases left to right. The one exception is the boundary leaf and
        its right neighbour, which may share a delta. Also checks that the
        second last index (if any) sits inside the first in the input, and
        that the boundary leaf is live. With debug shadows it also compares
        every leaf against its explicit list and checks that m'-lists precede
        m-lists.
        """
        violations: List[str] = []
        inst = self.inst
        sl = self.leaves
        keys = [leaf.x for leaf in sl]
        deltas = [leaf.delta for leaf in sl]

        if len(set(keys)) != len(keys):
            violations.append("x-values are not pairwise distinct")

        b_pos = None
        if self.m_prime is None:
            if self.b_leaf is not None:
                violations.append("boundary leaf set without a second last index")
        else:
            if not (
                inst.lefts[self.m] <= inst.lefts[self.m_prime]
                and inst.rights[self.m_prime] <= inst.rights[self.m]
            ):
                violations.append(f"interval {self.m_prime} is not contained in interval {self.m}")
            if self.b_leaf is None or not self.b_leaf.alive:
                violations.append("second last index set but boundary leaf is missing")
            else:
                try:
                    b_pos = sl.index(self.b_leaf)
                except ValueError:
                    violations.append("boundary leaf is not in the tree")
            if b_pos is not None and b_pos == len(sl) - 1:
                violations.append("no list ends in the first last index")

        for k in range(1, len(sl)):
            if deltas[k - 1] < deltas[k] or (deltas[k - 1] == deltas[k] and k - 1 != b_pos):
                violations.append(
                    f"delta does not strictly decrease at leaf {k}: {deltas[k - 1]} then {deltas[k]}"
                )
                break

        for pos, leaf in enumerate(sl):
            shadow = leaf.shadow
            if shadow is None:
                continue
            if leaf.x + self.R != shadow.x_end:
                violations.append(f"leaf {pos}: x {leaf.x + self.R} but its list ends at {shadow.x_end}")
            if leaf.delta != shadow.delta:
                violations.append(f"leaf {pos}: delta {leaf.delta} but its list has {shadow.delta}")
            expected_last = self.m_prime if b_pos is not None and pos <= b_pos else self.m
            if shadow.last != expected_last:
                violations.append(f"leaf {pos}: list ends in {shadow.last}, expected {expected_last}")
        return violations

    def rightmost(self) -> Leaf:
        return self.leaves[-1]

    def run(self) -> Leaf:
        for i in range(self.processed + 1, self.inst.n + 1):
            self.process_interval(i)
        return self.rightmost()


def init_state(inst: Instance, debug: bool = False, trace: Optional[TraceSink] = None) -> FastSolver:
    """Solver state after interval 1: one leaf at x = right(1) with delta 0."""
    return FastSolver(inst, debug=debug, trace=trace)


def process_interval(state: FastSolver, i: int) -> StepOutcome:
    return state.process_interval(i)


def check_invariants(state: FastSolver) -> List[str]:
    return state.check_invariants()


def solve_fast(
    inst: Instance, debug: Optional[bool] = None, trace: Optional[TraceSink] = None
) -> Tuple[Fraction, Lineage]:
    """Compute the optimal one-direction max-displacement in O(n log n).

    Args:
        inst: Normalized instance with at least one interval
        debug: Check invariants after every step. Defaults to the
            INTERVALSEP_DEBUG_CHECKS setting.
        trace: Optional callable receiving one tab-separated line per step

    Returns:
        Tuple of (delta, lineage). ``lineage.opt_leaf`` is the branch-tree leaf
        of the optimal candidate, ready for replay.

    Raises:
        EmptyInstanceError: if the instance has no intervals
        InvariantViolationError: in debug mode, if some step breaks an invariant
    """
    if debug is None:
        debug = get_settings().debug_checks
    logger.debug(f"Fast solve started (n={inst.n}, debug={debug})")

    solver = FastSolver(inst, debug=debug, trace=trace)
    best = solver.run()
    sl = solver.leaves
    if len(sl) > 1 and sl[-2].delta == best.delta:
        logger.debug(f"Two rightmost candidates tie on delta {best.delta}; returning the rightmost")

    delta = Fraction(best.delta)
    solver.lineage.finish(best.node, delta)
    logger.debug(
        f"Fast solve finished: delta={delta}, leaves={len(sl)}, created={solver.created}, "
        f"removed={solver.removed_total}, branches={solver.lineage.internal_count}"
    )
    return delta, solver.lineage
