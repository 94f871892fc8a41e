"""Tests for the O(n log n) solver."""

from collections import Counter
from fractions import Fraction

import pytest

from conftest import TARGETED_INSTANCES
from src.core.exceptions import EmptyInstanceError, InvariantViolationError
from src.core.model import normalize_instance
from src.oracles.generators import GenSpec, gen_random
from src.solvers.fast import (
    BRANCH_TAGS,
    CASE_SINGLE_SPLIT,
    CASE_TAGS,
    FastSolver,
    StepOutcome,
    check_invariants,
    init_state,
    process_interval,
    solve_fast,
)


def true_leaves(state):
    """(true x, delta) per leaf, left to right."""
    return [(leaf.x + state.R, leaf.delta) for leaf in state.leaves]


class TestInitState:
    """Tests for init_state."""

    def test_single_leaf(self, long_short_instance):
        """Test the first leaf sits at right(1) with delta 0."""
        state = init_state(long_short_instance)
        assert true_leaves(state) == [(10, 0)]
        assert state.R == 0
        assert state.m == 1
        assert state.m_prime is None
        assert state.b_leaf is None
        assert check_invariants(state) == []

    def test_negative_coordinates(self):
        state = init_state(normalize_instance([(-3, -1), (0, 1)]))
        assert true_leaves(state) == [(-1, 0)]

    def test_empty_instance(self):
        with pytest.raises(EmptyInstanceError):
            init_state(normalize_instance([]))


class TestProcessInterval:
    """Tests for single steps of the fast solver."""

    def test_split_step(self, long_short_instance):
        """Test {[0,10],[1,3]}: the append list and its swapped twin both survive."""
        state = init_state(long_short_instance, debug=True)
        outcome = process_interval(state, 2)

        assert outcome.case_tag == CASE_SINGLE_SPLIT
        assert outcome.spawned
        assert outcome.removed_count == 0
        assert outcome.leaf_count == 2
        assert true_leaves(state) == [(12, 9), (13, 3)]
        assert state.R == 2
        assert (state.m, state.m_prime) == (1, 2)
        assert state.b_leaf is state.leaves[0]
        assert check_invariants(state) == []

    def test_append_step_rekeys_leaf(self):
        """Test {[0,1],[2,3]}: the leaf moves to right(2) and delta stays 0."""
        state = init_state(normalize_instance([(0, 1), (2, 3)]))
        outcome = process_interval(state, 2)
        assert outcome.case_tag == "single_append"
        assert true_leaves(state) == [(3, 0)]
        assert state.m == 2

    def test_out_of_order_rejected(self, nested_instance):
        """Test intervals must be fed in sorted order."""
        state = init_state(nested_instance)
        with pytest.raises(ValueError):
            process_interval(state, 3)

    def test_leaf_conservation(self):
        """Test removed = before + spawned - after on every step."""
        for seed in range(30):
            state = FastSolver(gen_random(GenSpec(n=25, seed=seed)))
            for i in range(2, state.inst.n + 1):
                before = len(state.leaves)
                outcome = state.process_interval(i)
                assert outcome.removed_count == before + int(outcome.spawned) - outcome.leaf_count

    def test_leaf_accounting(self):
        """Test at most 2n leaves are ever created and each is removed at most once."""
        for seed in range(30):
            state = FastSolver(gen_random(GenSpec(n=60, seed=seed)))
            state.run()
            assert state.created <= 2 * state.inst.n
            assert state.removed_total == state.created - len(state.leaves)


class TestTargetedInstances:
    """Tests for instances that force each case and boundary branch."""

    @pytest.mark.parametrize("name", sorted(TARGETED_INSTANCES))
    def test_steps_and_delta(self, name):
        """Test the expected case and branch tags per step, and the final delta."""
        pairs, delta, steps = TARGETED_INSTANCES[name]
        inst = normalize_instance(pairs)
        state = init_state(inst, debug=True)
        for i in range(2, inst.n + 1):
            outcome = process_interval(state, i)
            if i in steps:
                assert (outcome.case_tag, outcome.branches) == steps[i], f"{name} step {i}"
        assert state.rightmost().delta == delta

    def test_every_case_and_branch_covered(self):
        """Test the targeted instances reach all five cases and all boundary branches."""
        cases, branches = Counter(), Counter()
        for pairs, _, _ in TARGETED_INSTANCES.values():
            state = FastSolver(normalize_instance(pairs), debug=True)
            state.run()
            cases.update(state.case_counts)
            branches.update(state.branch_counts)
        assert set(cases) == set(CASE_TAGS)
        assert set(branches) == set(BRANCH_TAGS)

    def test_x_tie_final_state(self):
        """Test the tie instance ends with two leaves at 34 and 36."""
        pairs, _, _ = TARGETED_INSTANCES["x_tie"]
        state = FastSolver(normalize_instance(pairs), debug=True)
        state.run()
        assert true_leaves(state) == [(34, 18), (36, 6)]
        assert (state.m, state.m_prime) == (3, 4)

    def test_spawn_kept_on_delta_tie(self):
        """Test a swapped list with the same delta as its parent survives the split."""
        pairs, _, _ = TARGETED_INSTANCES["delta_tie_spawn"]
        state = FastSolver(normalize_instance(pairs), debug=True)
        for i in range(2, 5):
            state.process_interval(i)
        assert true_leaves(state) == [(133, 21), (136, 21)]
        assert (state.m, state.m_prime) == (3, 4)
        assert state.b_leaf is state.leaves[0]

        state.process_interval(5)
        assert true_leaves(state) == [(142, 24), (145, 21)]
        assert state.rightmost().delta == 21

    def test_delta_tie_dropped_on_merge(self):
        """Test the right list of a boundary tie goes once both lists append the same interval."""
        pairs, _, _ = TARGETED_INSTANCES["delta_tie_merged"]
        state = FastSolver(normalize_instance(pairs), debug=True)
        for i in range(2, 5):
            state.process_interval(i)
        assert true_leaves(state) == [(34, 18), (35, 18), (36, 6)]

        outcome = state.process_interval(5)
        assert outcome.removed_count == 1
        assert true_leaves(state) == [(50, 18), (52, 12)]
        assert state.b_leaf is None

    def test_dominated_spawn_leaves_no_branch(self):
        """Test a spawn pruned in the same step is not recorded in the lineage."""
        pairs, _, _ = TARGETED_INSTANCES["spawn_dominated"]
        delta, lineage = solve_fast(normalize_instance(pairs))
        assert delta == 2
        assert lineage.internal_count == 0
        assert lineage.root.is_leaf


class TestCheckInvariants:
    """Tests for the invariant checker."""

    def test_equal_deltas_reported(self):
        """Test two leaves ending in the same interval with the same delta are flagged."""
        pairs, _, _ = TARGETED_INSTANCES["x_tie"]
        state = init_state(normalize_instance(pairs))
        process_interval(state, 2)
        process_interval(state, 3)
        assert state.b_leaf is None
        state.leaves[1].delta = state.leaves[0].delta
        assert any("strictly decrease" in v for v in check_invariants(state))

    def test_boundary_tie_accepted(self, long_short_instance):
        """Test b_leaf and its right neighbour may share a delta."""
        state = init_state(long_short_instance)
        process_interval(state, 2)
        state.leaves[1].delta = state.leaves[0].delta
        assert check_invariants(state) == []

    def test_increase_at_boundary_reported(self, long_short_instance):
        state = init_state(long_short_instance)
        process_interval(state, 2)
        state.leaves[1].delta = state.leaves[0].delta + 1
        assert any("strictly decrease" in v for v in check_invariants(state))

    def test_shadow_mismatch_reported(self, long_short_instance):
        """Test a leaf whose delta disagrees with its explicit list is flagged."""
        state = init_state(long_short_instance, debug=True)
        process_interval(state, 2)
        state.leaves[1].delta = 2
        assert any("its list has" in v for v in check_invariants(state))

    def test_debug_raises_on_violation(self, nested_instance):
        """Test debug mode turns a violation into InvariantViolationError."""
        state = init_state(nested_instance, debug=True)
        process_interval(state, 2)
        state.leaves[0].delta = 100
        with pytest.raises(InvariantViolationError) as exc_info:
            process_interval(state, 3)
        assert exc_info.value.step == 3

    def test_clean_on_random_runs(self):
        """Test debug runs over random instances raise nothing."""
        for seed in range(40):
            inst = gen_random(GenSpec(n=30, seed=seed))
            solve_fast(inst, debug=True)


class TestSolveFast:
    """Tests for solve_fast."""

    def test_worked_instances(self, worked_instances):
        """Test the hand-checked optima."""
        for name, (inst, delta) in worked_instances.items():
            got, lineage = solve_fast(inst, debug=True)
            assert got == delta, name
            assert isinstance(got, Fraction)
            assert lineage.delta == delta

    def test_rational_instance(self):
        inst = normalize_instance([("0", "1/2"), ("1/4", "3/4")])
        delta, _ = solve_fast(inst, debug=True)
        assert delta == Fraction(1, 4)

    def test_trace_lines(self, long_short_instance):
        """Test the trace sink receives one tab-separated line per step."""
        lines = []
        solve_fast(long_short_instance, trace=lines.append)
        assert lines == ["2\tsingle_split\t0\t1\t2\tc_all"]

    def test_trace_line_without_branches(self):
        outcome = StepOutcome(step=3, case_tag="dual_append", removed_count=1, spawned=False, leaf_count=2)
        assert outcome.to_trace_line() == "3\tdual_append\t1\t0\t2\t-"
