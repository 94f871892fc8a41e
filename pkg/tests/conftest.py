"""Pytest configuration for intervalsep tests.

This file adds the project root to sys.path so that imports like
`from src.solvers.fast import solve_fast` work correctly.
"""

import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.model import normalize_instance  # noqa: E402
from src.utils.settings import get_settings  # noqa: E402

# Hand-checked instances: (pairs, optimal one-direction delta)
WORKED_INSTANCES = {
    "disjoint": ([(0, 1), (2, 3)], 0),
    "shifted_pair": ([(0, 2), (1, 3)], 1),
    "long_then_short": ([(0, 10), (1, 3)], 3),
    "three_nested": ([(0, 8), (2, 4), (3, 5)], 6),
    "single": ([(5, 7)], 0),
}

# Instances that drive the fast solver into a specific case or boundary branch.
# Each entry: (pairs, optimal delta, {step: (case_tag, branches)})
TARGETED_INSTANCES = {
    "append_only": ([(0, 1), (2, 3)], 0, {2: ("single_append", ())}),
    "x_tie": (
        [(0, 20), (2, 4), (20, 30), (24, 26)],
        6,
        {
            2: ("single_split", ("c_all",)),
            3: ("dual_append", ()),
            4: ("single_split", ("spawn_x_tie",)),
        },
    ),
    "insert_only": ([(0, 4), (1, 10), (2, 5)], 6, {3: ("single_split", ("c_zero",))}),
    "spawn_dominated": ([(0, 10), (8, 9)], 2, {2: ("single_split", ("c_all", "c_prime_exhausted"))}),
    "dual_split": ([(0, 20), (2, 6), (3, 7)], 10, {3: ("dual_split", ("c_zero",))}),
    "dual_split_exhausted": (
        [(0, 20), (2, 6), (6, 19)],
        18,
        {3: ("dual_split", ("c_zero", "b_prime_exhausted"))},
    ),
    "dual_insert": ([(0, 20), (2, 6), (3, 5)], 8, {3: ("dual_insert", ())}),
    "dual_insert_exhausted": (
        [(0, 100), (10, 30), (50, 145), (131, 139), (132, 137)],
        90,
        {
            2: ("single_split", ("c_all",)),
            3: ("dual_append", ()),
            4: ("single_split", ("c_all",)),
            5: ("dual_insert", ("b_prime_exhausted_e2",)),
        },
    ),
    # The swapped list ties the appended one on delta but ends in m, so its
    # delta is not what decides dominance; it stays and wins at step 5.
    "delta_tie_spawn": (
        [(0, 21), (0, 21), (100, 124), (103, 112), (109, 118)],
        21,
        {
            2: ("single_append", ()),
            3: ("single_append", ()),
            4: ("single_split", ("c_all", "delta_tie")),
            5: ("dual_split", ("c_zero",)),
        },
    ),
    "delta_tie_merged": (
        [(0, 20), (2, 4), (20, 30), (23, 25), (24, 40)],
        12,
        {
            2: ("single_split", ("c_all",)),
            3: ("dual_append", ()),
            4: ("single_split", ("delta_tie",)),
            5: ("dual_append", ("delta_tie_merged",)),
        },
    ),
}


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Run every test with default settings, regardless of the caller's environment."""
    for name in (
        "LOG_LEVEL",
        "INTERVALSEP_DEBUG_CHECKS",
        "INTERVALSEP_BRUTE_FORCE_LIMIT",
        "INTERVALSEP_BENCH_PRELIM_MAX",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def worked_instances():
    """Fixture providing the hand-checked instances, normalized, with their optimal delta."""
    return {name: (normalize_instance(pairs), delta) for name, (pairs, delta) in WORKED_INSTANCES.items()}


@pytest.fixture
def nested_instance():
    """Fixture providing {[0,8], [2,4], [3,5]}."""
    return normalize_instance([(0, 8), (2, 4), (3, 5)])


@pytest.fixture
def long_short_instance():
    """Fixture providing {[0,10], [1,3]}."""
    return normalize_instance([(0, 10), (1, 3)])
