"""Solvers for the one-direction interval separation problem.

This module provides the quadratic candidate-list solver, the O(n log n)
solver with its branch-tree reconstruction, and the solve() front door.
"""

from src.solvers.fast import FastSolver, StepOutcome, check_invariants, init_state, process_interval, solve_fast
from src.solvers.preliminary import CandidateList, PreliminarySolver, solve_preliminary, step_list
from src.solvers.reconstruction import BranchNode, Lineage, record_spawn, replay
from src.solvers.solve import Algorithm, solve

__all__ = [
    "Algorithm",
    "BranchNode",
    "CandidateList",
    "FastSolver",
    "Lineage",
    "PreliminarySolver",
    "StepOutcome",
    "check_invariants",
    "init_state",
    "process_interval",
    "record_spawn",
    "replay",
    "solve",
    "solve_fast",
    "solve_preliminary",
    "step_list",
]
