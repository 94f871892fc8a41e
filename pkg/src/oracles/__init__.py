"""Ground-truth oracles and instance generators.

This module provides the exhaustive and equal-length oracles used to check the
solvers, plus seeded instance generators.
"""

from src.oracles.brute_force import brute_force, greedy_equal_length
from src.oracles.generators import GenSpec, gen_distinctness, gen_equal_length, gen_random

__all__ = [
    "brute_force",
    "greedy_equal_length",
    "GenSpec",
    "gen_distinctness",
    "gen_equal_length",
    "gen_random",
]
