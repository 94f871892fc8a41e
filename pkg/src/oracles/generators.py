"""Seeded instance generators.

- gen_random: dense random intervals, a share of them nested inside earlier
  ones so that the insert and swap cases get exercised.
- gen_equal_length: random intervals of one common length.
- gen_distinctness: one unit interval centred at 10*a for every integer a,
  so the optimum is zero exactly when the integers are pairwise distinct.
"""

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator

from src.core.model import Instance, normalize_instance

DEFAULT_CONTAINMENT_BIAS = 0.3
DISTINCTNESS_SCALE = 10
DISTINCTNESS_HALF_WIDTH = Fraction(1, 2)


class GenSpec(BaseModel):
    """Parameters of gen_random.

    ``coord_max`` defaults to 4n and ``max_length`` to n.
    """

    n: int = Field(ge=1)
    seed: int = 0
    coord_max: Optional[int] = Field(default=None, ge=0)
    min_length: int = Field(default=1, ge=1)
    max_length: Optional[int] = Field(default=None, ge=1)
    containment_bias: float = Field(default=DEFAULT_CONTAINMENT_BIAS, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def fill_defaults(self) -> "GenSpec":
        if self.coord_max is None:
            self.coord_max = 4 * self.n
        if self.max_length is None:
            self.max_length = max(self.n, self.min_length)
        if self.max_length < self.min_length:
            raise ValueError(f"max_length {self.max_length} is below min_length {self.min_length}")
        return self


def _nested_in(rng: random.Random, outer: Tuple[int, int]) -> Tuple[int, int]:
    left, right = outer
    new_left = rng.randint(left, right - 1)
    return new_left, rng.randint(new_left + 1, right)


def gen_random(spec: GenSpec) -> Instance:
    """Generate a deterministic random instance.

    With a positive containment bias and n >= 2, at least one interval is
    nested inside an earlier one.
    """
    rng = random.Random(spec.seed)
    pairs: List[Tuple[int, int]] = []
    nested = False
    for k in range(spec.n):
        force = k == spec.n - 1 and k > 0 and not nested and spec.containment_bias > 0
        if pairs and (force or rng.random() < spec.containment_bias):
            pairs.append(_nested_in(rng, rng.choice(pairs)))
            nested = True
        else:
            left = rng.randint(0, spec.coord_max)
            pairs.append((left, left + rng.randint(spec.min_length, spec.max_length)))
    return normalize_instance(pairs)


def gen_equal_length(n: int, seed: int = 0, length: int = 2, coord_max: Optional[int] = None) -> Instance:
    """Generate n intervals of the same length with random left endpoints."""
    rng = random.Random(seed)
    hi = 4 * n if coord_max is None else coord_max
    lefts = [rng.randint(0, hi) for _ in range(n)]
    return normalize_instance([(x, x + length) for x in lefts])


def gen_distinctness(a: Sequence[int]) -> Instance:
    """Unit intervals centred at 10*a_k, with ids in input order."""
    pairs = []
    for value in a:
        center = Fraction(DISTINCTNESS_SCALE * int(value))
        pairs.append((center - DISTINCTNESS_HALF_WIDTH, center + DISTINCTNESS_HALF_WIDTH))
    return normalize_instance(pairs)
