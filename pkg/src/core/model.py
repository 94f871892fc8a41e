"""Domain model for interval separation.

Coordinates, lengths and displacements are exact rationals (`fractions.Fraction`).
Intervals are addressed two ways:

- ``id``: the 1-based ordinal of the interval in the caller's input. Output files
  are written in this order.
- index: the 1-based position after normalization, i.e. after sorting by
  (left, right, id). Every solver works with indices.
"""

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.exceptions import (
    DegenerateIntervalError,
    InvalidPermutationError,
    InvalidScalarError,
)

Scalar = Fraction
ScalarLike = Union[int, Fraction, Decimal, str]


def to_scalar(value: ScalarLike) -> Scalar:
    """Convert a value to an exact rational.

    Accepts ints, Fractions, Decimals and strings such as ``"3"``, ``"-0.25"``
    or ``"7/3"``. Decimal strings are converted exactly ("0.1" is 1/10).

    Args:
        value: Value to convert

    Returns:
        Exact Fraction

    Raises:
        InvalidScalarError: for floats, bools, non-finite decimals and unparseable text
    """
    if isinstance(value, bool):
        raise InvalidScalarError(value, "booleans are not numbers here")
    if isinstance(value, float):
        raise InvalidScalarError(value, "binary floats are not exact; pass a string or Fraction")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise InvalidScalarError(value, "not finite")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise InvalidScalarError(value, "empty")
        try:
            if "/" in text:
                num, _, den = text.partition("/")
                if not den.strip():
                    raise InvalidScalarError(value, "missing denominator")
                return Fraction(int(num), int(den))
            dec = Decimal(text)
        except (ValueError, ZeroDivisionError, InvalidOperation) as e:
            raise InvalidScalarError(value, str(e) or "unparseable") from e
        if not dec.is_finite():
            raise InvalidScalarError(value, "not finite")
        return Fraction(dec)
    raise InvalidScalarError(value, f"unsupported type {type(value).__name__}")


def format_scalar(s: Scalar) -> str:
    """Render a rational as an integer or as ``p/q`` in lowest terms."""
    s = Fraction(s)
    if s.denominator == 1:
        return str(s.numerator)
    return f"{s.numerator}/{s.denominator}"


class Direction(str, Enum):
    """Which way intervals may move."""

    ONE = "one"
    TWO = "two"


@dataclass(frozen=True)
class Interval:
    """An input interval [left, right] with its input ordinal."""

    id: int
    left: Scalar
    right: Scalar

    @property
    def length(self) -> Scalar:
        return self.right - self.left


@dataclass(frozen=True)
class Instance:
    """Intervals sorted by (left, right, id).

    Index j (1-based) refers to ``intervals[j - 1]``.
    """

    intervals: Tuple[Interval, ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def interval(self, j: int) -> Interval:
        """Return the interval at 1-based sorted index j."""
        if not 1 <= j <= self.n:
            raise IndexError(f"interval index {j} out of range 1..{self.n}")
        return self.intervals[j - 1]

    def by_id(self, interval_id: int) -> Interval:
        """Return the interval with the given input ordinal."""
        try:
            return self.intervals[self._index_of_id[interval_id] - 1]
        except KeyError:
            raise KeyError(f"no interval with id {interval_id}") from None

    def index_of(self, interval_id: int) -> int:
        """Return the sorted index of the interval with the given input ordinal."""
        return self._index_of_id[interval_id]

    @cached_property
    def _index_of_id(self) -> Dict[int, int]:
        return {iv.id: j for j, iv in enumerate(self.intervals, start=1)}

    @cached_property
    def _integral(self) -> bool:
        return all(iv.left.denominator == 1 and iv.right.denominator == 1 for iv in self.intervals)

    def _native(self, v: Scalar) -> Union[int, Scalar]:
        return v.numerator if self._integral else v

    @cached_property
    def lefts(self) -> Tuple:
        """Left endpoints by sorted index; slot 0 is unused.

        Values are plain ints when every coordinate is integral, Fractions
        otherwise. Both compare and add exactly, so solvers may use either.
        """
        return (None,) + tuple(self._native(iv.left) for iv in self.intervals)

    @cached_property
    def rights(self) -> Tuple:
        """Right endpoints by sorted index; slot 0 is unused."""
        return (None,) + tuple(self._native(iv.right) for iv in self.intervals)

    @cached_property
    def lengths(self) -> Tuple:
        """Lengths by sorted index; slot 0 is unused."""
        return (None,) + tuple(r - l for l, r in zip(self.lefts[1:], self.rights[1:]))


def _sorted_instance(intervals: Iterable[Interval]) -> Instance:
    return Instance(tuple(sorted(intervals, key=lambda iv: (iv.left, iv.right, iv.id))))


@dataclass(frozen=True)
class Configuration:
    """New left-endpoint positions for a subset of intervals, keyed by sorted index."""

    positions: Mapping[int, Scalar]

    @property
    def subset(self) -> frozenset:
        return frozenset(self.positions)

    def displacement(self, j: int, inst: Instance) -> Scalar:
        return self.positions[j] - inst.interval(j).left

    def shifted(self, t: Scalar) -> "Configuration":
        """Return the configuration with every position moved by t."""
        return Configuration({j: p + t for j, p in self.positions.items()})

    def negative_displacement(self, inst: Instance) -> Optional[int]:
        """Return the first covered index (in sorted order) that moved left, if any."""
        for j in sorted(self.positions):
            if self.displacement(j, inst) < 0:
                return j
        return None

    def overlapping_pair(self, inst: Instance) -> Optional[Tuple[int, int]]:
        """Return the first pair of covered indices whose placed intervals overlap.

        Touching at a single point is not overlap. Pairs are reported in
        placement order (left one first).
        """
        placed = sorted(self.positions, key=lambda j: (self.positions[j], j))
        for p, q in zip(placed, placed[1:]):
            if self.positions[p] + inst.interval(p).length > self.positions[q]:
                return (p, q)
        return None


@dataclass(frozen=True)
class Solution:
    """A solved instance: objective, witness order and full configuration."""

    delta: Scalar
    order: Tuple[int, ...]
    config: Configuration
    direction: Direction
    instance: Instance = field(repr=False)

    def rows(self) -> List[Tuple[int, Scalar, Scalar]]:
        """Return ``(id, new_left, displacement)`` per interval in input order."""
        rows = []
        for j in sorted(self.config.positions, key=lambda j: self.instance.interval(j).id):
            iv = self.instance.interval(j)
            pos = self.config.positions[j]
            rows.append((iv.id, pos, pos - iv.left))
        return rows


def normalize_instance(raw: Sequence[Tuple[ScalarLike, ScalarLike]]) -> Instance:
    """Build a sorted, validated Instance from (left, right) pairs.

    Args:
        raw: Pairs in input order; the i-th pair gets id i (1-based)

    Returns:
        Instance sorted by (left, right, id)

    Raises:
        InvalidScalarError: if a coordinate is not an exact number
        DegenerateIntervalError: if some pair has left >= right
    """
    intervals = []
    for ordinal, (left, right) in enumerate(raw, start=1):
        l, r = to_scalar(left), to_scalar(right)
        if l >= r:
            raise DegenerateIntervalError(format_scalar(l), format_scalar(r), ordinal)
        intervals.append(Interval(ordinal, l, r))
    return _sorted_instance(intervals)


def _check_permutation(inst: Instance, order: Sequence[int]) -> None:
    seen = set()
    for j in order:
        if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= inst.n:
            raise InvalidPermutationError(f"index {j!r} out of range 1..{inst.n}")
        if j in seen:
            raise InvalidPermutationError(f"index {j} appears more than once")
        seen.add(j)


def left_possible_placement(inst: Instance, order: Sequence[int]) -> Configuration:
    """Place intervals in the given order, each as far left as feasibility allows.

    Args:
        inst: Normalized instance
        order: Permutation of a subset of 1..n

    Returns:
        Configuration covering exactly the indices in ``order``

    Raises:
        InvalidPermutationError: on duplicate or out-of-range indices
    """
    _check_permutation(inst, order)
    positions: Dict[int, Scalar] = {}
    end: Optional[Scalar] = None
    for j in order:
        iv = inst.intervals[j - 1]
        pos = iv.left if end is None else max(end, iv.left)
        positions[j] = pos
        end = pos + iv.length
    return Configuration(positions)


def max_displacement(
    config: Configuration, inst: Instance, direction: Direction = Direction.ONE
) -> Scalar:
    """Largest displacement in the configuration (absolute value for two-direction)."""
    best = Fraction(0)
    for j, pos in config.positions.items():
        d = pos - inst.intervals[j - 1].left
        if direction == Direction.TWO:
            d = abs(d)
        if d > best:
            best = d
    return best


def is_feasible(config: Configuration, inst: Instance, direction: Direction = Direction.ONE) -> bool:
    """True iff no covered intervals overlap and, for one-direction, none moved left."""
    if direction == Direction.ONE and config.negative_displacement(inst) is not None:
        return False
    return config.overlapping_pair(inst) is None


def to_two_direction(one_dir: Solution) -> Solution:
    """Shift an optimal one-direction solution left by half its delta.

    The result is an optimal two-direction solution with the same order.
    """
    half = one_dir.delta / 2
    return Solution(
        delta=half,
        order=one_dir.order,
        config=one_dir.config.shifted(-half),
        direction=Direction.TWO,
        instance=one_dir.instance,
    )


def reflect_instance(inst: Instance, about: ScalarLike = 0) -> Instance:
    """Mirror every interval about a point, keeping ids."""
    a2 = 2 * to_scalar(about)
    return _sorted_instance(Interval(iv.id, a2 - iv.right, a2 - iv.left) for iv in inst.intervals)
