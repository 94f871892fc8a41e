"""Instance and solution text formats.

Instance file: one ``left right`` pair per line. Tokens are integers,
decimals (converted exactly) or ``p/q`` rationals. ``#`` starts a comment and
blank lines are ignored. The n-th pair gets id n.

Solution file: ``delta <value>`` on the first line, then one
``<id> <new_left> <displacement>`` line per interval in id order.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

from src.core.exceptions import InvalidScalarError, ParseError
from src.core.model import Instance, Scalar, Solution, format_scalar, normalize_instance, to_scalar

COMMENT_CHAR = "#"


@dataclass(frozen=True)
class SolutionRecord:
    """A parsed solution file."""

    delta: Scalar
    rows: Tuple[Tuple[int, Scalar, Scalar], ...]


def _content_lines(text: str):
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT_CHAR, 1)[0].strip()
        if line:
            yield line_number, line


def _scalar(token: str, line_number: int) -> Scalar:
    try:
        return to_scalar(token)
    except InvalidScalarError as e:
        raise ParseError(f"invalid number {token!r}", line_number) from e


def parse_instance(text: str) -> Instance:
    """Parse instance text into a normalized Instance.

    Raises:
        ParseError: on a malformed line
        DegenerateIntervalError: if some pair has left >= right
    """
    pairs: List[Tuple[Scalar, Scalar]] = []
    for line_number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'left right', got {len(tokens)} token(s)", line_number)
        pairs.append((_scalar(tokens[0], line_number), _scalar(tokens[1], line_number)))
    return normalize_instance(pairs)


def render_instance(inst: Instance) -> str:
    """Render an instance in id order."""
    lines = [
        f"{format_scalar(iv.left)} {format_scalar(iv.right)}"
        for iv in sorted(inst.intervals, key=lambda iv: iv.id)
    ]
    return "".join(line + "\n" for line in lines)


def parse_solution(text: str) -> SolutionRecord:
    """Parse solution text.

    Raises:
        ParseError: on a missing header or malformed row
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty solution file")
    line_number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "delta":
        raise ParseError("first line must be 'delta <value>'", line_number)
    delta = _scalar(tokens[1], line_number)

    rows = []
    for line_number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected '<id> <new_left> <displacement>', got {len(tokens)} token(s)", line_number)
        try:
            interval_id = int(tokens[0])
        except ValueError:
            raise ParseError(f"invalid id {tokens[0]!r}", line_number) from None
        rows.append((interval_id, _scalar(tokens[1], line_number), _scalar(tokens[2], line_number)))
    return SolutionRecord(delta=delta, rows=tuple(rows))


def render_solution(sol: Solution) -> str:
    lines = [f"delta {format_scalar(sol.delta)}"]
    for interval_id, new_left, displacement in sol.rows():
        lines.append(f"{interval_id} {format_scalar(new_left)} {format_scalar(displacement)}")
    return "".join(line + "\n" for line in lines)


def read_text(path: Union[str, Path]) -> str:
    """Read a UTF-8 file, reporting failures as ParseError."""
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
