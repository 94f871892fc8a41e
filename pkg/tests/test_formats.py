"""Tests for the instance and solution text formats."""

from fractions import Fraction

import pytest

from src.cli.formats import parse_instance, parse_solution, read_text, render_instance, render_solution
from src.core.exceptions import DegenerateIntervalError, ParseError
from src.core.model import normalize_instance
from src.solvers.solve import solve


class TestParseInstance:
    """Tests for parse_instance."""

    def test_basic(self):
        inst = parse_instance("0 2\n1 3\n")
        assert [(iv.left, iv.right) for iv in inst.intervals] == [(0, 2), (1, 3)]

    def test_comments_and_blank_lines(self):
        """Test '#' comments and blank lines are skipped."""
        text = "# header\n\n0 2   # first\n   \n1/2 0.75\n"
        inst = parse_instance(text)
        assert inst.n == 2
        assert inst.by_id(2).left == Fraction(1, 2)
        assert inst.by_id(2).right == Fraction(3, 4)

    def test_wrong_token_count_names_line(self):
        """Test a malformed line reports its line number."""
        with pytest.raises(ParseError) as exc_info:
            parse_instance("0 2\n# note\n1 2 3\n")
        assert exc_info.value.line_number == 3
        assert exc_info.value.message.startswith("line 3:")

    def test_bad_number(self):
        with pytest.raises(ParseError) as exc_info:
            parse_instance("0 x\n")
        assert exc_info.value.line_number == 1

    def test_degenerate(self):
        with pytest.raises(DegenerateIntervalError):
            parse_instance("1 1\n")

    def test_render_then_parse(self):
        """Test rendering keeps ids and exact values."""
        inst = normalize_instance([(3, 4), ("1/3", "5/2"), (-1, 0)])
        text = render_instance(inst)
        assert text == "3 4\n1/3 5/2\n-1 0\n"
        assert parse_instance(text) == inst


class TestSolutionFormat:
    """Tests for render_solution and parse_solution."""

    def test_render_in_input_order(self):
        """Test rows are written by id with exact rationals."""
        sol = solve(normalize_instance([(0, 2), (1, 3)]), mode="two")
        assert render_solution(sol) == "delta 1/2\n1 -1/2 -1/2\n2 3/2 1/2\n"

    def test_parse(self):
        record = parse_solution("delta 3\n1 3 3\n2 1 0\n")
        assert record.delta == 3
        assert record.rows == ((1, 3, 3), (2, 1, 0))

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_solution("1 0 0\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_solution("# nothing\n")

    def test_bad_row(self):
        """Test a short row reports its line number."""
        with pytest.raises(ParseError) as exc_info:
            parse_solution("delta 0\n1 0\n")
        assert exc_info.value.line_number == 2

    def test_bad_id(self):
        with pytest.raises(ParseError):
            parse_solution("delta 0\none 0 0\n")


class TestReadText:
    """Tests for read_text."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read_text(tmp_path / "absent.txt")

    def test_reads_utf8(self, tmp_path):
        path = tmp_path / "inst.txt"
        path.write_text("0 1  # café\n", encoding="utf-8")
        assert parse_instance(read_text(path)).n == 1
