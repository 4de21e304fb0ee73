"""
Unit tests for linear chord-diagram generation and OEB classes.
"""

import itertools
from pathlib import Path
import pytest

import sys

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from twuality.chord import DiagramForm
from twuality.enumeration import (
    DiagramStream,
    double_factorial,
    linear_diagram_count,
    linear_diagrams,
    oebs_up_to_iso,
)
from twuality.isomorphism import canonical_code, is_oeb


class TestCounts:
    """(2k-1)!! linear diagrams."""

    def test_double_factorial(self):
        assert [double_factorial(m) for m in (-1, 0, 1, 3, 5, 7)] == [1, 1, 1, 3, 15, 105]

    @pytest.mark.parametrize(
        "k,expected",
        [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105), (5, 945), (6, 10395), (7, 135135), (8, 2027025)],
    )
    def test_linear_count(self, k, expected):
        assert linear_diagram_count(k) == expected
        assert linear_diagram_count(k, signed=True) == 2**k * expected

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
    def test_generated_counts(self, k):
        entries = [d.entries for d in linear_diagrams(k)]
        assert len(entries) == len(set(entries)) == linear_diagram_count(k)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [6, 7])
    def test_generated_counts_large(self, k):
        assert sum(1 for _ in linear_diagrams(k)) == linear_diagram_count(k)

    def test_signed_count(self):
        assert linear_diagram_count(3, signed=True) == 120
        assert len(list(linear_diagrams(3, signed=True))) == 120
        assert sum(1 for _ in linear_diagrams(5, signed=True)) == 30240

    def test_all_distinct(self):
        diagrams = [d.entries for d in linear_diagrams(4)]
        assert len(set(diagrams)) == len(diagrams)

    def test_end_spot_form(self):
        assert [d.entries for d in linear_diagrams(1)] == [(2, 1)]
        assert all(d.form is DiagramForm.END_SPOT for d in linear_diagrams(2))
        assert sorted(d.entries for d in linear_diagrams(2)) == [
            (2, 1, 4, 3),
            (3, 4, 1, 2),
            (4, 3, 2, 1),
        ]


class TestStream:
    """Resumable generation."""

    def test_resume(self):
        expected = [d.entries for d in linear_diagrams(3)]
        stream = DiagramStream(3)
        head = [d.entries for d in itertools.islice(stream, 5)]
        assert stream.position == 5
        resumed = DiagramStream(3, position=stream.position)
        assert head + [d.entries for d in resumed] == expected
        assert resumed.total == 15


class TestOebClasses:
    """Chord diagrams up to rotation and reflection."""

    @pytest.mark.parametrize("k,expected", [(1, 1), (2, 2), (3, 5), (4, 17), (5, 79)])
    def test_class_counts(self, k, expected):
        assert len(oebs_up_to_iso(k)) == expected

    def test_sorted_offset_forms(self):
        oebs = oebs_up_to_iso(2)
        assert [d.entries for d in oebs] == [(1, 3, 1, 3), (2, 2, 2, 2)]
        assert all(d.form is DiagramForm.OFFSET for d in oebs)

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_matches_brute_force(self, k):
        classes = {canonical_code(d.to_graph()) for d in linear_diagrams(k)}
        oebs = oebs_up_to_iso(k)
        assert len(classes) == len(oebs)
        assert {canonical_code(d.to_graph()) for d in oebs} == classes
        assert all(is_oeb(d.to_graph()) for d in oebs)

    @pytest.mark.slow
    def test_six_chords(self):
        classes = {canonical_code(d.to_graph()) for d in linear_diagrams(6)}
        oebs = oebs_up_to_iso(6)
        assert len(oebs) == len(classes) == 554
        assert {canonical_code(d.to_graph()) for d in oebs} == classes


if __name__ == "__main__":
    pytest.main([__file__])
