"""Unit tests for TruncatedSeries."""

import path_setup

path_setup.add_src_path()


import unittest
from fractions import Fraction

from eigen_sequences.domain.entities.series_kind import SeriesKind
from eigen_sequences.domain.entities.truncated_series import TruncatedSeries


class TestTruncatedSeries(unittest.TestCase):
    """Tests TruncatedSeries invariants."""

    def test_defaults_to_ogf(self) -> None:
        """Kind defaults to OGF and order is the coefficient count."""
        series = TruncatedSeries((1, 2, 3))

        self.assertIs(series.kind, SeriesKind.OGF)
        self.assertEqual(series.order, 3)
        self.assertEqual(series[1], Fraction(2))

    def test_empty_series_rejected(self) -> None:
        """Truncation order must be at least 1."""
        with self.assertRaises(ValueError):
            TruncatedSeries(())

    def test_is_immutable(self) -> None:
        """Series are frozen values."""
        series = TruncatedSeries((1,), SeriesKind.EGF)

        with self.assertRaises(AttributeError):
            series.kind = SeriesKind.OGF  # type: ignore[misc]
