"""Unit tests for SequenceCatalog and the catalog generators."""

import path_setup

path_setup.add_src_path()


import unittest
from fractions import Fraction

from eigen_sequences.domain.entities.catalog_entry import CatalogEntry
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.exceptions.unknown_sequence_error import UnknownSequenceError
from eigen_sequences.domain.services import catalog_generators
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog
from eigen_sequences.domain.services.sequence_operators import gen_binomial


class TestSequenceCatalog(unittest.TestCase):
    """Tests lookup and snapshot verification."""

    def setUp(self) -> None:
        """Set up shared catalog instance."""
        self._catalog = SequenceCatalog()

    def test_every_entry_matches_snapshot(self) -> None:
        """Generators reproduce their embedded snapshots."""
        results = self._catalog.verify_all()

        self.assertTrue(all(results.values()), results)

    def test_names_cover_the_catalog(self) -> None:
        """The documented names are registered."""
        expected = {
            "catalan", "motzkin", "fibonacci", "lucas", "central_binomial", "central_delannoy",
            "a101890", "a155585", "ones", "zeros_then_one",
        }

        self.assertTrue(expected.issubset(self._catalog.names()))
        self.assertEqual(self._catalog.names(), sorted(self._catalog.names()))

    def test_get_sequence_examples(self) -> None:
        """Catalan and Motzkin prefixes carry their names."""
        catalan = self._catalog.get_sequence("catalan", 9)

        self.assertEqual(catalan.terms, (1, 1, 2, 5, 14, 42, 132, 429, 1430))
        self.assertEqual(catalan.name, "catalan")
        self.assertEqual(self._catalog.get_sequence("motzkin", 7).terms, (1, 1, 2, 4, 9, 21, 51))

    def test_aerated_fibonacci(self) -> None:
        """(0, 0, 1, 0, 1, 0, 2, ...)."""
        self.assertEqual(
            self._catalog.get_sequence("fibonacci_aerated", 17).terms,
            (0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 5, 0, 8, 0, 13, 0, 21),
        )

    def test_unknown_name_lists_available(self) -> None:
        """Unknown names raise with the available names in the message."""
        with self.assertRaises(UnknownSequenceError) as context:
            self._catalog.get_sequence("nope", 3)

        self.assertIn("catalan", str(context.exception))
        self.assertEqual(context.exception.name, "nope")

    def test_broken_snapshot_detected(self) -> None:
        """A generator that disagrees with its snapshot fails verification."""
        entry = CatalogEntry("bad", catalog_generators.ones, (Fraction(1), Fraction(2)))
        catalog = SequenceCatalog([entry])

        with self.assertLogs("eigen_sequences.domain.services.sequence_catalog", level="ERROR"):
            self.assertFalse(catalog.verify_snapshot("bad"))

    def test_duplicate_names_rejected(self) -> None:
        """Names must be unique."""
        entry = CatalogEntry("ones", catalog_generators.ones, (Fraction(1),))

        with self.assertRaises(ValueError):
            SequenceCatalog([entry, entry])


class TestCatalogGenerators(unittest.TestCase):
    """Tests generator edge cases and longer prefixes."""

    def test_generators_honour_any_length(self) -> None:
        """Every generator returns exactly N terms, including N = 0 and 1."""
        generators = [
            catalog_generators.catalan, catalog_generators.motzkin, catalog_generators.fibonacci,
            catalog_generators.lucas, catalog_generators.central_delannoy, catalog_generators.catalan_aerated,
            catalog_generators.fibonacci_aerated, catalog_generators.a155585, catalog_generators.zeros_then_one,
        ]
        for generator in generators:
            for count in (0, 1, 2, 7):
                with self.subTest(generator=generator.__name__, count=count):
                    self.assertEqual(len(generator(count)), count)

    def test_every_catalog_name_accepts_zero_terms(self) -> None:
        """Each registered name yields an empty prefix for N = 0."""
        catalog = SequenceCatalog()
        for name in catalog.names():
            with self.subTest(name=name):
                self.assertEqual(catalog.get_sequence(name, 0).terms, ())

    def test_motzkin_from_aerated_catalan_at_order_24(self) -> None:
        """Recurrence and binomial transform agree."""
        self.assertEqual(
            gen_binomial(catalog_generators.catalan_aerated(24), 1, 1).terms,
            catalog_generators.motzkin(24).terms,
        )

    def test_a155585_prefix(self) -> None:
        """e^t sech t."""
        self.assertEqual(catalog_generators.a155585(6), NumberSequence.of([1, 1, 0, -2, 0, 16]))
