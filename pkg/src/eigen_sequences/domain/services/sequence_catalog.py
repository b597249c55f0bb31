"""Registry of named sequences with embedded snapshots."""

import logging
from fractions import Fraction
from typing import Iterable

from eigen_sequences.domain.entities.catalog_entry import CatalogEntry
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.exceptions.unknown_sequence_error import UnknownSequenceError
from eigen_sequences.domain.services import catalog_generators

logger = logging.getLogger(__name__)


def _snapshot(values: Iterable[int | Fraction]) -> tuple[Fraction, ...]:
    return tuple(Fraction(value) for value in values)


DEFAULT_ENTRIES = (
    CatalogEntry(
        "catalan", catalog_generators.catalan,
        _snapshot([1, 1, 2, 5, 14, 42, 132, 429, 1430]), "A000108", "Catalan numbers",
    ),
    CatalogEntry(
        "motzkin", catalog_generators.motzkin,
        _snapshot([1, 1, 2, 4, 9, 21, 51, 127, 323, 835]), "A001006", "Motzkin numbers",
    ),
    CatalogEntry(
        "fibonacci", catalog_generators.fibonacci,
        _snapshot([0, 1, 1, 2, 3, 5, 8, 13, 21, 34]), "A000045", "Fibonacci numbers",
    ),
    CatalogEntry(
        "lucas", catalog_generators.lucas,
        _snapshot([2, 1, 3, 4, 7, 11, 18, 29, 47, 76]), "A000032", "Lucas numbers",
    ),
    CatalogEntry(
        "lucas_half", catalog_generators.lucas_half,
        _snapshot([1, Fraction(1, 2), Fraction(3, 2), 2, Fraction(7, 2), Fraction(11, 2)]),
        None, "Half the Lucas numbers",
    ),
    CatalogEntry(
        "central_binomial", catalog_generators.central_binomial,
        _snapshot([1, 2, 6, 20, 70, 252, 924]), "A000984", "Central binomial coefficients",
    ),
    CatalogEntry(
        "central_delannoy", catalog_generators.central_delannoy,
        _snapshot([1, 3, 13, 63, 321, 1683, 8989]), "A001850", "Central Delannoy numbers",
    ),
    CatalogEntry(
        "a101890", catalog_generators.a101890,
        _snapshot([0, 0, 1, 3, 7, 15, 32, 70, 157, 357]), "A101890",
        "Binomial transform of the aerated Fibonacci numbers",
    ),
    CatalogEntry(
        "a155585", catalog_generators.a155585,
        _snapshot([1, 1, 0, -2, 0, 16, 0, -272, 0, 7936]), "A155585", "EGF e^t sech t",
    ),
    CatalogEntry(
        "ones", catalog_generators.ones, _snapshot([1, 1, 1, 1, 1]), "A000012", "All ones",
    ),
    CatalogEntry(
        "zeros_then_one", catalog_generators.zeros_then_one,
        _snapshot([1, 0, 0, 0, 0]), None, "a_0 = 1, a_n = 0 afterwards",
    ),
    CatalogEntry(
        "catalan_aerated", catalog_generators.catalan_aerated,
        _snapshot([1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42]), None, "Catalan numbers interleaved with zeros",
    ),
    CatalogEntry(
        "fibonacci_aerated", catalog_generators.fibonacci_aerated,
        _snapshot([0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 5, 0, 8, 0, 13, 0, 21]), None,
        "Fibonacci numbers interleaved with zeros",
    ),
)


class SequenceCatalog:
    """Looks up named sequences and checks them against their snapshots."""

    def __init__(self, entries: Iterable[CatalogEntry] = DEFAULT_ENTRIES) -> None:
        """
        Initialize the catalog.

        Args:
            entries: Catalog records; names must be unique.
        """
        self._entries: dict[str, CatalogEntry] = {}
        for entry in entries:
            if entry.name in self._entries:
                raise ValueError(f"Duplicate catalog name: {entry.name}")
            self._entries[entry.name] = entry

    def names(self) -> list[str]:
        """Available names, sorted."""
        return sorted(self._entries)

    def entry(self, name: str) -> CatalogEntry:
        """
        Return the record for a name.

        Raises:
            UnknownSequenceError: If the name is not registered.
        """
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownSequenceError(name, self.names()) from None

    def get_sequence(self, name: str, count: int) -> NumberSequence:
        """First `count` exact terms of a named sequence."""
        entry = self.entry(name)
        logger.debug("Generating %s terms of %s", count, name)
        return entry.generator(count).renamed(name)

    def verify_snapshot(self, name: str) -> bool:
        """True when the generator reproduces the embedded snapshot."""
        entry = self.entry(name)
        generated = entry.generator(len(entry.snapshot)).terms
        if generated != entry.snapshot:
            logger.error("Catalog entry %s disagrees with its snapshot: %s", name, generated)
            return False
        return True

    def verify_all(self) -> dict[str, bool]:
        """Snapshot check for every entry."""
        return {name: self.verify_snapshot(name) for name in self.names()}
