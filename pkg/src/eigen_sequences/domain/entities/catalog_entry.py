"""Named sequence generator with an embedded self-check snapshot."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from eigen_sequences.domain.entities.number_sequence import NumberSequence


@dataclass(frozen=True)
class CatalogEntry:
    """
    Catalog record.

    Attributes:
        name: Lookup key used by the command line.
        generator: Produces the first N exact terms.
        snapshot: Known first terms the generator must reproduce.
        oeis_id: OEIS A-number when the sequence has one.
        description: One line shown in listings.
    """

    name: str
    generator: Callable[[int], NumberSequence]
    snapshot: tuple[Fraction, ...]
    oeis_id: Optional[str] = None
    description: str = ""
