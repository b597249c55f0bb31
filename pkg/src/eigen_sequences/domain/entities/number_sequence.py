"""Finite prefix of an infinite sequence with exact terms."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


@dataclass(frozen=True)
class NumberSequence:
    """
    First N terms of a sequence.

    Attributes:
        terms: Exact rational terms a_0 .. a_{N-1}.
        name: Optional label, carried through the command-line documents.
    """

    terms: tuple[Fraction, ...]
    name: Optional[str] = None

    def __post_init__(self) -> None:
        """Normalize terms to Fractions."""
        object.__setattr__(self, "terms", tuple(Fraction(term) for term in self.terms))

    @classmethod
    def of(cls, values: Iterable[int | Fraction], name: Optional[str] = None) -> "NumberSequence":
        """Build a sequence from ints or Fractions."""
        return cls(tuple(Fraction(value) for value in values), name)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, index: int) -> Fraction:
        return self.terms[index]

    def truncate(self, length: int) -> "NumberSequence":
        """Return the first `length` terms, keeping the name."""
        if length > len(self.terms):
            raise ValueError(f"Cannot truncate {len(self.terms)} terms to {length}")
        return NumberSequence(self.terms[:length], self.name)

    def renamed(self, name: Optional[str]) -> "NumberSequence":
        """Return the same terms under another label."""
        return NumberSequence(self.terms, name)

    def is_even(self) -> bool:
        """True when every odd-index term is zero."""
        return all(term == 0 for term in self.terms[1::2])
