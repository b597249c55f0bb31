"""Wire schema for a sequence of exact rationals."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from eigen_sequences.cli.parsers.rational_parser import format_rational, parse_rational
from eigen_sequences.domain.entities.number_sequence import NumberSequence


class SequenceDocument(BaseModel):
    """
    JSON form of a sequence: {"name": ..., "offset": 0, "terms": ["1", "1/2", ...]}.

    Attributes:
        name: Optional label carried through transforms.
        offset: Index of the first term.
        terms: Rationals as "p" or "p/q" strings; floats are rejected.
    """

    model_config = ConfigDict(strict=True, extra='forbid')

    name: Optional[str] = Field(None, description="Sequence label.")
    offset: int = Field(0, description="Index of the first term.")
    terms: list[str] = Field(..., description="Exact rational terms.")

    @field_validator('terms')
    @classmethod
    def terms_must_be_rationals(cls, v: list[str]) -> list[str]:
        """Validate that every term is an exact rational literal."""
        for term in v:
            parse_rational(term)
        return v

    @classmethod
    def from_sequence(cls, sequence: NumberSequence, offset: int = 0) -> "SequenceDocument":
        """Serialize a domain sequence."""
        return cls(
            name=sequence.name,
            offset=offset,
            terms=[format_rational(term) for term in sequence.terms],
        )

    def to_sequence(self) -> NumberSequence:
        """Parse into a domain sequence."""
        return NumberSequence(tuple(parse_rational(term) for term in self.terms), self.name)
