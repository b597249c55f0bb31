"""Wire schema for a sequence of polynomials."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from eigen_sequences.cli.parsers.rational_parser import format_rational, parse_rational
from eigen_sequences.domain.entities.poly_sequence import PolySequence
from eigen_sequences.domain.entities.polynomial import Polynomial


class PolySequenceDocument(BaseModel):
    """Polynomials as lists of coefficient strings, constant term first."""

    model_config = ConfigDict(strict=True, extra='forbid')

    name: Optional[str] = Field(None, description="Sequence label.")
    offset: int = Field(0, description="Index of the first polynomial.")
    polys: list[list[str]] = Field(..., description="Coefficients of x^0 .. x^d per polynomial.")

    @field_validator('polys')
    @classmethod
    def coefficients_must_be_rationals(cls, v: list[list[str]]) -> list[list[str]]:
        """Validate every coefficient."""
        for coeffs in v:
            for coeff in coeffs:
                parse_rational(coeff)
        return v

    @classmethod
    def from_poly_sequence(cls, poly_sequence: PolySequence, offset: int = 0) -> "PolySequenceDocument":
        return cls(
            name=poly_sequence.name,
            offset=offset,
            polys=[[format_rational(c) for c in poly.coeffs] for poly in poly_sequence.polys],
        )

    def to_poly_sequence(self) -> PolySequence:
        """
        Raises:
            ValueError: If polynomial n has degree above n.
        """
        polys = tuple(Polynomial(tuple(parse_rational(c) for c in coeffs)) for coeffs in self.polys)
        return PolySequence(polys, self.name)
