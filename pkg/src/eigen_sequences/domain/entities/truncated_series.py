"""Formal power series truncated modulo t^N."""

from dataclasses import dataclass
from fractions import Fraction

from eigen_sequences.domain.entities.series_kind import SeriesKind


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Coefficient vector of a formal power series mod t^N.

    Attributes:
        coeffs: Coefficients of t^0 .. t^{N-1}.
        kind: OGF stores sequence terms verbatim, EGF stores a_n / n!.
    """

    coeffs: tuple[Fraction, ...]
    kind: SeriesKind = SeriesKind.OGF

    def __post_init__(self) -> None:
        """Normalize coefficients to Fractions and enforce N >= 1."""
        if not self.coeffs:
            raise ValueError("TruncatedSeries needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        """Truncation order N."""
        return len(self.coeffs)

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]
