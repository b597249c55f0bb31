"""Dense univariate polynomial with rational coefficients."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class Polynomial:
    """
    Coefficients of x^0 .. x^d with trailing zeros trimmed.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        """Trim trailing zeros."""
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, values: Iterable[int | Fraction]) -> "Polynomial":
        """Build from low-to-high coefficients."""
        return cls(tuple(Fraction(value) for value in values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1
