"""Sequence of polynomials produced by the Worpitzky transform."""

from dataclasses import dataclass
from typing import Optional

from eigen_sequences.domain.entities.polynomial import Polynomial


@dataclass(frozen=True)
class PolySequence:
    """
    Polynomials s_0(x) .. s_{N-1}(x), with deg s_n <= n.

    Attributes:
        polys: The polynomial terms.
        name: Optional label.
    """

    polys: tuple[Polynomial, ...]
    name: Optional[str] = None

    def __post_init__(self) -> None:
        """Enforce the degree bound."""
        for index, poly in enumerate(self.polys):
            if poly.degree > index:
                raise ValueError(f"Polynomial {index} has degree {poly.degree} > {index}")

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, index: int) -> Polynomial:
        return self.polys[index]
