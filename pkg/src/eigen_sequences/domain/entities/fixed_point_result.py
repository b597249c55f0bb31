"""Outcome of a fixed-point check."""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class FixedPointResult:
    """
    Whether a sequence is fixed by a chain.

    Attributes:
        is_fixed: True iff the chain reproduces every checked term.
        first_mismatch: Smallest index where output and input differ.
    """

    is_fixed: bool
    first_mismatch: Optional[int] = None

    def __bool__(self) -> bool:
        return self.is_fixed
