"""Structured outcome of verifying an identity on a finite range."""

from dataclasses import dataclass
from typing import Optional

from eigen_sequences.domain.entities.identity_failure import IdentityFailure


@dataclass(frozen=True)
class IdentityReport:
    """
    Verification report.

    Attributes:
        name: Identity name.
        max_n_checked: Largest index that was compared.
        holds: True iff no counterexample was found.
        first_failure: The first counterexample, if any.
    """

    name: str
    max_n_checked: int
    holds: bool
    first_failure: Optional[IdentityFailure] = None

    def __post_init__(self) -> None:
        """Keep `holds` and `first_failure` consistent."""
        if self.holds == (self.first_failure is not None):
            raise ValueError("holds must be True exactly when first_failure is absent")
