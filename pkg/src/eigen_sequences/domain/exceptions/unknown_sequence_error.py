"""Error for catalog lookups."""

from typing import Sequence

from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError


class UnknownSequenceError(EigenSequencesError):
    """Raised when a catalog name does not exist."""

    def __init__(self, name: str, available: Sequence[str]) -> None:
        self.name = name
        self.available = tuple(available)
        super().__init__(f"Unknown sequence '{name}'. Available: {', '.join(self.available)}")
