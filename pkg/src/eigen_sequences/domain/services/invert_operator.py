"""Interpolated Invert operator I^{(x)}."""

from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.interfaces.sequence_operator_interface import SequenceOperatorInterface
from eigen_sequences.domain.services.sequence_operators import invert


class InvertOperator(SequenceOperatorInterface):
    """Maps the OGF A to A / (1 - x t A)."""

    def __init__(self, x: Fraction) -> None:
        self._x = x

    def apply(self, sequence: NumberSequence) -> NumberSequence:
        """Apply I^{(x)} to the prefix."""
        return invert(sequence, self._x)
