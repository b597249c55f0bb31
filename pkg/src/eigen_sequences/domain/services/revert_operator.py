"""Revert operator eta."""

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.interfaces.sequence_operator_interface import SequenceOperatorInterface
from eigen_sequences.domain.services.sequence_operators import revert


class RevertOperator(SequenceOperatorInterface):
    """Maps a to the coefficients of the inverse series of sum a_n t^(n+1)."""

    def apply(self, sequence: NumberSequence) -> NumberSequence:
        """Apply eta to the prefix."""
        return revert(sequence)
