"""Interface for operators acting on sequences."""

from abc import ABC, abstractmethod

from eigen_sequences.domain.entities.number_sequence import NumberSequence


class SequenceOperatorInterface(ABC):
    """Contract for prefix-deterministic operators on sequences."""

    @abstractmethod
    def apply(self, sequence: NumberSequence) -> NumberSequence:
        """
        Apply the operator to a sequence prefix.

        Args:
            sequence: Input terms a_0 .. a_{N-1}.

        Returns:
            Output terms b_0 .. b_{N-1}; b_n depends only on a_0 .. a_n.

        Raises:
            OperatorDomainError: If the input is outside the operator's domain.
        """
        raise NotImplementedError
