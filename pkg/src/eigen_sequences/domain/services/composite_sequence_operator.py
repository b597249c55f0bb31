"""Composite operator applying its parts right-to-left."""

import logging
from typing import Sequence

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.interfaces.sequence_operator_interface import SequenceOperatorInterface

logger = logging.getLogger(__name__)


class CompositeSequenceOperator(SequenceOperatorInterface):
    """Composition o_1 ∘ o_2 ∘ ... ∘ o_k; o_k acts first."""

    def __init__(self, operators: Sequence[SequenceOperatorInterface]) -> None:
        """
        Initialize the composite operator.

        Args:
            operators: Operators written left-to-right as in the composition.
        """
        if not operators:
            raise ValueError("At least one operator must be provided")

        self._operators = tuple(operators)

    def apply(self, sequence: NumberSequence) -> NumberSequence:
        """
        Apply every operator in turn, starting from the rightmost.

        The truncation order is kept throughout, since each operator is
        prefix-deterministic.
        """
        current = sequence
        for operator in reversed(self._operators):
            logger.debug("Applying %s to %s terms", operator.__class__.__name__, len(current))
            current = operator.apply(current)
        return current
