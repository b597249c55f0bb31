"""Generalized Binomial operator L^{(h,y)}."""

from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.interfaces.sequence_operator_interface import SequenceOperatorInterface
from eigen_sequences.domain.services.sequence_operators import gen_binomial


class GeneralizedBinomialOperator(SequenceOperatorInterface):
    """Applies b_n = sum_i C(n,i) h^i y^(n-i) a_i."""

    def __init__(self, h: Fraction, y: Fraction) -> None:
        self._h = h
        self._y = y

    def apply(self, sequence: NumberSequence) -> NumberSequence:
        """Apply L^{(h,y)} to the prefix."""
        return gen_binomial(sequence, self._h, self._y)
