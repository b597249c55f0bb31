"""Error for malformed operator chains and rationals."""

from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError


class ChainSyntaxError(EigenSequencesError):
    """Raised when an operator chain or a rational literal cannot be parsed."""
