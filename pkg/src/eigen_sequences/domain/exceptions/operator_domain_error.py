"""Error for operators and constructors applied outside their domain."""

from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError


class OperatorDomainError(EigenSequencesError):
    """Raised when parameters or inputs violate an operator precondition."""

    pass
