"""Error for parameter choices that admit no fixed sequence."""

from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError


class NoFixedSequenceError(EigenSequencesError):
    """Raised when the requested operator has no fixed sequence of the asked form."""

    pass
