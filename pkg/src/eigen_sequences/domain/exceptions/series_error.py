"""Errors of truncated power series arithmetic."""

from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError


class SeriesError(EigenSequencesError):
    """Raised on kind/length mismatch or a violated series precondition."""

    pass
