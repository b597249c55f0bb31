"""Exception hierarchy rooted at EigenSequencesError."""

from eigen_sequences.domain.exceptions.chain_syntax_error import ChainSyntaxError
from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError
from eigen_sequences.domain.exceptions.no_fixed_sequence_error import NoFixedSequenceError
from eigen_sequences.domain.exceptions.operator_domain_error import OperatorDomainError
from eigen_sequences.domain.exceptions.series_error import SeriesError
from eigen_sequences.domain.exceptions.unknown_sequence_error import UnknownSequenceError

__all__ = [
    "ChainSyntaxError",
    "EigenSequencesError",
    "NoFixedSequenceError",
    "OperatorDomainError",
    "SeriesError",
    "UnknownSequenceError",
]
