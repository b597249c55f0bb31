"""Domain services implementing the transforms, constructions and checks."""

from eigen_sequences.domain.services.eigen_sequence_service import EigenSequenceService
from eigen_sequences.domain.services.identity_verification_service import (
    IdentityVerificationService,
)
from eigen_sequences.domain.services.operator_chain_service import OperatorChainService
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog
from eigen_sequences.domain.services.worpitzky_transform_service import WorpitzkyTransformService

__all__ = [
    "EigenSequenceService",
    "IdentityVerificationService",
    "OperatorChainService",
    "SequenceCatalog",
    "WorpitzkyTransformService",
]
