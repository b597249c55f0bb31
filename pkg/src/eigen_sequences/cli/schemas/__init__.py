"""Schema package for JSON documents read and written by the CLI."""

from eigen_sequences.cli.schemas.family_document import FamilyDocument
from eigen_sequences.cli.schemas.identity_report_document import (
    IdentityFailureSchema,
    IdentityReportDocument,
)
from eigen_sequences.cli.schemas.poly_sequence_document import PolySequenceDocument
from eigen_sequences.cli.schemas.sequence_document import SequenceDocument

__all__ = [
    "FamilyDocument",
    "IdentityFailureSchema",
    "IdentityReportDocument",
    "PolySequenceDocument",
    "SequenceDocument",
]
