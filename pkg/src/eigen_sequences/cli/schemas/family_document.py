"""Wire schema for a constructed fixed sequence and the chain that fixes it."""

from pydantic import BaseModel, ConfigDict, Field

from eigen_sequences.cli.schemas.sequence_document import SequenceDocument


class FamilyDocument(BaseModel):
    """Output of the `family` subcommand."""

    model_config = ConfigDict(strict=True, extra='forbid')

    kind: str = Field(..., description="Family kind.")
    chain: str = Field(..., description="Fixing chain in command-line syntax.")
    sequence: SequenceDocument = Field(..., description="First terms of the fixed sequence.")
