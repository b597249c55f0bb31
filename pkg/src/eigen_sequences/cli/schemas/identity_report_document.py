"""Wire schema for identity verification reports."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from eigen_sequences.cli.parsers.rational_parser import format_rational
from eigen_sequences.domain.entities.identity_report import IdentityReport


class IdentityFailureSchema(BaseModel):
    """First index where the two sides differ."""

    model_config = ConfigDict(strict=True, extra='forbid')

    n: int = Field(..., description="Failing index.")
    lhs: str = Field(..., description="Left-hand side value.")
    rhs: str = Field(..., description="Right-hand side value.")


class IdentityReportDocument(BaseModel):
    """
    Result of an identity sweep.

    Attributes:
        name: Identity name.
        max_n_checked: Last index compared.
        holds: Whether the identity held on the whole range.
        first_failure: Counterexample when it did not.
    """

    model_config = ConfigDict(strict=True, extra='forbid')

    name: str = Field(..., description="Identity name.")
    max_n_checked: int = Field(..., description="Last index compared.")
    holds: bool = Field(..., description="True iff no counterexample was found.")
    first_failure: Optional[IdentityFailureSchema] = Field(None, description="First counterexample.")

    @classmethod
    def from_report(cls, report: IdentityReport) -> "IdentityReportDocument":
        failure = report.first_failure
        return cls(
            name=report.name,
            max_n_checked=report.max_n_checked,
            holds=report.holds,
            first_failure=None if failure is None else IdentityFailureSchema(
                n=failure.n, lhs=format_rational(failure.lhs), rhs=format_rational(failure.rhs)
            ),
        )
