"""First counterexample found by an identity sweep."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IdentityFailure:
    """Index with differing sides."""

    n: int
    lhs: Fraction
    rhs: Fraction
