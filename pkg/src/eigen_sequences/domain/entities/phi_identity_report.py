"""Outcome of the symbolic checks on a phi / F family."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PhiIdentityReport:
    """
    Each flag records one exact rational-function identity.

    Attributes:
        alpha: Exponent selecting phi(u) = (u^alpha + u^(1-alpha)) / 2.
        functional_equation: phi(u) = u * phi(1/u).
        normalized: F(1, 1) = 1.
        symmetric: F(u, v) = F(v, u).
        homogeneous: F(cu, cv) = c * F(u, v).
        matches_phi: F(1, u) = phi(u).
    """

    alpha: Fraction
    functional_equation: bool
    normalized: bool
    symmetric: bool
    homogeneous: bool
    matches_phi: bool

    @property
    def holds(self) -> bool:
        return all(
            (self.functional_equation, self.normalized, self.symmetric, self.homogeneous, self.matches_phi)
        )
