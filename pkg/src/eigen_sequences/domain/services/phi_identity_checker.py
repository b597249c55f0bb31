"""Exact symbolic checks for phi(u) = (u^a + u^(1-a)) / 2 and its mean F(u, v)."""

import logging
from fractions import Fraction
from typing import Iterable

import sympy

from eigen_sequences.domain.entities.phi_identity_report import PhiIdentityReport

logger = logging.getLogger(__name__)


class PhiIdentityChecker:
    """
    Verifies the functional equation phi(u) = u phi(1/u) and the properties of
    F(u, v) = (u^a v^(1-a) + u^(1-a) v^a) / 2 as rational-function identities.

    With a = p/q every variable is written as a q-th power (u = v^q), so all
    exponents become integers; an identity holds iff the numerator of the
    difference, after clearing denominators, is the zero polynomial.
    """

    def __init__(self) -> None:
        self._v, self._r, self._s, self._w = sympy.symbols("v r s w", positive=True)

    def check(self, alpha: Fraction | int) -> PhiIdentityReport:
        """Run every identity for one rational alpha."""
        alpha = Fraction(alpha)
        p, q = alpha.numerator, alpha.denominator
        v, r, s, w = self._v, self._r, self._s, self._w
        one = sympy.Integer(1)

        report = PhiIdentityReport(
            alpha=alpha,
            functional_equation=self._is_zero(
                self._phi(v, p, q) - v**q * self._phi(1 / v, p, q), [v]
            ),
            normalized=self._mean(one, one, p, q) == 1,
            symmetric=self._is_zero(self._mean(r, s, p, q) - self._mean(s, r, p, q), [r, s]),
            homogeneous=self._is_zero(
                self._mean(w * r, w * s, p, q) - w**q * self._mean(r, s, p, q), [r, s, w]
            ),
            matches_phi=self._is_zero(self._mean(one, v, p, q) - self._phi(v, p, q), [v]),
        )
        logger.debug("Phi identities for alpha=%s: %s", alpha, report)
        return report

    def _phi(self, root: sympy.Expr, p: int, q: int) -> sympy.Expr:
        """phi(root^q)."""
        return (root**p + root ** (q - p)) / 2

    def _mean(self, u_root: sympy.Expr, v_root: sympy.Expr, p: int, q: int) -> sympy.Expr:
        """F(u_root^q, v_root^q)."""
        return (u_root**p * v_root ** (q - p) + u_root ** (q - p) * v_root**p) / 2

    def _is_zero(self, expression: sympy.Expr, generators: Iterable[sympy.Symbol]) -> bool:
        """True iff the cleared numerator is the zero polynomial."""
        numerator, _ = sympy.fraction(sympy.together(expression))
        return sympy.Poly(sympy.expand(numerator), *generators).is_zero
