"""Verifiers for the binomial-sum identities linking Catalan, Motzkin and related numbers."""

import logging
from fractions import Fraction
from typing import Callable

from eigen_sequences.domain.entities.identity_failure import IdentityFailure
from eigen_sequences.domain.entities.identity_report import IdentityReport
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.services.combinatorics_utils import pascal_row, powers
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog

logger = logging.getLogger(__name__)


class IdentityVerificationService:
    """
    Sweeps an identity over a range of indices and reports the first counterexample.

    Each check evaluates its sum directly from binomial coefficients; none of
    them goes through the operator implementations.
    """

    def __init__(self, catalog: SequenceCatalog) -> None:
        """
        Initialize service with the sequence catalog.

        Args:
            catalog: Source of the Catalan and Motzkin numbers.
        """
        self._catalog = catalog

    def check_ff(
        self,
        seed: NumberSequence,
        image: NumberSequence,
        h: Fraction | int,
        y: Fraction | int,
        max_n: int,
    ) -> IdentityReport:
        """
        Check a_n = sum_i sum_k C(n,i) C(i,2k) (-1)^i 2^(n-i) y^(n-2k) h^(2k) b_(2k) for 1 <= n < max_n.

        Args:
            seed: The even sequence b.
            image: The sequence a, expected to be gen_binomial(b, h, y).
            h: Binomial scale.
            y: Binomial shift.
            max_n: Exclusive upper bound on n; clipped to the available terms.
        """
        h, y = Fraction(h), Fraction(y)
        limit = min(max_n, len(image), len(seed))
        y_powers = powers(y, max(limit, 1))
        h_powers = powers(h, max(limit, 1))

        def lhs(n: int) -> Fraction:
            total = Fraction(0)
            outer = pascal_row(n)
            for i in range(n + 1):
                inner = pascal_row(i)
                sign_power = (-1) ** i * 2 ** (n - i)
                for k in range(i // 2 + 1):
                    total += (
                        outer[i] * inner[2 * k] * sign_power
                        * y_powers[n - 2 * k] * h_powers[2 * k] * seed[2 * k]
                    )
            return total

        return self._sweep("ff", range(1, limit), lhs, lambda n: image[n])

    def check_catalan_motzkin(self, max_n: int) -> IdentityReport:
        """Check sum_k C(i, 2k) C_k = M_i for 0 <= i < max_n."""
        catalan = self._catalog.get_sequence("catalan", max_n)
        motzkin = self._catalog.get_sequence("motzkin", max_n)

        def lhs(i: int) -> Fraction:
            row = pascal_row(i)
            return sum((row[2 * k] * catalan[k] for k in range(i // 2 + 1)), Fraction(0))

        return self._sweep("catalan-motzkin", range(max_n), lhs, lambda i: motzkin[i])

    def check_self_binomial(self, sequence: NumberSequence, max_n: int) -> IdentityReport:
        """Check sum_i C(n,i) (-1)^i 2^(n-i) a_i = a_n for 0 <= n < max_n."""
        limit = min(max_n, len(sequence))

        def lhs(n: int) -> Fraction:
            row = pascal_row(n)
            return sum(
                (row[i] * (-1) ** i * 2 ** (n - i) * sequence[i] for i in range(n + 1)),
                Fraction(0),
            )

        return self._sweep("self-binomial", range(limit), lhs, lambda n: sequence[n])

    def _sweep(
        self,
        name: str,
        indices: range,
        lhs: Callable[[int], Fraction],
        rhs: Callable[[int], Fraction],
    ) -> IdentityReport:
        """Compare both sides on every index, stopping at the first difference."""
        last = -1
        for n in indices:
            left, right = Fraction(lhs(n)), Fraction(rhs(n))
            if left != right:
                logger.info("Identity %s fails at n=%s: %s != %s", name, n, left, right)
                return IdentityReport(name, n, False, IdentityFailure(n, left, right))
            last = n
        logger.debug("Identity %s holds up to n=%s", name, last)
        return IdentityReport(name, last, True)
