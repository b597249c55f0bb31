"""Worpitzky transform, its inverse at x = 0 (worpification) and the Appell shift."""

import logging
from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.poly_sequence import PolySequence
from eigen_sequences.domain.services.combinatorics_utils import pascal_row, powers
from eigen_sequences.domain.services.polynomial_utils import (
    from_dup,
    poly_add,
    poly_eval,
    poly_scale,
    poly_shift,
    shifted_power,
    to_dup,
)

logger = logging.getLogger(__name__)


def worpitzky_matrix_entry(n: int, k: int) -> int:
    """
    T(n, k) = sum_{m=0}^{k} (-1)^m C(k, m) (m+1)^n.

    W(a)(0)_n = sum_k T(n, k) a_k. T(n, k) = 0 for k > n and T(n, n) = (-1)^n n!.
    """
    row = pascal_row(k)
    return sum((-1) ** m * row[m] * (m + 1) ** n for m in range(k + 1))


class WorpitzkyTransformService:
    """
    Maps a sequence s to the polynomial sequence

        s_n(x) = sum_{k=0}^{n} sum_{m=0}^{k} (-1)^m C(k, m) s_k (x + m + 1)^n

    and solves the inverse problem W(a)(0) = b.
    """

    def worpitzky(self, sequence: NumberSequence) -> PolySequence:
        """
        Expand the double sum exactly.

        The sum is regrouped by m: the weight of (x + m + 1)^n is
        (-1)^m sum_{k=m}^{n} C(k, m) s_k.
        """
        polys = []
        for n in range(len(sequence)):
            accumulated: list = []
            for m in range(n + 1):
                weight = sum(
                    (pascal_row(k)[m] * sequence[k] for k in range(m, n + 1)), Fraction(0)
                )
                if weight == 0:
                    continue
                term = poly_scale(shifted_power(n, m + 1), (-1) ** m * weight)
                accumulated = poly_add(accumulated, term)
            polys.append(from_dup(accumulated))
        logger.debug("Worpitzky transform of %s terms", len(polys))
        return PolySequence(tuple(polys), name=sequence.name)

    def worpify(self, values: NumberSequence) -> NumberSequence:
        """
        The unique a with W(a)(0) = values, by forward substitution.

        The system is lower triangular with diagonal (-1)^n n!, so it is
        solvable over the rationals for every right-hand side.
        """
        solution: list[Fraction] = []
        for n in range(len(values)):
            partial = sum(
                (worpitzky_matrix_entry(n, k) * solution[k] for k in range(n)), Fraction(0)
            )
            solution.append((values[n] - partial) / worpitzky_matrix_entry(n, n))
        logger.debug("Worpified %s terms", len(solution))
        return NumberSequence(tuple(solution), name=values.name)

    def poly_eval_sequence(self, poly_sequence: PolySequence, point: Fraction | int) -> NumberSequence:
        """Terms s_n(point)."""
        return NumberSequence(
            tuple(poly_eval(poly, point) for poly in poly_sequence.polys), name=poly_sequence.name
        )

    def appell_shift(self, poly_sequence: PolySequence, y: Fraction | int) -> PolySequence:
        """Substitute x -> x + y in every polynomial."""
        return PolySequence(
            tuple(poly_shift(poly, y) for poly in poly_sequence.polys), name=poly_sequence.name
        )

    def binomial_transform_polys(
        self, poly_sequence: PolySequence, h: Fraction | int, y: Fraction | int
    ) -> PolySequence:
        """
        L^{(h,y)} acting termwise: q_n(x) = sum_k C(n, k) h^k y^(n-k) p_k(x).

        For h = 1 on a Worpitzky image this equals appell_shift(ps, y).
        """
        count = len(poly_sequence)
        h_powers = powers(Fraction(h), count)
        y_powers = powers(Fraction(y), count)
        dense = [to_dup(poly) for poly in poly_sequence.polys]
        polys = []
        for n in range(count):
            row = pascal_row(n)
            accumulated: list = []
            for k in range(n + 1):
                factor = row[k] * h_powers[k] * y_powers[n - k]
                if factor != 0:
                    accumulated = poly_add(accumulated, poly_scale(dense[k], factor))
            polys.append(from_dup(accumulated))
        return PolySequence(tuple(polys), name=poly_sequence.name)
