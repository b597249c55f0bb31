"""Interpolated Invert, Generalized Binomial and Revert on sequence prefixes."""

import logging
from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.series_kind import SeriesKind
from eigen_sequences.domain.entities.truncated_series import TruncatedSeries
from eigen_sequences.domain.exceptions.operator_domain_error import OperatorDomainError
from eigen_sequences.domain.services.combinatorics_utils import pascal_row, powers
from eigen_sequences.domain.services.power_series_utils import (
    one_series,
    ps_compose,
    ps_div,
    ps_multiply_by_power,
    ps_reversion,
    ps_scale,
    ps_sub,
    sequence_to_ogf,
)

logger = logging.getLogger(__name__)


def gen_binomial(sequence: NumberSequence, h: Fraction | int, y: Fraction | int) -> NumberSequence:
    """
    Generalized Binomial L^{(h,y)}: b_n = sum_i C(n,i) h^i y^(n-i) a_i.

    With 0^0 = 1 the sum already yields the degenerate cases
    L^{(0,y)}(a) = (y^n a_0), L^{(h,0)}(a) = (h^n a_n), L^{(0,0)}(a) = (a_0, 0, ...).
    """
    h, y = Fraction(h), Fraction(y)
    count = len(sequence)
    h_powers = powers(h, count)
    y_powers = powers(y, count)
    terms = []
    for n in range(count):
        row = pascal_row(n)
        terms.append(
            sum(
                (row[i] * h_powers[i] * y_powers[n - i] * sequence.terms[i] for i in range(n + 1)),
                Fraction(0),
            )
        )
    return NumberSequence(tuple(terms))


def gen_binomial_ogf(sequence: NumberSequence, h: Fraction | int, y: Fraction | int) -> NumberSequence:
    """
    L^{(h,y)} through its ordinary generating function (1/(ht)) A(ht / (1 - yt)).

    Here A(t) = sum a_n t^(n+1). Independent of `gen_binomial`.

    Raises:
        OperatorDomainError: If h == 0.
    """
    h, y = Fraction(h), Fraction(y)
    if h == 0:
        raise OperatorDomainError("The OGF substitution needs h != 0; use gen_binomial")
    order = len(sequence) + 1
    shifted = TruncatedSeries((Fraction(0),) + sequence.terms, SeriesKind.OGF)
    substitution = TruncatedSeries(
        (Fraction(0),) + tuple(h * y**k for k in range(order - 1)),
        SeriesKind.OGF,
    )
    composed = ps_compose(shifted, substitution)
    return NumberSequence(tuple(c / h for c in composed.coeffs[1:]))


def invert(sequence: NumberSequence, x: Fraction | int) -> NumberSequence:
    """Interpolated Invert I^{(x)}: OGF A / (1 - x t A)."""
    if not sequence.terms:
        return NumberSequence(())
    ogf = sequence_to_ogf(sequence)
    denominator = ps_sub(one_series(ogf.order), ps_scale(ps_multiply_by_power(ogf, 1), Fraction(x)))
    return NumberSequence(ps_div(ogf, denominator).coeffs)


def revert(sequence: NumberSequence) -> NumberSequence:
    """
    Revert eta: b with sum b_n u^(n+1) the compositional inverse of sum a_n t^(n+1).

    Raises:
        OperatorDomainError: If a_0 == 0; b_0 = 1 / a_0 otherwise.
    """
    if len(sequence) == 0 or sequence.terms[0] == 0:
        raise OperatorDomainError("Revert requires a_0 != 0")
    shifted = TruncatedSeries((Fraction(0),) + sequence.terms, SeriesKind.OGF)
    inverse = ps_reversion(shifted)
    return NumberSequence(inverse.coeffs[1:])


def compose_binomial_parameters(
    outer: tuple[Fraction, Fraction],
    inner: tuple[Fraction, Fraction],
) -> tuple[Fraction, Fraction]:
    """Parameters of L^{outer} ∘ L^{inner}: (h1 h2, y1 + h1 y2)."""
    h1, y1 = outer
    h2, y2 = inner
    return Fraction(h1) * h2, Fraction(y1) + Fraction(h1) * y2


def inverse_binomial_parameters(h: Fraction | int, y: Fraction | int) -> tuple[Fraction, Fraction]:
    """
    Parameters of the inverse of L^{(h,y)}: (1/h, -y/h).

    Raises:
        OperatorDomainError: If h == 0 (the operator forgets a_1, a_2, ...).
    """
    h, y = Fraction(h), Fraction(y)
    if h == 0:
        raise OperatorDomainError("L^{(0,y)} is not invertible")
    return 1 / h, -y / h
