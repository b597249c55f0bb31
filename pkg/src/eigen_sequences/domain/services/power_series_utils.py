"""Exact arithmetic on formal power series truncated modulo t^N."""

import logging
import math
from fractions import Fraction
from typing import Sequence

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.series_kind import SeriesKind
from eigen_sequences.domain.entities.truncated_series import TruncatedSeries
from eigen_sequences.domain.exceptions.series_error import SeriesError

logger = logging.getLogger(__name__)


def zero_series(order: int, kind: SeriesKind = SeriesKind.OGF) -> TruncatedSeries:
    """Return 0 mod t^order."""
    _require_order(order)
    return TruncatedSeries((Fraction(0),) * order, kind)


def one_series(order: int, kind: SeriesKind = SeriesKind.OGF) -> TruncatedSeries:
    """Return 1 mod t^order."""
    _require_order(order)
    return TruncatedSeries((Fraction(1),) + (Fraction(0),) * (order - 1), kind)


def identity_series(order: int, kind: SeriesKind = SeriesKind.OGF) -> TruncatedSeries:
    """Return t mod t^order."""
    _require_order(order)
    return ps_multiply_by_power(one_series(order, kind), 1)


def ps_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum."""
    _require_compatible(f, g)
    return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)), f.kind)


def ps_sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise difference."""
    _require_compatible(f, g)
    return TruncatedSeries(tuple(a - b for a, b in zip(f.coeffs, g.coeffs)), f.kind)


def ps_scale(f: TruncatedSeries, factor: Fraction | int) -> TruncatedSeries:
    """Multiply every coefficient by a scalar."""
    return TruncatedSeries(tuple(factor * c for c in f.coeffs), f.kind)


def ps_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product truncated at N.

    For EGF-kind inputs this is the binomial convolution of the underlying
    sequences, because coefficients already carry the 1/n! factors.
    """
    _require_compatible(f, g)
    return TruncatedSeries(_cauchy(f.coeffs, g.coeffs, f.order), f.kind)


def ps_div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    Return h with h * g = f mod t^N.

    Raises:
        SeriesError: If g has a zero constant term or the inputs are incompatible.
    """
    _require_compatible(f, g)
    g0 = g.coeffs[0]
    if g0 == 0:
        raise SeriesError("Division by a series with zero constant term")
    quotient: list[Fraction] = []
    for n in range(f.order):
        partial = sum((quotient[i] * g.coeffs[n - i] for i in range(n)), Fraction(0))
        quotient.append((f.coeffs[n] - partial) / g0)
    return TruncatedSeries(tuple(quotient), f.kind)


def ps_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    Return f(g(t)) mod t^N by Horner's scheme.

    Raises:
        SeriesError: If g(0) != 0 or the orders differ.
    """
    if f.order != g.order:
        raise SeriesError(f"Order mismatch: {f.order} != {g.order}")
    if g.coeffs[0] != 0:
        raise SeriesError("Composition f(g) requires g(0) = 0")
    order = f.order
    result = [f.coeffs[-1]] + [Fraction(0)] * (order - 1)
    for coefficient in reversed(f.coeffs[:-1]):
        result = list(_cauchy(result, g.coeffs, order))
        result[0] += coefficient
    return TruncatedSeries(tuple(result), f.kind)


def ps_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the top coefficient is unknown and set to zero."""
    derived = [n * f.coeffs[n] for n in range(1, f.order)] + [Fraction(0)]
    return TruncatedSeries(tuple(derived), f.kind)


def ps_dilate(f: TruncatedSeries, factor: Fraction | int) -> TruncatedSeries:
    """Return f(factor * t)."""
    return TruncatedSeries(tuple(c * Fraction(factor) ** n for n, c in enumerate(f.coeffs)), f.kind)


def ps_multiply_by_power(f: TruncatedSeries, power: int) -> TruncatedSeries:
    """Return t^power * f mod t^N."""
    if power < 0:
        raise SeriesError(f"Power must be >= 0, got {power}")
    shifted = ((Fraction(0),) * power + f.coeffs)[: f.order]
    return TruncatedSeries(shifted, f.kind)


def ps_resize(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Truncate to, or zero-pad up to, the given order."""
    _require_order(order)
    coeffs = f.coeffs[:order] + (Fraction(0),) * max(0, order - f.order)
    return TruncatedSeries(coeffs, f.kind)


def ps_reversion(f: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse by Newton iteration with precision doubling.

    Starting from g = t / f_1, each step g <- g - (f(g) - t) / f'(g) doubles
    the number of correct coefficients.

    Raises:
        SeriesError: If f(0) != 0 or f'(0) == 0.
    """
    order = f.order
    if order < 2:
        raise SeriesError("Reversion needs truncation order >= 2")
    if f.coeffs[0] != 0:
        raise SeriesError("Reversion requires f(0) = 0")
    if f.coeffs[1] == 0:
        raise SeriesError("Reversion requires a non-zero linear coefficient")

    inverse = ps_scale(identity_series(order, f.kind), 1 / f.coeffs[1])
    precision = 2
    while precision < order:
        precision = min(2 * precision, order)
        inverse = _newton_step(ps_resize(f, precision), ps_resize(inverse, precision))
        logger.debug("Reversion refined to precision %s of %s", precision, order)
    return ps_resize(inverse, order)


def lagrange_inversion_coefficients(f: TruncatedSeries) -> TruncatedSeries:
    """
    Reversion by the Lagrange formula [u^n] g = (1/n) [t^(n-1)] (t / f(t))^n.

    Quartic in N; kept as an independent check of `ps_reversion`.
    """
    order = f.order
    if order < 2 or f.coeffs[0] != 0 or f.coeffs[1] == 0:
        raise SeriesError("Lagrange inversion requires f(0) = 0 and f'(0) != 0")
    reduced = TruncatedSeries(f.coeffs[1:] + (Fraction(0),), f.kind)
    quotient = ps_div(one_series(order, f.kind), reduced)
    coeffs = [Fraction(0)]
    power = one_series(order, f.kind)
    for n in range(1, order):
        power = ps_mul(power, quotient)
        coeffs.append(power.coeffs[n - 1] / n)
    return TruncatedSeries(tuple(coeffs), f.kind)


def exp_series(y: Fraction | int, order: int) -> TruncatedSeries:
    """EGF-kind e^{yt}: coefficients y^n / n!."""
    _require_order(order)
    y = Fraction(y)
    return TruncatedSeries(
        tuple(y**n / math.factorial(n) for n in range(order)),
        SeriesKind.EGF,
    )


def sequence_to_egf(sequence: NumberSequence) -> TruncatedSeries:
    """Exponential generating function: coefficients a_n / n!."""
    return TruncatedSeries(
        tuple(term / math.factorial(n) for n, term in enumerate(sequence.terms)),
        SeriesKind.EGF,
    )


def egf_to_sequence(series: TruncatedSeries) -> NumberSequence:
    """Read the sequence back from an EGF-kind series."""
    if series.kind is not SeriesKind.EGF:
        raise SeriesError(f"Expected an EGF series, got {series.kind.name}")
    return NumberSequence(tuple(c * math.factorial(n) for n, c in enumerate(series.coeffs)))


def sequence_to_ogf(sequence: NumberSequence) -> TruncatedSeries:
    """Ordinary generating function: coefficients are the terms."""
    return TruncatedSeries(sequence.terms, SeriesKind.OGF)


def ogf_to_sequence(series: TruncatedSeries) -> NumberSequence:
    """Read the sequence back from an OGF-kind series."""
    if series.kind is not SeriesKind.OGF:
        raise SeriesError(f"Expected an OGF series, got {series.kind.name}")
    return NumberSequence(series.coeffs)


def _newton_step(f: TruncatedSeries, inverse: TruncatedSeries) -> TruncatedSeries:
    """One Newton correction of an approximate compositional inverse."""
    residual = ps_sub(ps_compose(f, inverse), identity_series(f.order, f.kind))
    slope = ps_compose(ps_derivative(f), inverse)
    return ps_sub(inverse, ps_div(residual, slope))


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> tuple[Fraction, ...]:
    """Truncated convolution of two coefficient vectors."""
    product = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j in range(min(len(b), order - i)):
            product[i + j] += ai * b[j]
    return tuple(product)


def _require_order(order: int) -> None:
    if order < 1:
        raise SeriesError(f"Truncation order must be >= 1, got {order}")


def _require_compatible(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.kind is not g.kind:
        raise SeriesError(f"Kind mismatch: {f.kind.name} != {g.kind.name}")
    if f.order != g.order:
        raise SeriesError(f"Order mismatch: {f.order} != {g.order}")
