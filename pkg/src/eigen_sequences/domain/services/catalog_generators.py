"""Exact generators for the named sequences of the catalog."""

import math
from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.series_kind import SeriesKind
from eigen_sequences.domain.entities.truncated_series import TruncatedSeries
from eigen_sequences.domain.services.power_series_utils import egf_to_sequence, exp_series, ps_div
from eigen_sequences.domain.services.sequence_operators import gen_binomial
from eigen_sequences.domain.services.special_sequences_utils import aerate


def catalan(count: int) -> NumberSequence:
    """C_n = C(2n, n) / (n+1)."""
    terms = [1]
    for n in range(count - 1):
        terms.append(terms[-1] * 2 * (2 * n + 1) // (n + 2))
    return NumberSequence.of(terms[:count])


def motzkin(count: int) -> NumberSequence:
    """(n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}."""
    terms = [1, 1]
    for n in range(2, count):
        terms.append(((2 * n + 1) * terms[n - 1] + 3 * (n - 1) * terms[n - 2]) // (n + 2))
    return NumberSequence.of(terms[:count])


def fibonacci(count: int) -> NumberSequence:
    """F_0 = 0, F_1 = 1."""
    return NumberSequence.of(_linear_recurrence(0, 1, count))


def lucas(count: int) -> NumberSequence:
    """L_0 = 2, L_1 = 1."""
    return NumberSequence.of(_linear_recurrence(2, 1, count))


def lucas_half(count: int) -> NumberSequence:
    """L_n / 2."""
    return NumberSequence(tuple(term / 2 for term in lucas(count).terms))


def central_binomial(count: int) -> NumberSequence:
    """C(2n, n)."""
    return NumberSequence.of([math.comb(2 * n, n) for n in range(count)])


def central_delannoy(count: int) -> NumberSequence:
    """D_n = sum_k C(n,k) C(n+k,k)."""
    return NumberSequence.of(
        [sum(math.comb(n, k) * math.comb(n + k, k) for k in range(n + 1)) for n in range(count)]
    )


def catalan_aerated(count: int) -> NumberSequence:
    """(1, 0, 1, 0, 2, 0, 5, ...)."""
    return aerate(catalan((count + 1) // 2)).truncate(count)


def fibonacci_aerated(count: int) -> NumberSequence:
    """(0, 0, 1, 0, 1, 0, 2, ...)."""
    return aerate(fibonacci((count + 1) // 2)).truncate(count)


def a101890(count: int) -> NumberSequence:
    """Binomial transform L^{(1,1)} of the aerated Fibonacci numbers."""
    return gen_binomial(fibonacci_aerated(count), 1, 1)


def a155585(count: int) -> NumberSequence:
    """EGF e^t sech t, with cosh taken as the even part of e^t."""
    if count == 0:
        return NumberSequence(())
    exponential = exp_series(1, count)
    cosh = TruncatedSeries(
        tuple(c if n % 2 == 0 else Fraction(0) for n, c in enumerate(exponential.coeffs)),
        SeriesKind.EGF,
    )
    return egf_to_sequence(ps_div(exponential, cosh))


def ones(count: int) -> NumberSequence:
    """(1, 1, 1, ...)."""
    return NumberSequence.of([1] * count)


def zeros_then_one(count: int) -> NumberSequence:
    """(1, 0, 0, ...): a_0 = 1 followed by zeros."""
    return NumberSequence.of(([1] + [0] * count)[:count])


def _linear_recurrence(first: int, second: int, count: int) -> list[int]:
    terms = [first, second]
    while len(terms) < count:
        terms.append(terms[-1] + terms[-2])
    return terms[:count]
