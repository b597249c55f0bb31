"""Aeration and the Bessel / Legendre eigen-sequence families."""

import math
from fractions import Fraction

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.series_kind import SeriesKind
from eigen_sequences.domain.entities.truncated_series import TruncatedSeries
from eigen_sequences.domain.services.power_series_utils import (
    egf_to_sequence,
    exp_series,
    ps_mul,
)


def aerate(sequence: NumberSequence) -> NumberSequence:
    """Interleave with zeros: (a_0, 0, a_1, 0, ...), twice as many terms."""
    terms: list[Fraction] = []
    for term in sequence.terms:
        terms.extend((term, Fraction(0)))
    return NumberSequence(tuple(terms))


def bessel_even_egf(p: Fraction | int, qsq: Fraction | int, nu: int, count: int) -> NumberSequence:
    """
    Sequence with EGF e^{pt} * sum_m (q^2/4)^m t^(2m) / (m! (m+nu)!).

    The sum is I_nu(qt) t^(-nu) up to the constant (q/2)^nu, so only q^2 enters
    and every term is rational. The EGF is e^{pt} times an even function,
    hence the sequence is fixed by L^{(-1,2p)}.
    """
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    if count == 0:
        return NumberSequence(())
    quarter = Fraction(qsq) / 4
    even_coeffs = [Fraction(0)] * count
    for m in range(0, (count + 1) // 2):
        even_coeffs[2 * m] = quarter**m / (math.factorial(m) * math.factorial(m + nu))
    even_part = TruncatedSeries(tuple(even_coeffs), SeriesKind.EGF)
    return egf_to_sequence(ps_mul(exp_series(p, count), even_part))


def legendre_values(msq: Fraction | int, count: int) -> list[Fraction]:
    """
    P_n(sqrt(m)) * sqrt(m)^n for n < count.

    With Q_n = P_n(x) x^n and x^2 = m, the Legendre recurrence
    (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1} becomes
    (n+1) Q_{n+1} = m ((2n+1) Q_n - n Q_{n-1}), which never leaves the rationals.
    """
    msq = Fraction(msq)
    values = [Fraction(1), msq][:count]
    for n in range(1, count - 1):
        values.append(msq * ((2 * n + 1) * values[n] - n * values[n - 1]) / (n + 1))
    return values


def legendre_eval(n: int, msq: Fraction | int) -> Fraction:
    """Exact value of P_n(sqrt(m)) * sqrt(m)^n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return legendre_values(msq, n + 1)[n]


def legendre_family(k: Fraction | int, msq: Fraction | int, count: int) -> NumberSequence:
    """
    Terms P_n(sqrt(m)) (k sqrt(m))^n.

    EGF e^{kmt} I_0(k sqrt(m(m-1)) t): fixed by L^{(-1,2km)}.
    """
    k = Fraction(k)
    return NumberSequence(tuple(value * k**n for n, value in enumerate(legendre_values(msq, count))))
