"""
Dense polynomial arithmetic over QQ for Worpitzky polynomials.

Polynomial entities store coefficients low to high; sympy's dense
univariate representation (dup) stores them high to low.
"""

from fractions import Fraction

from sympy.polys.densearith import dup_add, dup_mul_ground
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_eval, dup_shift
from sympy.polys.domains import QQ

from eigen_sequences.domain.entities.polynomial import Polynomial


def to_dup(poly: Polynomial) -> list:
    """Polynomial entity -> dense QQ list, highest degree first."""
    return dup_strip([QQ(c.numerator, c.denominator) for c in reversed(poly.coeffs)])


def from_dup(coeffs: list) -> Polynomial:
    """Dense QQ list -> Polynomial entity."""
    return Polynomial(tuple(_to_fraction(c) for c in reversed(coeffs)))


def monomial(degree: int) -> list:
    """x^degree as a dense QQ list."""
    return [QQ.one] + [QQ.zero] * degree


def shifted_power(degree: int, offset: Fraction | int) -> list:
    """(x + offset)^degree, expanded."""
    return dup_shift(monomial(degree), _to_qq(offset), QQ)


def poly_add(first: list, second: list) -> list:
    return dup_add(first, second, QQ)


def poly_scale(poly: list, factor: Fraction | int) -> list:
    return dup_mul_ground(poly, _to_qq(factor), QQ)


def poly_shift(poly: Polynomial, offset: Fraction | int) -> Polynomial:
    """p(x) -> p(x + offset)."""
    return from_dup(dup_shift(to_dup(poly), _to_qq(offset), QQ))


def poly_eval(poly: Polynomial, point: Fraction | int) -> Fraction:
    """p(point), exactly."""
    return _to_fraction(dup_eval(to_dup(poly), _to_qq(point), QQ))


def _to_qq(value: Fraction | int):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))
