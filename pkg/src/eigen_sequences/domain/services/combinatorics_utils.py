"""Binomial and power helpers shared by the transforms."""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def pascal_row(n: int) -> tuple[int, ...]:
    """Return (C(n,0), ..., C(n,n)), built from the previous row."""
    if n < 0:
        raise ValueError(f"Row index must be >= 0, got {n}")
    if n == 0:
        return (1,)
    previous = pascal_row(n - 1)
    return (1,) + tuple(previous[i - 1] + previous[i] for i in range(1, n)) + (1,)


def powers(base: Fraction, count: int) -> list[Fraction]:
    """Return base^0 .. base^(count-1), with 0^0 = 1."""
    result = [Fraction(1)]
    for _ in range(1, count):
        result.append(result[-1] * base)
    return result[:count]
