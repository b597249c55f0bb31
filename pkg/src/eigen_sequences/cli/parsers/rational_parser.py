"""Exact rational literals on the command line and in JSON documents."""

import re
from fractions import Fraction

from eigen_sequences.domain.exceptions.chain_syntax_error import ChainSyntaxError

RATIONAL_PATTERN = re.compile(r"-?\d+(/\d+)?")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p" or "p/q" into a Fraction.

    Floats, exponents and whitespace are rejected so that every value is exact.

    Raises:
        ChainSyntaxError: If the literal is malformed or the denominator is zero.
    """
    if not isinstance(text, str) or not RATIONAL_PATTERN.fullmatch(text):
        raise ChainSyntaxError(f"Malformed rational: {text!r}")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ChainSyntaxError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction | int) -> str:
    """Render as "p" for integers and "p/q" otherwise."""
    return str(Fraction(value))
