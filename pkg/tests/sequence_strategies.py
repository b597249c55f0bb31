"""Hypothesis strategies for exact rationals and sequence prefixes."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

import path_setup

path_setup.add_src_path()

from eigen_sequences.domain.entities.number_sequence import NumberSequence


def rationals(bound: int = 5, max_denominator: int = 6) -> st.SearchStrategy[Fraction]:
    """Small rationals in [-bound, bound]."""
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_denominator)


def nonzero_rationals(bound: int = 5, max_denominator: int = 6) -> st.SearchStrategy[Fraction]:
    return rationals(bound, max_denominator).filter(lambda value: value != 0)


def sequences(length: int, bound: int = 5) -> st.SearchStrategy[NumberSequence]:
    """Prefixes of exactly `length` terms."""
    return st.lists(rationals(bound), min_size=length, max_size=length).map(
        lambda terms: NumberSequence(tuple(terms))
    )


def admissible_sequences(length: int, bound: int = 5) -> st.SearchStrategy[NumberSequence]:
    """Prefixes with a non-zero first term."""
    return st.tuples(nonzero_rationals(bound), st.lists(rationals(bound), min_size=length - 1, max_size=length - 1)).map(
        lambda parts: NumberSequence((parts[0],) + tuple(parts[1]))
    )


def normalized_sequences(length: int, bound: int = 5) -> st.SearchStrategy[NumberSequence]:
    """Prefixes with a_0 = 1."""
    return st.lists(rationals(bound), min_size=length - 1, max_size=length - 1).map(
        lambda tail: NumberSequence((Fraction(1),) + tuple(tail))
    )


def even_sequences(length: int, bound: int = 5) -> st.SearchStrategy[NumberSequence]:
    """Prefixes whose odd-index terms are zero and whose first term is 1."""
    return normalized_sequences(length, bound).map(
        lambda sequence: NumberSequence(
            tuple(term if index % 2 == 0 else Fraction(0) for index, term in enumerate(sequence.terms))
        )
    )
