"""Unit tests for the Invert, Generalized Binomial and Revert operators."""

import path_setup

path_setup.add_src_path()


import unittest
from fractions import Fraction

from hypothesis import given, settings

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.exceptions.operator_domain_error import OperatorDomainError
from eigen_sequences.domain.services.catalog_generators import catalan, catalan_aerated, motzkin
from eigen_sequences.domain.services.power_series_utils import (
    exp_series,
    ps_dilate,
    ps_mul,
    sequence_to_egf,
)
from eigen_sequences.domain.services.sequence_operators import (
    compose_binomial_parameters,
    gen_binomial,
    gen_binomial_ogf,
    inverse_binomial_parameters,
    invert,
    revert,
)
from sequence_strategies import admissible_sequences, nonzero_rationals, rationals, sequences


class TestGenBinomial(unittest.TestCase):
    """Tests L^{(h,y)} by its defining sum."""

    def test_aerated_catalan_gives_motzkin(self) -> None:
        """L^{(1,1)} of the aerated Catalan numbers is the Motzkin prefix."""
        result = gen_binomial(catalan_aerated(9), 1, 1)

        self.assertEqual(result.terms, (1, 1, 2, 4, 9, 21, 51, 127, 323))

    def test_identity_parameters(self) -> None:
        """h=1, y=0 leaves the sequence unchanged."""
        sequence = NumberSequence.of([3, Fraction(1, 2), -7, 11])

        self.assertEqual(gen_binomial(sequence, 1, 0).terms, sequence.terms)

    def test_alternating_ones_fixed_by_h3_y2(self) -> None:
        """y/(1-h) = -1 makes ((-1)^n) fixed."""
        sequence = NumberSequence.of([(-1) ** n for n in range(12)])

        self.assertEqual(gen_binomial(sequence, 3, 2).terms, sequence.terms)

    def test_degenerate_cases(self) -> None:
        """h = 0 or y = 0 follow the explicit extensions."""
        sequence = NumberSequence.of([2, 3, 5, 7, 11])

        self.assertEqual(gen_binomial(sequence, 0, 3).terms, tuple(2 * 3**n for n in range(5)))
        self.assertEqual(gen_binomial(sequence, 2, 0).terms, tuple(2**n * a for n, a in enumerate(sequence.terms)))
        self.assertEqual(gen_binomial(sequence, 0, 0).terms, (2, 0, 0, 0, 0))

    @settings(max_examples=50, deadline=None)
    @given(sequences(10), rationals(), rationals())
    def test_egf_law(self, sequence, h, y) -> None:
        """EGF of the image is e^{yt} A(ht)."""
        expected = ps_mul(exp_series(y, 10), ps_dilate(sequence_to_egf(sequence), h))

        self.assertEqual(sequence_to_egf(gen_binomial(sequence, h, y)), expected)

    @settings(max_examples=100, deadline=None)
    @given(sequences(16), nonzero_rationals(), rationals())
    def test_matches_ogf_path(self, sequence, h, y) -> None:
        """The OGF substitution agrees with the direct sum."""
        self.assertEqual(gen_binomial_ogf(sequence, h, y), gen_binomial(sequence, h, y))

    def test_ogf_path_on_aerated_catalan(self) -> None:
        """Both paths agree at N=16."""
        sequence = catalan_aerated(16)

        self.assertEqual(gen_binomial_ogf(sequence, 1, 1), gen_binomial(sequence, 1, 1))
        self.assertEqual(gen_binomial_ogf(sequence, 1, 0).terms, sequence.terms)

    def test_ogf_path_rejects_h_zero(self) -> None:
        """The substitution divides by h."""
        with self.assertRaises(OperatorDomainError):
            gen_binomial_ogf(NumberSequence.of([1, 2]), 0, 1)

    @settings(max_examples=50, deadline=None)
    @given(sequences(8), nonzero_rationals(), rationals(), rationals(), rationals())
    def test_parameter_composition(self, sequence, h1, y1, h2, y2) -> None:
        """L^{(h1,y1)} after L^{(h2,y2)} is L^{(h1 h2, y1 + h1 y2)}."""
        h, y = compose_binomial_parameters((h1, y1), (h2, y2))

        self.assertEqual(gen_binomial(gen_binomial(sequence, h2, y2), h1, y1), gen_binomial(sequence, h, y))

    @settings(max_examples=50, deadline=None)
    @given(sequences(8), nonzero_rationals(), rationals())
    def test_inverse_parameters(self, sequence, h, y) -> None:
        """L^{(1/h, -y/h)} undoes L^{(h,y)}."""
        inverse_h, inverse_y = inverse_binomial_parameters(h, y)

        self.assertEqual(gen_binomial(gen_binomial(sequence, h, y), inverse_h, inverse_y).terms, sequence.terms)

    def test_inverse_parameters_reject_h_zero(self) -> None:
        """L^{(0,y)} is not invertible."""
        with self.assertRaises(OperatorDomainError):
            inverse_binomial_parameters(0, 1)


class TestInvert(unittest.TestCase):
    """Tests I^{(x)}."""

    def test_ones_to_powers_of_two(self) -> None:
        """1/(1-t) maps to 1/(1-2t) for x = 1."""
        self.assertEqual(invert(NumberSequence.of([1] * 5), 1).terms, (1, 2, 4, 8, 16))

    def test_zero_parameter_is_identity(self) -> None:
        """x = 0 leaves the sequence unchanged."""
        sequence = NumberSequence.of([4, -1, Fraction(2, 3)])

        self.assertEqual(invert(sequence, 0).terms, sequence.terms)

    def test_empty_prefix_stays_empty(self) -> None:
        """A zero-term prefix maps to a zero-term prefix."""
        self.assertEqual(invert(NumberSequence(()), 3).terms, ())

    @settings(max_examples=50, deadline=None)
    @given(sequences(10), rationals())
    def test_negated_parameter_inverts(self, sequence, x) -> None:
        """I^{(-x)} undoes I^{(x)}."""
        self.assertEqual(invert(invert(sequence, x), -x).terms, sequence.terms)

    @settings(max_examples=50, deadline=None)
    @given(sequences(10), rationals(), rationals())
    def test_group_law(self, sequence, x1, x2) -> None:
        """I^{(x1)} after I^{(x2)} is I^{(x1+x2)}; the first term is kept."""
        result = invert(invert(sequence, x2), x1)

        self.assertEqual(result, invert(sequence, x1 + x2))
        self.assertEqual(result[0], sequence[0])


class TestRevert(unittest.TestCase):
    """Tests the Revert operator."""

    def test_catalan(self) -> None:
        """u = t C(t) inverts to t = u - u^2."""
        self.assertEqual(revert(catalan(5)).terms, (1, -1, 0, 0, 0))

    def test_unit_sequence_is_self_inverse(self) -> None:
        """(1, 0, 0, ...) corresponds to u = t."""
        self.assertEqual(revert(NumberSequence.of([1, 0, 0, 0])).terms, (1, 0, 0, 0))

    def test_zero_first_term_raises(self) -> None:
        """a_0 = 0 gives a non-invertible series."""
        with self.assertRaises(OperatorDomainError):
            revert(NumberSequence.of([0, 1, 2]))

    def test_first_term_is_reciprocal(self) -> None:
        """b_0 = 1 / a_0 when a_0 != 1."""
        self.assertEqual(revert(NumberSequence.of([2, 0, 0]))[0], Fraction(1, 2))

    def test_motzkin_round_trip(self) -> None:
        """Revert is an involution on a named sequence."""
        sequence = motzkin(20)

        self.assertEqual(revert(revert(sequence)).terms, sequence.terms)

    @settings(max_examples=50, deadline=None)
    @given(admissible_sequences(10))
    def test_involution(self, sequence) -> None:
        """Reverting twice gives the sequence back."""
        self.assertEqual(revert(revert(sequence)).terms, sequence.terms)
