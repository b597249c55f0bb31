"""Unit tests for OperatorChainService."""

import path_setup

path_setup.add_src_path()


import unittest

from hypothesis import given, settings

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.operator_chain import OperatorChain
from eigen_sequences.domain.entities.operator_spec import OperatorSpec
from eigen_sequences.domain.services.generalized_binomial_operator import GeneralizedBinomialOperator
from eigen_sequences.domain.services.invert_operator import InvertOperator
from eigen_sequences.domain.services.operator_chain_service import OperatorChainService
from eigen_sequences.domain.services.revert_operator import RevertOperator
from eigen_sequences.domain.services.sequence_operators import gen_binomial, invert
from sequence_strategies import admissible_sequences, nonzero_rationals, rationals, sequences


class TestOperatorChainService(unittest.TestCase):
    """Tests operator creation and chain application."""

    def setUp(self) -> None:
        """Set up shared service instance."""
        self._service = OperatorChainService()

    def test_create_operator_dispatches_on_kind(self) -> None:
        """Each kind maps to its operator class."""
        self.assertIsInstance(self._service.create_operator(OperatorSpec.invert(1)), InvertOperator)
        self.assertIsInstance(
            self._service.create_operator(OperatorSpec.gen_binomial(1, 1)), GeneralizedBinomialOperator
        )
        self.assertIsInstance(self._service.create_operator(OperatorSpec.revert()), RevertOperator)

    @settings(max_examples=30, deadline=None)
    @given(sequences(10), rationals(), rationals())
    def test_binomial_shifts_add(self, sequence, y1, y2) -> None:
        """L^{(1,y1)} after L^{(1,y2)} is L^{(1,y1+y2)}."""
        chain = OperatorChain.of(OperatorSpec.gen_binomial(1, y1), OperatorSpec.gen_binomial(1, y2))

        self.assertEqual(self._service.apply_chain(chain, sequence), gen_binomial(sequence, 1, y1 + y2))

    @settings(max_examples=30, deadline=None)
    @given(sequences(10), rationals())
    def test_singleton_chain_is_the_operator(self, sequence, x) -> None:
        """A one-element chain applies that operator."""
        chain = OperatorChain.of(OperatorSpec.invert(x))

        self.assertEqual(self._service.apply_chain(chain, sequence), invert(sequence, x))

    @settings(max_examples=30, deadline=None)
    @given(admissible_sequences(10))
    def test_double_revert_is_identity(self, sequence) -> None:
        """[R, R] is the identity on admissible sequences."""
        chain = OperatorChain.of(OperatorSpec.revert(), OperatorSpec.revert())

        self.assertEqual(self._service.apply_chain(chain, sequence).terms, sequence.terms)

    def test_chain_applies_right_to_left(self) -> None:
        """[I, L] means L first, then I."""
        sequence = NumberSequence.of([1, 2, -1, 3, 0, 5])
        chain = OperatorChain.of(OperatorSpec.invert(2), OperatorSpec.gen_binomial(3, 1))

        expected = invert(gen_binomial(sequence, 3, 1), 2)

        self.assertEqual(self._service.apply_chain(chain, sequence), expected)

    def test_simplify_collapses_adjacent_operators(self) -> None:
        """Adjacent L and I operators merge; reverts stay."""
        chain = OperatorChain.of(
            OperatorSpec.gen_binomial(2, 1),
            OperatorSpec.gen_binomial(3, 5),
            OperatorSpec.revert(),
            OperatorSpec.revert(),
            OperatorSpec.invert(1),
            OperatorSpec.invert(-3),
        )

        simplified = self._service.simplify(chain)

        self.assertEqual(simplified.describe(), "L:h=6,y=11,R,R,I:x=-2")

    @settings(max_examples=30, deadline=None)
    @given(sequences(8), nonzero_rationals(), rationals(), rationals(), rationals(), rationals())
    def test_simplified_chain_is_equivalent(self, sequence, h1, y1, h2, y2, x) -> None:
        """Simplification never changes the result."""
        chain = OperatorChain.of(
            OperatorSpec.invert(x),
            OperatorSpec.invert(-x),
            OperatorSpec.gen_binomial(h1, y1),
            OperatorSpec.gen_binomial(h2, y2),
        )

        self.assertEqual(
            self._service.apply_chain(self._service.simplify(chain), sequence),
            self._service.apply_chain(chain, sequence),
        )
