"""Builds and evaluates operator chains."""

import logging

from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.operator_chain import OperatorChain
from eigen_sequences.domain.entities.operator_kind import OperatorKind
from eigen_sequences.domain.entities.operator_spec import OperatorSpec
from eigen_sequences.domain.interfaces.sequence_operator_interface import SequenceOperatorInterface
from eigen_sequences.domain.services.composite_sequence_operator import CompositeSequenceOperator
from eigen_sequences.domain.services.generalized_binomial_operator import GeneralizedBinomialOperator
from eigen_sequences.domain.services.invert_operator import InvertOperator
from eigen_sequences.domain.services.revert_operator import RevertOperator
from eigen_sequences.domain.services.sequence_operators import compose_binomial_parameters

logger = logging.getLogger(__name__)


class OperatorChainService:
    """Turns symbolic chains into operators and applies them."""

    def create_operator(self, spec: OperatorSpec) -> SequenceOperatorInterface:
        """Instantiate the operator described by a spec."""
        if spec.kind is OperatorKind.INVERT:
            return InvertOperator(spec.x)
        if spec.kind is OperatorKind.GEN_BINOMIAL:
            return GeneralizedBinomialOperator(spec.h, spec.y)
        return RevertOperator()

    def create_chain_operator(self, chain: OperatorChain) -> CompositeSequenceOperator:
        """Instantiate the composite operator for a chain."""
        return CompositeSequenceOperator([self.create_operator(spec) for spec in chain.ops])

    def apply_chain(self, chain: OperatorChain, sequence: NumberSequence) -> NumberSequence:
        """
        Apply a chain right-to-left.

        Raises:
            OperatorDomainError: Propagated from the constituent operators.
        """
        logger.debug("Applying chain %s", chain.describe())
        return self.create_chain_operator(chain).apply(sequence)

    def simplify(self, chain: OperatorChain) -> OperatorChain:
        """
        Collapse adjacent operators of one kind.

        L^{(h1,y1)}∘L^{(h2,y2)} = L^{(h1 h2, y1 + h1 y2)} and I^{(x1)}∘I^{(x2)} = I^{(x1+x2)}.
        Revert pairs are kept, since eta∘eta is the identity only on a_0 != 0.
        """
        collapsed: list[OperatorSpec] = []
        for spec in chain.ops:
            previous = collapsed[-1] if collapsed else None
            if previous is not None and previous.kind is spec.kind is OperatorKind.GEN_BINOMIAL:
                h, y = compose_binomial_parameters((previous.h, previous.y), (spec.h, spec.y))
                collapsed[-1] = OperatorSpec.gen_binomial(h, y)
            elif previous is not None and previous.kind is spec.kind is OperatorKind.INVERT:
                collapsed[-1] = OperatorSpec.invert(previous.x + spec.x)
            else:
                collapsed.append(spec)
        return OperatorChain(tuple(collapsed))
