"""Constructors and verifier for fixed sequences (eigen-sequences)."""

import logging
from fractions import Fraction
from typing import Optional

from eigen_sequences.domain.entities.fixed_family import FixedFamily
from eigen_sequences.domain.entities.fixed_family_kind import FixedFamilyKind
from eigen_sequences.domain.entities.fixed_point_result import FixedPointResult
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.operator_chain import OperatorChain
from eigen_sequences.domain.entities.operator_kind import OperatorKind
from eigen_sequences.domain.entities.operator_spec import OperatorSpec
from eigen_sequences.domain.exceptions.no_fixed_sequence_error import NoFixedSequenceError
from eigen_sequences.domain.exceptions.operator_domain_error import OperatorDomainError
from eigen_sequences.domain.services.catalog_generators import lucas
from eigen_sequences.domain.services.combinatorics_utils import powers
from eigen_sequences.domain.services.operator_chain_service import OperatorChainService
from eigen_sequences.domain.services.power_series_utils import (
    egf_to_sequence,
    ps_mul,
    ps_multiply_by_power,
    sequence_to_egf,
)
from eigen_sequences.domain.services.sequence_operators import gen_binomial

logger = logging.getLogger(__name__)


class EigenSequenceService:
    """
    Builds every constructive family of fixed sequences and checks fixedness.

    Families:
    - L^{(h,y)}, h not in {1, -1}: ((y / (1-h))^n)
    - L^{(-1,2y)}: L^{(h,y)} of an even seed, phi-power and Lucas-half sequences, 2m-shifts
    - I^{(x)}∘L^{(h,y)}, eta∘L^{(1,y)}, eta∘I^{(x)}: geometric sequences
    """

    def __init__(self, chain_service: OperatorChainService) -> None:
        """
        Initialize service with the chain evaluator.

        Args:
            chain_service: Applies operator chains during fixed-point checks.
        """
        self._chain_service = chain_service

    def is_fixed(self, chain: OperatorChain, sequence: NumberSequence) -> FixedPointResult:
        """
        Compare the chain's output with its input on all terms.

        Raises:
            OperatorDomainError: Propagated when the input is not admissible.
        """
        image = self._chain_service.apply_chain(chain, sequence)
        for index, (before, after) in enumerate(zip(sequence.terms, image.terms)):
            if before != after:
                logger.debug("Chain %s moves term %s: %s -> %s", chain.describe(), index, before, after)
                return FixedPointResult(False, index)
        return FixedPointResult(True)

    def generic_fixed(self, h: Fraction | int, y: Fraction | int, count: int) -> NumberSequence:
        """
        The unique fixed sequence ((y / (1-h))^n) of L^{(h,y)}; (1, 0, 0, ...) when y = 0.

        Raises:
            OperatorDomainError: If h is 1 or -1.
        """
        h, y = Fraction(h), Fraction(y)
        if h in (1, -1):
            raise OperatorDomainError(f"No generic fixed sequence for h = {h}")
        return NumberSequence(tuple(powers(y / (1 - h), count)))

    def fixed_from_even(self, seed: NumberSequence, h: Fraction | int, y: Fraction | int) -> NumberSequence:
        """
        L^{(h,y)} of an even seed; the EGF is e^{yt} times an even function, so L^{(-1,2y)} fixes it.

        Raises:
            OperatorDomainError: If the seed has a non-zero odd-index term.
        """
        if not seed.is_even():
            raise OperatorDomainError("Seed must be even (odd-index terms zero)")
        return gen_binomial(seed, h, y)

    def phi_power_fixed(self, alpha: Fraction | int, count: int) -> NumberSequence:
        """(alpha^n + (1-alpha)^n) / 2, generated by phi(u) = (u^alpha + u^(1-alpha)) / 2; fixed by L^{(-1,1)}."""
        alpha = Fraction(alpha)
        first = powers(alpha, count)
        second = powers(1 - alpha, count)
        return NumberSequence(tuple((a + b) / 2 for a, b in zip(first, second)))

    def lucas_half_fixed(self, count: int) -> NumberSequence:
        """
        L_n / 2, the phi-power family at the golden ratio, by the Lucas recurrence.

        Raises:
            OperatorDomainError: If count < 2.
        """
        if count < 2:
            raise OperatorDomainError(f"lucas_half_fixed needs at least 2 terms, got {count}")
        return NumberSequence(tuple(term / 2 for term in lucas(count).terms))

    def shift_fixed(self, sequence: NumberSequence, m: int) -> NumberSequence:
        """
        Multiply the EGF by the even function t^(2m); L^{(-1,y)} fixedness is kept.

        Terms become n (n-1) ... (n-2m+1) a_{n-2m}, truncated to the input length.
        """
        if m < 0:
            raise OperatorDomainError(f"m must be >= 0, got {m}")
        if m == 0:
            return sequence
        return egf_to_sequence(ps_multiply_by_power(sequence_to_egf(sequence), 2 * m))

    def il_fixed(
        self,
        x: Fraction | int,
        y: Fraction | int,
        h: Fraction | int,
        count: int,
        c: Optional[Fraction | int] = None,
    ) -> NumberSequence:
        """
        Fixed sequence of I^{(x)}∘L^{(h,y)}.

        For h != 1: a_n = (-1)^n ((x+y)/(h-1))^n. For h = 1 and x + y = 0 every
        (c^n) is fixed and c must be supplied.

        Raises:
            NoFixedSequenceError: If h = 1 and x + y != 0, or h = 1 without c.
        """
        x, y, h = Fraction(x), Fraction(y), Fraction(h)
        if h == 1:
            if x + y != 0:
                raise NoFixedSequenceError(f"I^({x})∘L^(1,{y}) has no fixed sequence: x + y != 0")
            if c is None:
                raise NoFixedSequenceError("h = 1 and x + y = 0: a free constant c must be supplied")
            return NumberSequence(tuple(powers(Fraction(c), count)))
        return NumberSequence(tuple(powers(-(x + y) / (h - 1), count)))

    def rev_l_fixed(self, y: Fraction | int, count: int) -> NumberSequence:
        """a_n = (-y/2)^n, fixed by eta∘L^{(1,y)}."""
        return NumberSequence(tuple(powers(-Fraction(y) / 2, count)))

    def rev_i_fixed(self, x: Fraction | int, count: int) -> NumberSequence:
        """a_n = (-x/2)^n, fixed by eta∘I^{(x)}."""
        return NumberSequence(tuple(powers(-Fraction(x) / 2, count)))

    def egf_product(self, first: NumberSequence, second: NumberSequence) -> NumberSequence:
        """Binomial convolution; for solutions with y1, y2 the product is fixed for y1 + y2."""
        return egf_to_sequence(ps_mul(sequence_to_egf(first), sequence_to_egf(second)))

    def multiply_by_even(self, sequence: NumberSequence, even: NumberSequence) -> NumberSequence:
        """
        EGF product with an even function; preserves L^{(-1,y)} fixedness.

        Raises:
            OperatorDomainError: If `even` has a non-zero odd-index term.
        """
        if not even.is_even():
            raise OperatorDomainError("Multiplier must be even (odd-index terms zero)")
        return self.egf_product(sequence, even)

    def linear_combination(
        self,
        first: NumberSequence,
        second: NumberSequence,
        first_weight: Fraction | int,
        second_weight: Fraction | int,
    ) -> NumberSequence:
        """lambda * a + mu * b, termwise."""
        if len(first) != len(second):
            raise OperatorDomainError(f"Length mismatch: {len(first)} != {len(second)}")
        return NumberSequence(
            tuple(first_weight * a + second_weight * b for a, b in zip(first.terms, second.terms))
        )

    def fixing_chain(self, family: FixedFamily) -> OperatorChain:
        """
        The operator chain that fixes every member of the family.

        Raises:
            OperatorDomainError: For a shift of a family not fixed by some L^{(-1,y)}.
        """
        kind = family.kind
        if kind is FixedFamilyKind.GENERIC_LHY:
            return OperatorChain.of(OperatorSpec.gen_binomial(family.h, family.y))
        if kind is FixedFamilyKind.EVEN_SEED:
            return OperatorChain.of(OperatorSpec.gen_binomial(-1, 2 * family.y))
        if kind in (FixedFamilyKind.PHI_POWER, FixedFamilyKind.LUCAS_HALF):
            return OperatorChain.of(OperatorSpec.gen_binomial(-1, 1))
        if kind is FixedFamilyKind.SHIFTED:
            base_chain = self.fixing_chain(family.base)
            ops = base_chain.ops
            if len(ops) != 1 or ops[0].kind is not OperatorKind.GEN_BINOMIAL or ops[0].h != -1:
                raise OperatorDomainError("Shifts keep fixedness only for L^{(-1,y)}")
            return base_chain
        if kind is FixedFamilyKind.IL_FIXED:
            return OperatorChain.of(OperatorSpec.invert(family.x), OperatorSpec.gen_binomial(family.h, family.y))
        if kind is FixedFamilyKind.REV_L_FIXED:
            return OperatorChain.of(OperatorSpec.revert(), OperatorSpec.gen_binomial(1, family.y))
        return OperatorChain.of(OperatorSpec.revert(), OperatorSpec.invert(family.x))

    def build(self, family: FixedFamily, count: int) -> NumberSequence:
        """First `count` terms of the family member."""
        kind = family.kind
        if kind is FixedFamilyKind.GENERIC_LHY:
            return self.generic_fixed(family.h, family.y, count)
        if kind is FixedFamilyKind.EVEN_SEED:
            return self.fixed_from_even(family.seed.truncate(count), family.h, family.y)
        if kind is FixedFamilyKind.PHI_POWER:
            return self.phi_power_fixed(family.alpha, count)
        if kind is FixedFamilyKind.LUCAS_HALF:
            return self.lucas_half_fixed(count)
        if kind is FixedFamilyKind.SHIFTED:
            return self.shift_fixed(self.build(family.base, count), family.m)
        if kind is FixedFamilyKind.IL_FIXED:
            return self.il_fixed(family.x, family.y, family.h, count, family.c)
        if kind is FixedFamilyKind.REV_L_FIXED:
            return self.rev_l_fixed(family.y, count)
        return self.rev_i_fixed(family.x, count)
