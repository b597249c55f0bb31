"""Parameterized description of a family of fixed sequences."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from eigen_sequences.domain.entities.fixed_family_kind import FixedFamilyKind
from eigen_sequences.domain.entities.number_sequence import NumberSequence


@dataclass(frozen=True)
class FixedFamily:
    """
    A family member together with the parameters that select it.

    Only the fields relevant to `kind` are read:
    GENERIC_LHY (h, y), EVEN_SEED (h, y, seed), PHI_POWER (alpha), LUCAS_HALF (),
    SHIFTED (base, m), IL_FIXED (x, y, h, c), REV_L_FIXED (y), REV_I_FIXED (x).
    """

    kind: FixedFamilyKind
    h: Fraction = Fraction(1)
    y: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    alpha: Fraction = Fraction(1, 2)
    c: Optional[Fraction] = None
    seed: Optional[NumberSequence] = None
    base: Optional["FixedFamily"] = None
    m: int = 1

    def __post_init__(self) -> None:
        """Validate kind-specific invariants."""
        if self.kind is FixedFamilyKind.GENERIC_LHY and self.h in (1, -1):
            raise ValueError("GENERIC_LHY requires h not in {1, -1}")
        if self.kind is FixedFamilyKind.SHIFTED:
            if self.base is None:
                raise ValueError("SHIFTED requires a base family")
            if self.m < 1:
                raise ValueError(f"SHIFTED requires m >= 1, got {self.m}")
        if self.kind is FixedFamilyKind.EVEN_SEED and self.seed is None:
            raise ValueError("EVEN_SEED requires a seed sequence")
