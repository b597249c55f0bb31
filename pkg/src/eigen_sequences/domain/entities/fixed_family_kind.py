"""Kinds of eigen-sequence families."""

from enum import Enum


class FixedFamilyKind(Enum):
    """Every constructive family of fixed sequences."""

    GENERIC_LHY = "generic"
    EVEN_SEED = "even-seed"
    PHI_POWER = "phi"
    LUCAS_HALF = "lucas-half"
    SHIFTED = "shifted"
    IL_FIXED = "il"
    REV_L_FIXED = "rev-l"
    REV_I_FIXED = "rev-i"
