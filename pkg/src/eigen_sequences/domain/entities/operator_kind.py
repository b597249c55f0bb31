"""Kinds of operators acting on sequences."""

from enum import Enum


class OperatorKind(Enum):
    """Interpolated Invert, Generalized Binomial and Revert."""

    INVERT = "I"
    GEN_BINOMIAL = "L"
    REVERT = "R"
