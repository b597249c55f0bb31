"""Kind of generating function stored by a truncated series."""

from enum import Enum


class SeriesKind(Enum):
    """Ordinary or exponential generating function."""

    OGF = "ogf"
    EGF = "egf"
