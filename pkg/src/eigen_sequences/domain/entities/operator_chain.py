"""Composition of operators applied right-to-left."""

from dataclasses import dataclass

from eigen_sequences.domain.entities.operator_spec import OperatorSpec


@dataclass(frozen=True)
class OperatorChain:
    """
    Ordered operators; chain [I, L] means I∘L, so L acts first.

    Attributes:
        ops: Non-empty tuple of operator specs.
    """

    ops: tuple[OperatorSpec, ...]

    def __post_init__(self) -> None:
        """Reject empty chains."""
        if not self.ops:
            raise ValueError("OperatorChain must contain at least one operator")

    @classmethod
    def of(cls, *ops: OperatorSpec) -> "OperatorChain":
        """Build a chain from operators written left-to-right."""
        return cls(tuple(ops))

    def describe(self) -> str:
        """Render in the command-line chain syntax."""
        return ",".join(op.describe() for op in self.ops)
