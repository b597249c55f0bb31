"""Parser for the comma-separated operator chain syntax."""

import logging
from fractions import Fraction

from eigen_sequences.cli.parsers.rational_parser import parse_rational
from eigen_sequences.domain.entities.operator_chain import OperatorChain
from eigen_sequences.domain.entities.operator_kind import OperatorKind
from eigen_sequences.domain.entities.operator_spec import OperatorSpec
from eigen_sequences.domain.exceptions.chain_syntax_error import ChainSyntaxError

logger = logging.getLogger(__name__)

_PARAMETERS = {
    OperatorKind.INVERT: ("x",),
    OperatorKind.GEN_BINOMIAL: ("h", "y"),
    OperatorKind.REVERT: (),
}


class OperatorChainParser:
    """
    Parses chains such as "R,L:h=-1,y=2" or "I:x=1/2,identity".

    A token "L:...", "I:...", "R" or "identity" opens an operator; a bare
    "key=value" token adds a parameter to the operator opened last. Omitted
    parameters take the neutral values h=1, y=0, x=0.
    """

    def parse(self, text: str) -> OperatorChain:
        """
        Parse a chain; operators are listed left to right and applied right to left.

        Raises:
            ChainSyntaxError: On an unknown token, an unknown or repeated
                parameter, a malformed rational or an empty chain.
        """
        pending: list[tuple[OperatorKind, dict[str, Fraction]]] = []
        for raw_token in text.split(","):
            token = raw_token.strip()
            if not token:
                raise ChainSyntaxError(f"Empty token in chain {text!r}")
            if token == "R":
                pending.append((OperatorKind.REVERT, {}))
            elif token == "identity":
                pending.append((OperatorKind.GEN_BINOMIAL, {"h": Fraction(1), "y": Fraction(0)}))
            elif token[:2] in ("L:", "I:"):
                kind = OperatorKind(token[0])
                pending.append((kind, {}))
                self._add_parameter(pending[-1], token[2:], text)
            elif "=" in token:
                if not pending:
                    raise ChainSyntaxError(f"Parameter {token!r} before any operator in {text!r}")
                self._add_parameter(pending[-1], token, text)
            else:
                raise ChainSyntaxError(f"Unknown token {token!r} in chain {text!r}")

        ops = tuple(self._build(kind, parameters) for kind, parameters in pending)
        if not ops:
            raise ChainSyntaxError("Operator chain is empty")
        chain = OperatorChain(ops)
        logger.debug("Parsed chain %r as %s", text, chain.describe())
        return chain

    def _add_parameter(
        self, operator: tuple[OperatorKind, dict[str, Fraction]], assignment: str, text: str
    ) -> None:
        kind, parameters = operator
        key, separator, value = assignment.partition("=")
        key = key.strip()
        if not separator or key not in _PARAMETERS[kind]:
            raise ChainSyntaxError(f"Invalid parameter {assignment!r} for {kind.value} in {text!r}")
        if key in parameters:
            raise ChainSyntaxError(f"Parameter {key} given twice for {kind.value} in {text!r}")
        parameters[key] = parse_rational(value.strip())

    def _build(self, kind: OperatorKind, parameters: dict[str, Fraction]) -> OperatorSpec:
        if kind is OperatorKind.INVERT:
            return OperatorSpec.invert(parameters.get("x", Fraction(0)))
        if kind is OperatorKind.GEN_BINOMIAL:
            return OperatorSpec.gen_binomial(parameters.get("h", Fraction(1)), parameters.get("y", Fraction(0)))
        return OperatorSpec.revert()
