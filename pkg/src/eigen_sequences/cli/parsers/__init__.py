"""Parsers for command-line arguments."""

from eigen_sequences.cli.parsers.operator_chain_parser import OperatorChainParser
from eigen_sequences.cli.parsers.rational_parser import format_rational, parse_rational

__all__ = [
    "OperatorChainParser",
    "format_rational",
    "parse_rational",
]
