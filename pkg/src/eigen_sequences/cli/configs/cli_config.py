"""Configuration for the command-line interface."""

from dataclasses import dataclass


@dataclass(frozen=True)
class CliConfig:
    """Defaults and fixed messages of the subcommands."""

    default_terms: int = 32
    json_indent: int = 2
    stdin_marker: str = "-"
    fixed_message: str = "FIXED"
    not_fixed_message: str = "NOT FIXED at index {index}"
