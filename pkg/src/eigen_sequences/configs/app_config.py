"""Application-level configuration."""

from dataclasses import dataclass


@dataclass(frozen=True)
class AppConfig:
    """Configuration values for the command-line application."""

    program_name: str = "eigen-sequences"
    description: str = "Exact Invert, Generalized Binomial and Revert transforms and their fixed sequences."
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
