"""Application wiring: builds the services and the command-line interface."""

from typing import Optional, TextIO

from eigen_sequences.cli.command_line_interface import CommandLineInterface
from eigen_sequences.cli.configs.cli_config import CliConfig
from eigen_sequences.cli.parsers.operator_chain_parser import OperatorChainParser
from eigen_sequences.configs.app_config import AppConfig
from eigen_sequences.domain.services.eigen_sequence_service import EigenSequenceService
from eigen_sequences.domain.services.identity_verification_service import IdentityVerificationService
from eigen_sequences.domain.services.operator_chain_service import OperatorChainService
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog
from eigen_sequences.domain.services.worpitzky_transform_service import WorpitzkyTransformService


class ApplicationFactory:
    """Builds and configures the command-line application."""

    def __init__(
        self,
        config: AppConfig,
        catalog: Optional[SequenceCatalog] = None,
        chain_service: Optional[OperatorChainService] = None,
    ) -> None:
        """Initialize the factory with application configuration."""
        self._config = config
        self._catalog = catalog
        self._chain_service = chain_service

    def create_cli(
        self,
        cli_config: Optional[CliConfig] = None,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
    ) -> CommandLineInterface:
        """Create the command-line interface with default services."""
        catalog = self._catalog or SequenceCatalog()
        chain_service = self._chain_service or OperatorChainService()
        return CommandLineInterface(
            app_config=self._config,
            config=cli_config or CliConfig(),
            catalog=catalog,
            chain_service=chain_service,
            eigen_service=EigenSequenceService(chain_service),
            worpitzky_service=WorpitzkyTransformService(),
            identity_service=IdentityVerificationService(catalog),
            chain_parser=OperatorChainParser(),
            stdin=stdin,
            stdout=stdout,
        )
