"""Unit tests for ApplicationFactory."""

import path_setup

path_setup.add_src_path()


import io
import unittest
from unittest.mock import Mock

from eigen_sequences.cli.command_line_interface import CommandLineInterface
from eigen_sequences.configs.app_config import AppConfig
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog
from eigen_sequences.application.application_factory import ApplicationFactory


class TestApplicationFactory(unittest.TestCase):
    """Tests CLI creation and wiring."""

    def test_create_cli_builds_interface(self) -> None:
        """Factory creates a CommandLineInterface with all subcommands."""
        cli = ApplicationFactory(AppConfig()).create_cli()

        self.assertIsInstance(cli, CommandLineInterface)
        help_text = cli.create_parser().format_help()
        for command in ("emit", "transform", "fixed-check", "worpitzky", "worpify", "eval-poly",
                        "identity", "revert", "invert", "family"):
            self.assertIn(command, help_text)

    def test_injected_catalog_is_used(self) -> None:
        """A provided catalog replaces the default one."""
        catalog = Mock(spec=SequenceCatalog)
        catalog.get_sequence.return_value = NumberSequence.of([7, 7], name="sevens")
        stdout = io.StringIO()
        cli = ApplicationFactory(AppConfig(), catalog=catalog).create_cli(stdout=stdout)

        exit_code = cli.run(["emit", "--name", "sevens", "--terms", "2"])

        self.assertEqual(exit_code, 0)
        catalog.get_sequence.assert_called_once_with("sevens", 2)
        self.assertIn('"7"', stdout.getvalue())
