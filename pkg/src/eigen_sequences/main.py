"""Application entrypoint."""

import sys

from eigen_sequences.application.application_factory import ApplicationFactory
from eigen_sequences.configs.app_config import AppConfig


def main() -> None:
    """Run the command-line interface and exit with its status."""
    cli = ApplicationFactory(AppConfig()).create_cli()
    sys.exit(cli.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
