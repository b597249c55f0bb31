"""Allow `python -m eigen_sequences`."""

from eigen_sequences.main import main

main()
