"""Command-line layer."""
