"""Test package: tests/unit/cli/parsers."""
