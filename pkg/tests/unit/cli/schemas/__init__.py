"""Test package: tests/unit/cli/schemas."""
