"""Test package: tests/unit/cli/configs."""
