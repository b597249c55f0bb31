"""Test package: tests/unit/cli."""
