"""Test package: tests/integration/cli."""
