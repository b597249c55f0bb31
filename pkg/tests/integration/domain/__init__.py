"""Test package: tests/integration/domain."""
