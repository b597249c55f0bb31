"""Test package: tests/e2e."""
