"""Test package: tests/integration."""
