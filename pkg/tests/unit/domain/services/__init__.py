"""Test package: tests/unit/domain/services."""
