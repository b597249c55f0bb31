"""Test package: tests/unit/domain/entities."""
