"""Test package: tests/unit/domain/interfaces."""
