"""Test package: tests/unit/domain."""
