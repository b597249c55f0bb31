"""Test package: tests/unit."""
