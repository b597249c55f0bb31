"""Test package: tests/unit/application."""
