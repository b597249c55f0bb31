"""Test package: tests/unit/configs."""
