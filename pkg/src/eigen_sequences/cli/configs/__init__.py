"""Configuration for the command-line layer."""
