"""Top-level package for eigen_sequences."""
