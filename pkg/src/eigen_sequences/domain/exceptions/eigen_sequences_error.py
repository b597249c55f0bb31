"""Base error for the library."""


class EigenSequencesError(ValueError):
    """Raised when an operation is called outside its domain."""

    pass
