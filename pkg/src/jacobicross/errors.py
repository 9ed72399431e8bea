class DomainError(ValueError):
    """Argument outside the domain where an operation is defined."""


class UnsupportedError(ValueError):
    """Valid input for which the operation is deliberately not provided."""
