"""Shared exception types."""


class CapacityError(RuntimeError):
    """Raised when an input exceeds a documented size or budget cap."""
