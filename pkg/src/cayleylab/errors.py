"""Shared exception types."""


class CapExceeded(RuntimeError):
    """A configured resource cap (group order, graph size) would be exceeded."""
