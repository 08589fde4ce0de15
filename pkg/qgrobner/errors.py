"""Base exception for qgrobner."""


class QGrobnerError(Exception):
    """Base class for every error raised by the qgrobner services."""

    pass
