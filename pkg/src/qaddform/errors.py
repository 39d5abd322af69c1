"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class QAddFormError(Exception):
    """Base class for errors raised by this package."""


class PoleError(QAddFormError, ZeroDivisionError):
    """A denominator q-shifted factorial vanished before the series terminated."""


class UnsupportedModeError(QAddFormError):
    """Operation requested in a coefficient mode it cannot run in."""


class DomainError(QAddFormError, ValueError):
    """Argument outside the domain of the operation."""


class SpectrumError(DomainError):
    """Requested eigenvalue is not on either ladder of the spectrum."""


class UnsupportedIndexError(QAddFormError, ValueError):
    """Generalised matrix element index pattern that is not implemented."""


class ParseError(QAddFormError, ValueError):
    """Syntax error or unknown identifier in algebra input text."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
