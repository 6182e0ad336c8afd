"""Exception types with stable names and CLI exit codes."""
from __future__ import annotations


class MesoprimeError(Exception):
    """Base class for engine errors."""

    code = 1


class ParseError(MesoprimeError):
    code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ArityError(ParseError):
    """A generator expands to more than two terms."""


class BoundExceeded(MesoprimeError):
    code = 3


class CertificationFailed(MesoprimeError):
    code = 4

    def __init__(self, message, separator=None):
        self.separator = separator
        super().__init__(message)


class NilClass(MesoprimeError):
    pass


class NotLaurent(MesoprimeError):
    pass


class Improper(MesoprimeError):
    pass


class NotExtension(MesoprimeError):
    pass


class MixedMesoprimes(MesoprimeError):
    pass


class NoAugmentation(MesoprimeError):
    pass


class DimensionUnsupported(MesoprimeError):
    pass
