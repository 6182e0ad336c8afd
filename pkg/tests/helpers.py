"""Small shared helpers for the test suite."""
from mesoprime.io_format import format_ideal
from mesoprime.parse import parse_ideal


def I(text, names):
    return parse_ideal(text, names)


def same(A, text):
    """Ideal equality against a textual ideal over A's variables."""
    return A == parse_ideal(text, list(A.ring.names))


def show(A):
    return format_ideal(A)
