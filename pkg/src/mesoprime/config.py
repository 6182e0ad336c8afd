"""Search caps shared by the engine."""
from __future__ import annotations

import os

DEFAULT_MAX_EXP = 64
DEFAULT_MAX_DUAL = 10**6


def max_exp() -> int:
    """Per-variable exponent cap; ``MESOPRIME_MAX_EXP`` overrides the default."""
    raw = os.environ.get("MESOPRIME_MAX_EXP")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            return DEFAULT_MAX_EXP
        if value > 0:
            return value
    return DEFAULT_MAX_EXP


def max_nodes() -> int:
    """Node budget for breadth-first class exploration."""
    return 200 * max_exp() ** 2


def max_dual() -> int:
    """Largest finite dual group enumerated when testing extension covers."""
    return DEFAULT_MAX_DUAL
