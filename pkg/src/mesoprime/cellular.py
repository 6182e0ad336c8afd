"""Cellular decomposition: split until every variable is a nonzerodivisor or nilpotent."""
from __future__ import annotations

from . import config
from .errors import BoundExceeded
from .ring import BinomialIdeal


def variable_status(K: BinomialIdeal, i):
    """'nzd', 'nil' or 'split' for the variable x_i modulo K."""
    e = K.ring.unit_vector(i)
    if K.colon(e) == K:
        return "nzd"
    if K.saturate([i]).is_unit:
        return "nil"
    return "split"


def is_cellular(K: BinomialIdeal):
    return all(variable_status(K, i) != "split" for i in range(K.ring.n))


def nilpotency_exponent(K: BinomialIdeal, i, cap=None):
    """Smallest k with x_i^k in K."""
    cap = cap or config.max_exp()
    for k in range(1, cap + 1):
        if K.contains_monomial(K.ring.unit_vector(i, k)):
            return k
    raise BoundExceeded(f"x_{i} is not nilpotent within exponent {cap}")


def _stable_power(K, i, S, cap):
    for k in range(1, cap + 1):
        if K.colon(K.ring.unit_vector(i, k)) == S:
            return k
    raise BoundExceeded(f"colon by powers of x_{i} did not stabilise within {cap}")


def cellular_pieces(I: BinomialIdeal, cap=None):
    """List of (cellular ideal, nonzerodivisor face) whose intersection is I."""
    cap = cap or config.max_exp()
    hit = I.cache.get("cellular")
    if hit is not None:
        return hit
    out = []
    stack = [I]
    seen = set()
    while stack:
        K = stack.pop()
        if K.is_unit or K in seen:
            continue
        seen.add(K)
        split = None
        face = []
        for i in range(K.ring.n):
            st = variable_status(K, i)
            if st == "nzd":
                face.append(i)
            elif st == "split":
                split = i
                break
        if split is None:
            out.append((K, tuple(face)))
            continue
        S = K.saturate([split])
        N = _stable_power(K, split, S, cap)
        stack.append(K.add_monomials([K.ring.unit_vector(split, N)]))
        stack.append(S)
    out.sort(key=lambda p: (-len(p[1]), p[1]))
    I.cache["cellular"] = out
    return out
