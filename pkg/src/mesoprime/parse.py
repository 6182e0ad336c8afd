"""Reader for the plain-text input format.

A document has up to three stanzas, each introduced by a keyword at the
start of a line and allowed to continue over following lines::

    ring: x, y
    ideal: y - x^2*y, y^2 - x*y^2, y^3
    presentation: ...

Expressions use rational literals, variable names, ``^`` with a
nonnegative integer, ``*`` and ``/`` (by constants), ``+``/``-`` and
parentheses.  After expansion each generator may have at most two terms.
Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArityError, ParseError
from .ring import AmbientRing, Binomial, BinomialIdeal

KEYWORDS = ("ring", "ideal", "presentation", "options")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


@dataclass
class InputDocument:
    names: list
    generators: list
    presentation: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    sources: list = field(default_factory=list)

    @property
    def ring(self) -> AmbientRing:
        return AmbientRing(self.names)

    def ideal(self) -> BinomialIdeal:
        return BinomialIdeal(self.ring, list(self.presentation) + list(self.generators))


class _Tokens:
    def __init__(self, text, line0, col0):
        self.items = []
        pos = 0
        text = text.replace("−", "-")
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex)
            line, col = _position(text, start, line0, col0)
            if m.group(1):
                self.items.append(("num", int(m.group(1)), line, col))
            elif m.group(2):
                self.items.append(("name", m.group(2), line, col))
            else:
                self.items.append(("op", m.group(3), line, col))
            pos = m.end()
        self.i = 0
        self.end = _position(text, len(text), line0, col0)

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def where(self):
        tok = self.peek()
        return (tok[2], tok[3]) if tok else self.end

    def expect(self, op):
        tok = self.take()
        if tok is None or tok[0] != "op" or tok[1] != op:
            line, col = (tok[2], tok[3]) if tok else self.end
            raise ParseError(f"expected '{op}'", line, col)


def _position(text, offset, line0, col0):
    before = text[:offset]
    nl = before.count("\n")
    if nl == 0:
        return line0, col0 + offset
    return line0 + nl, offset - before.rfind("\n")


# polynomials are dicts from sorted ((name, power), ...) tuples to Fractions

def _padd(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _mono_mul(m1, m2):
    acc = dict(m1)
    for v, k in m2:
        acc[v] = acc.get(v, 0) + k
    return tuple(sorted(acc.items()))


def _pmul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
            if out[m] == 0:
                del out[m]
    return out


def _ppow(a, k):
    out = {(): Fraction(1)}
    for _ in range(k):
        out = _pmul(out, a)
    return out


def _const(p):
    if not p:
        return Fraction(0)
    if set(p) == {()}:
        return p[()]
    return None


def _expr(ts):
    sign = 1
    tok = ts.peek()
    if tok and tok[0] == "op" and tok[1] in "+-":
        ts.take()
        sign = -1 if tok[1] == "-" else 1
    acc = _padd({}, _term(ts), sign)
    while True:
        tok = ts.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            ts.take()
            acc = _padd(acc, _term(ts), -1 if tok[1] == "-" else 1)
        else:
            return acc


def _term(ts):
    acc = _power(ts)
    while True:
        tok = ts.peek()
        if tok is None:
            return acc
        if tok[0] == "op" and tok[1] == "*":
            ts.take()
            acc = _pmul(acc, _power(ts))
        elif tok[0] == "op" and tok[1] == "/":
            ts.take()
            line, col = ts.where()
            d = _const(_power(ts))
            if d is None or d == 0:
                raise ParseError("division only by a nonzero constant", line, col)
            acc = {m: c / d for m, c in acc.items()}
        elif tok[0] in ("name", "num") or (tok[0] == "op" and tok[1] == "("):
            acc = _pmul(acc, _power(ts))
        else:
            return acc


def _power(ts):
    base = _atom(ts)
    tok = ts.peek()
    if tok and tok[0] == "op" and tok[1] == "^":
        ts.take()
        exp = ts.take()
        if exp is None or exp[0] != "num":
            line, col = (exp[2], exp[3]) if exp else ts.end
            raise ParseError("exponent must be a nonnegative integer", line, col)
        return _ppow(base, exp[1])
    return base


def _atom(ts):
    tok = ts.take()
    if tok is None:
        raise ParseError("unexpected end of expression", *ts.end)
    kind, val, line, col = tok
    if kind == "num":
        return {(): Fraction(val)} if val else {}
    if kind == "name":
        return {((val, 1),): Fraction(1)}
    if val == "(":
        inner = _expr(ts)
        ts.expect(")")
        return inner
    raise ParseError(f"unexpected '{val}'", line, col)


def _split_stanzas(text):
    stanzas = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = re.match(r"\s*([A-Za-z]+)\s*:", raw)
        if m and m.group(1) in KEYWORDS:
            current = [m.group(1), [(lineno, m.end() + 1, raw[m.end():])]]
            stanzas.append(current)
            continue
        if m and m.group(1) not in KEYWORDS and current is None:
            raise ParseError(f"unknown stanza '{m.group(1)}'", lineno, 1)
        if current is None:
            raise ParseError("text before the first stanza", lineno, 1)
        current[1].append((lineno, 1, raw))
    return stanzas


def _items(chunks):
    """Comma-separated items of a stanza as (text, line, column) triples."""
    out = []
    buf, start, depth = [], None, 0
    for lineno, col0, text in chunks:
        for k, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                out.append(("".join(buf), start))
                buf, start = [], None
                continue
            if start is None and not ch.isspace():
                start = (lineno, col0 + k)
            if start is not None:
                buf.append(ch)
        if start is not None:
            buf.append("\n")
    if start is not None or buf:
        out.append(("".join(buf), start))
    return [(t.strip(), pos) for t, pos in out if t.strip()]


def _poly(text, pos):
    ts = _Tokens(text, *pos)
    p = _expr(ts)
    tok = ts.peek()
    if tok is not None:
        raise ParseError(f"unexpected '{tok[1]}'", tok[2], tok[3])
    return p


def _variables(p):
    seen = []
    for m in p:
        for v, _ in m:
            if v not in seen:
                seen.append(v)
    return seen


def _to_binomial(p, names, text, pos):
    index = {v: i for i, v in enumerate(names)}
    terms = []
    for m, c in p.items():
        e = [0] * len(names)
        for v, k in m:
            if v not in index:
                raise ParseError(f"variable '{v}' is not declared in the ring", *pos)
            e[index[v]] += k
        terms.append((c, tuple(e)))
    if len(terms) > 2:
        raise ArityError(f"generator '{text}' has {len(terms)} terms; at most two are allowed", *pos)
    return Binomial.from_terms(terms)


def parse(text: str) -> InputDocument:
    """Parse a document; errors carry line and column."""
    stanzas = _split_stanzas(text)
    names = None
    polys = {"ideal": [], "presentation": []}
    options = {}
    for kind, chunks in stanzas:
        items = _items(chunks)
        if kind == "ring":
            if names is not None:
                raise ParseError("ring declared twice", chunks[0][0], 1)
            names = []
            for t, pos in items:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", t):
                    raise ParseError(f"bad variable name '{t}'", *pos)
                if t in names:
                    raise ParseError(f"variable '{t}' declared twice", *pos)
                names.append(t)
        elif kind == "options":
            for t, pos in items:
                key, _, val = t.partition("=")
                options[key.strip()] = val.strip()
        else:
            for t, pos in items:
                polys[kind].append((_poly(t, pos), t, pos))
    if names is None:
        names = []
        for p, _, _ in polys["presentation"] + polys["ideal"]:
            for v in _variables(p):
                if v not in names:
                    names.append(v)
        if not names:
            names = ["x"]
    out = {}
    for kind in ("ideal", "presentation"):
        gens = []
        for p, t, pos in polys[kind]:
            b = _to_binomial(p, names, t, pos)
            if b is not None:
                gens.append(b)
        out[kind] = gens
    return InputDocument(names, out["ideal"], out["presentation"], options,
                         [t for _, t, _ in polys["ideal"]])


def parse_ideal(text: str, names=None) -> BinomialIdeal:
    """Shortcut: ``parse_ideal("x^2 - x*y, y^3", "x,y")``."""
    head = f"ring: {names if isinstance(names, str) else ', '.join(names)}\n" if names else ""
    return parse(head + "ideal: " + text).ideal()
