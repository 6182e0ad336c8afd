"""Exponents, binomials, and binomial ideals over the rationals.

The rewriting engine is Buchberger's algorithm specialised to binomials:
an S-pair of two binomials is a binomial, and reducing a binomial by a
binomial leaves a binomial, so every element handled here has at most two
terms.  Laurent directions are modelled by adjoining, for each inverted
variable x_j, a partner y_j together with the binomial x_j*y_j - 1.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Sequence

ONE = Fraction(1)
ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# term orders


def block_key(blocks):
    """Key function for a block order; each block is graded reverse lex.

    ``blocks`` lists variable indices, most significant block first.  Larger
    keys are larger terms.
    """
    blocks = [tuple(b) for b in blocks if b]
    if len(blocks) == 1:
        b = blocks[0]
        rb = tuple(reversed(b))

        def key(e):
            return (sum(e[i] for i in b),) + tuple(-e[i] for i in rb)

        return key

    rbs = [(b, tuple(reversed(b))) for b in blocks]

    def key(e):
        out = []
        for b, rb in rbs:
            out.append(sum(e[i] for i in b))
            out.extend(-e[i] for i in rb)
        return tuple(out)

    return key


def glex_key(e):
    """Graded lexicographic key, used only for display."""
    return (sum(e),) + tuple(e)


# ---------------------------------------------------------------------------
# the binomial engine (internal representation)
#
# An element is a triple (lead, trail, c) standing for x^lead - c*x^trail;
# trail is None for the monomial x^lead.


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce_exp(e, G):
    """Normal form of the monomial x^e: (coef, exp) or None when it is zero."""
    coef = ONE
    while True:
        for g in G:
            lead = g[0]
            ok = True
            for x, y in zip(lead, e):
                if x > y:
                    ok = False
                    break
            if ok:
                break
        else:
            return coef, e
        if g[1] is None:
            return None
        coef *= g[2]
        trail = g[1]
        e = tuple(a - l + t for a, l, t in zip(e, lead, trail))


def _make(t1, t2, key):
    """Normalise c1*x^e1 + c2*x^e2 (terms may be None) to an element or None."""
    if t1 is None:
        t1, t2 = t2, None
    if t1 is None:
        return None
    c1, e1 = t1
    if t2 is not None:
        c2, e2 = t2
        if e1 == e2:
            c1 = c1 + c2
            t2 = None
        elif c2 == 0:
            t2 = None
    if c1 == 0:
        if t2 is None:
            return None
        c1, e1 = t2
        t2 = None
    if t2 is None:
        return (e1, None, ZERO)
    c2, e2 = t2
    if key(e1) < key(e2):
        c1, e1, c2, e2 = c2, e2, c1, e1
    return (e1, e2, -c2 / c1)


def _reduce_elem(f, G, key):
    lead, trail, c = f
    a = _reduce_exp(lead, G)
    if trail is None:
        return _make(a, None, key)
    b = _reduce_exp(trail, G)
    if b is not None:
        b = (-c * b[0], b[1])
    return _make(a, b, key)


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _spoly(f, g, key):
    L = _lcm(f[0], g[0])
    t1 = None
    if f[1] is not None:
        t1 = (-f[2], tuple(l - u + v for l, u, v in zip(L, f[0], f[1])))
    t2 = None
    if g[1] is not None:
        t2 = (g[2], tuple(l - u + v for l, u, v in zip(L, g[0], g[1])))
    return t1, t2


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _interreduce(G, key):
    G = sorted(set(G), key=lambda g: key(g[0]))
    minimal = []
    for g in G:
        if any(_divides(h[0], g[0]) for h in minimal):
            continue
        minimal = [h for h in minimal if not _divides(g[0], h[0])]
        minimal.append(g)
    out = []
    for g in minimal:
        if g[1] is None:
            out.append(g)
            continue
        others = [h for h in minimal if h is not g]
        b = _reduce_exp(g[1], others)
        if b is None:
            out.append((g[0], None, ZERO))
        else:
            out.append((g[0], b[1], g[2] * b[0]))
    out.sort(key=lambda g: key(g[0]), reverse=True)
    return tuple(out)


def buchberger(gens, key, base=()):
    """Reduced Groebner basis of ``base`` + ``gens``; ``base`` must be a Groebner basis."""
    nvars = None
    G = list(base)
    for g in list(base) + list(gens):
        if g is not None:
            nvars = len(g[0])
            break
    if nvars is None:
        return ()
    zero = (0,) * nvars
    for g in G:
        if g[0] == zero:
            return ((zero, None, ZERO),)
    pairs = []
    todo = [g for g in gens if g is not None]

    def add(h):
        nonlocal pairs
        hl = h[0]
        # Gebauer-Moeller style pruning of existing pairs
        kept = []
        for (i, j, L) in pairs:
            if _divides(hl, L) and _lcm(G[i][0], hl) != L and _lcm(G[j][0], hl) != L:
                continue
            kept.append((i, j, L))
        pairs = kept
        new = []
        for i, g in enumerate(G):
            if g is None:
                continue
            if g[1] is None and h[1] is None:
                continue
            L = _lcm(g[0], hl)
            if _coprime(g[0], hl):
                continue
            new.append((i, len(G), L))
        # among new pairs keep one per lcm dividing others
        new.sort(key=lambda p: key(p[2]))
        filtered = []
        for p in new:
            if any(_divides(q[2], p[2]) for q in filtered):
                continue
            filtered.append(p)
        G.append(h)
        pairs.extend(filtered)

    live = lambda: [g for g in G if g is not None]
    for f in todo:
        r = _reduce_elem(f, live(), key)
        if r is None:
            continue
        if r[0] == zero:
            return ((zero, None, ZERO),)
        add(r)
    while pairs:
        pairs.sort(key=lambda p: key(p[2]), reverse=True)
        i, j, L = pairs.pop()
        if G[i] is None or G[j] is None:
            continue
        t1, t2 = _spoly(G[i], G[j], key)
        s = _make(t1, t2, key)
        if s is None:
            continue
        r = _reduce_elem(s, live(), key)
        if r is None:
            continue
        if r[0] == zero:
            return ((zero, None, ZERO),)
        add(r)
    return _interreduce(live(), key)


# ---------------------------------------------------------------------------
# public value types


class AmbientRing:
    """Polynomial ring Q[x_1..x_n], optionally with some variables inverted.

    Inverted variables carry hidden partners y_j with x_j*y_j = 1.  Exponent
    vectors seen by callers always have length n, with negative entries
    allowed on inverted coordinates.
    """

    __slots__ = ("names", "n", "perm", "inverses", "N", "_ypos", "key", "_hash")

    def __init__(self, names: Sequence[str], perm: Sequence[int] | None = None,
                 inverses: Iterable[int] = ()):
        names = tuple(names)
        if len(names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.n = len(names)
        self.perm = tuple(perm) if perm is not None else tuple(range(self.n))
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the variable indices")
        self.inverses = tuple(sorted(set(inverses)))
        self.N = self.n + len(self.inverses)
        self._ypos = {j: self.n + k for k, j in enumerate(self.inverses)}
        if self.inverses:
            inv = set(self.inverses)
            first = [i for i in self.perm if i not in inv]
            second = [i for i in self.perm if i in inv] + [self._ypos[j] for j in self.inverses]
            self.key = block_key([first, second])
        else:
            self.key = block_key([self.perm])
        self._hash = hash((self.names, self.perm, self.inverses))

    def __eq__(self, other):
        return (isinstance(other, AmbientRing) and self.names == other.names
                and self.perm == other.perm and self.inverses == other.inverses)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        extra = f", inverses={list(self.inverses)}" if self.inverses else ""
        return f"AmbientRing({list(self.names)}{extra})"

    @property
    def order_name(self):
        return "grevlex(" + ">".join(self.names[i] for i in self.perm) + ")"

    def localized(self, J):
        return AmbientRing(self.names, self.perm, J)

    def polynomial(self):
        return AmbientRing(self.names, self.perm)

    def check_exponent(self, q):
        if len(q) != self.n:
            raise ValueError(f"exponent {q} has wrong length for {self!r}")
        inv = set(self.inverses)
        for i, x in enumerate(q):
            if x < 0 and i not in inv:
                raise ValueError(f"negative exponent on non-inverted variable {self.names[i]}")

    def to_internal(self, q):
        if not self.inverses:
            return tuple(q)
        out = list(q) + [0] * len(self.inverses)
        for j in self.inverses:
            if q[j] < 0:
                out[self._ypos[j]] = -q[j]
                out[j] = 0
        return tuple(out)

    def from_internal(self, e):
        if not self.inverses:
            return tuple(e)
        out = list(e[: self.n])
        for j in self.inverses:
            out[j] -= e[self._ypos[j]]
        return tuple(out)

    def relations(self):
        rel = []
        for j in self.inverses:
            e = [0] * self.N
            e[j] = 1
            e[self._ypos[j]] = 1
            rel.append((tuple(e), (0,) * self.N, ONE))
        return rel

    def unit_vector(self, i, k=1):
        e = [0] * self.n
        e[i] = k
        return tuple(e)

    def zero(self):
        return (0,) * self.n


class Binomial:
    """scale * (x^lead - coeff * x^trail); trail None means the monomial x^lead."""

    __slots__ = ("lead", "trail", "coeff", "scale")

    def __init__(self, lead, trail=None, coeff=1, scale=1):
        self.lead = tuple(int(x) for x in lead)
        self.trail = None if trail is None else tuple(int(x) for x in trail)
        self.coeff = Fraction(coeff) if trail is not None else ZERO
        self.scale = Fraction(scale)
        if self.trail is not None:
            if self.coeff == 0:
                self.trail = None
            elif self.trail == self.lead:
                raise ValueError("lead and trail coincide; normalise first")

    @classmethod
    def monomial(cls, q, scale=1):
        return cls(q, None, 0, scale)

    @classmethod
    def from_terms(cls, terms):
        """Build from up to two (coef, exponent) pairs; returns None for zero."""
        acc = {}
        for c, e in terms:
            e = tuple(e)
            acc[e] = acc.get(e, ZERO) + Fraction(c)
        items = [(c, e) for e, c in acc.items() if c != 0]
        if not items:
            return None
        if len(items) > 2:
            raise ValueError("more than two terms")
        items.sort(key=lambda t: glex_key(t[1]), reverse=True)
        c1, e1 = items[0]
        if len(items) == 1:
            return cls(e1, None, 0, c1)
        c2, e2 = items[1]
        return cls(e1, e2, -c2 / c1, c1)

    @property
    def is_monomial(self):
        return self.trail is None

    def terms(self):
        out = [(self.scale, self.lead)]
        if self.trail is not None:
            out.append((-self.scale * self.coeff, self.trail))
        return out

    def __eq__(self, other):
        if not isinstance(other, Binomial):
            return NotImplemented
        return sorted(self.terms()) == sorted(other.terms())

    def __hash__(self):
        return hash(tuple(sorted(self.terms())))

    def __repr__(self):
        return f"Binomial({self.terms()})"

    def shifted(self, t):
        lead = tuple(a + b for a, b in zip(self.lead, t))
        trail = None if self.trail is None else tuple(a + b for a, b in zip(self.trail, t))
        return Binomial(lead, trail, self.coeff, self.scale)


class FacePrime:
    """Monoid prime of N^n given by its set J of invertible indices."""

    __slots__ = ("n", "J")

    def __init__(self, n, J):
        self.n = n
        self.J = tuple(sorted(set(J)))
        if any(j < 0 or j >= n for j in self.J):
            raise ValueError("face index out of range")

    @classmethod
    def maximal(cls, n):
        return cls(n, ())

    @classmethod
    def empty_prime(cls, n):
        return cls(n, range(n))

    @property
    def F(self):
        """Indices of the generators of P (the variables in mm_P)."""
        js = set(self.J)
        return tuple(i for i in range(self.n) if i not in js)

    @property
    def is_empty_prime(self):
        return len(self.J) == self.n

    def __eq__(self, other):
        return isinstance(other, FacePrime) and (self.n, self.J) == (other.n, other.J)

    def __hash__(self):
        return hash((self.n, self.J))

    def __repr__(self):
        return f"FacePrime(n={self.n}, J={list(self.J)})"

    def sort_key(self):
        return (-len(self.J), self.J)


# ---------------------------------------------------------------------------
# binomial ideals


def _to_elem(ring, b: Binomial):
    lead = ring.to_internal(b.lead)
    if b.trail is None:
        if b.scale == 0:
            return None
        return (lead, None, ZERO)
    trail = ring.to_internal(b.trail)
    return _make((ONE, lead), (-b.coeff, trail), ring.key)


def _from_elem(ring, g):
    lead = ring.from_internal(g[0])
    if g[1] is None:
        return Binomial(lead)
    return Binomial(lead, ring.from_internal(g[1]), g[2])


def _shift_nonneg(ring, exps):
    """Common shift on inverted coordinates making all exponents nonnegative."""
    shift = [0] * ring.n
    for e in exps:
        for i, x in enumerate(e):
            if x < 0 and -x > shift[i]:
                shift[i] = -x
    return tuple(shift)


class BinomialIdeal:
    """An ideal generated by binomials and monomials, with a cached reduced basis."""

    __slots__ = ("ring", "gens", "_gb", "_lock", "_nf", "cache")

    def __init__(self, ring: AmbientRing, gens: Iterable[Binomial] = ()):
        self.ring = ring
        clean = []
        for g in gens:
            if g is None:
                continue
            if not isinstance(g, Binomial):
                raise TypeError("generators must be Binomial objects")
            ring.check_exponent(g.lead)
            if g.trail is not None:
                ring.check_exponent(g.trail)
            if g.scale == 0:
                continue
            clean.append(g)
        self.gens = tuple(clean)
        self._gb = None
        self._lock = threading.Lock()
        self._nf = {}
        self.cache = {}

    @classmethod
    def _from_gb(cls, ring, gb):
        obj = cls(ring, [_from_elem(ring, g) for g in gb if not _is_relation(ring, g)])
        obj._gb = tuple(gb)
        return obj

    # -- rewriting system ---------------------------------------------------

    @property
    def gb(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    elems = [_to_elem(self.ring, g) for g in self.gens]
                    self._gb = buchberger(self.ring.relations() + elems, self.ring.key)
        return self._gb

    def groebner(self):
        self.gb
        return self

    def basis(self):
        """Reduced rewriting system as Binomials (hidden inverse relations omitted)."""
        return [_from_elem(self.ring, g) for g in self.gb if not _is_relation(self.ring, g)]

    @property
    def is_unit(self):
        gb = self.gb
        return len(gb) == 1 and gb[0][1] is None and not any(gb[0][0])

    @property
    def proper(self):
        return not self.is_unit

    @property
    def is_zero(self):
        return all(_is_relation(self.ring, g) for g in self.gb)

    def __eq__(self, other):
        if not isinstance(other, BinomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gb == other.gb

    def __hash__(self):
        return hash((self.ring, self.gb))

    def __repr__(self):
        from .io_format import format_ideal

        return f"<{format_ideal(self)}>"

    # -- normal forms -------------------------------------------------------

    def nf_exp(self, q):
        """Normal form of x^q as (coef, exponent) or None when x^q lies in the ideal."""
        q = tuple(q)
        hit = self._nf.get(q, False)
        if hit is not False:
            return hit
        r = _reduce_exp(self.ring.to_internal(q), self.gb)
        if r is not None:
            r = (r[0], self.ring.from_internal(r[1]))
        self._nf[q] = r
        return r

    def normal_form(self, f: Binomial):
        parts = []
        for c, e in f.terms():
            r = self.nf_exp(e)
            if r is not None:
                parts.append((c * r[0], r[1]))
        return Binomial.from_terms(parts)

    def contains(self, f: Binomial):
        return self.normal_form(f) is None

    def contains_monomial(self, q):
        return self.nf_exp(q) is None

    # -- constructions --------------------------------------------------------

    def with_gens(self, extra):
        return BinomialIdeal(self.ring, list(self.gens) + list(extra))

    def __add__(self, other):
        if isinstance(other, BinomialIdeal):
            if other.ring != self.ring:
                raise ValueError("ideals live in different rings")
            other = other.gens
        return self.with_gens(other)

    def extend_to(self, ring):
        """Same generators over a ring with the same variables (e.g. localized)."""
        return BinomialIdeal(ring, self.gens)

    def add_monomials(self, qs):
        """Incremental sum with monomials, reusing the cached basis."""
        qs = [tuple(q) for q in qs]
        elems = [(self.ring.to_internal(q), None, ZERO) for q in qs]
        gb = buchberger(elems, self.ring.key, base=self.gb)
        return BinomialIdeal._from_gb_with(self.ring, list(self.gens) + [Binomial(q) for q in qs], gb)

    @classmethod
    def _from_gb_with(cls, ring, gens, gb):
        obj = cls(ring, gens)
        obj._gb = tuple(gb)
        return obj

    def colon(self, q):
        """(I : x^q); on inverted coordinates x^q is a unit and is ignored."""
        q = tuple(q)
        inv = set(self.ring.inverses)
        m = self.ring.to_internal(tuple(0 if i in inv else x for i, x in enumerate(q)))
        if not any(m):
            return self
        gb = _colon_internal(self.gb, m, self.ring.key, self.ring.N)
        return BinomialIdeal._from_gb(self.ring, gb)

    def saturate(self, J):
        """(I : (prod_{j in J} x_j)^infinity)."""
        J = tuple(sorted(set(J) - set(self.ring.inverses)))
        if not J:
            return self
        gb = _saturate_internal(self.gb, J, self.ring.key, self.ring.N)
        return BinomialIdeal._from_gb(self.ring, gb)

    def retract(self, F):
        """Image under x_i -> 0 for i in F (a binomial ideal again)."""
        F = set(F)
        out = []
        for g in self.gens:
            lead_dead = any(g.lead[i] > 0 for i in F)
            trail_dead = g.trail is None or any(g.trail[i] > 0 for i in F)
            if lead_dead and trail_dead:
                continue
            if lead_dead:
                out.append(Binomial(g.trail))
            elif trail_dead:
                out.append(Binomial(g.lead))
            else:
                out.append(g)
        return BinomialIdeal(self.ring, out)

    def contract(self):
        """Contraction of a Laurent-modelled ideal to the polynomial ring."""
        if not self.ring.inverses:
            return self
        poly = self.ring.polynomial()
        gens = []
        for g in self.basis():
            exps = [g.lead] + ([g.trail] if g.trail is not None else [])
            s = _shift_nonneg(self.ring, exps)
            gens.append(g.shifted(s))
        return BinomialIdeal(poly, gens).saturate(self.ring.inverses)

    def unital(self):
        """Same generators with every coefficient replaced by 1 (reduced basis first)."""
        return BinomialIdeal(self.ring, [
            Binomial(b.lead, b.trail, 1) if b.trail is not None else Binomial(b.lead)
            for b in self.basis()
        ])

    def monomial_generators(self):
        return [b.lead for b in self.basis() if b.trail is None]

    def variables_nilpotent(self, i):
        return self.saturate([i]).is_unit


def _is_relation(ring, g):
    if not ring.inverses or g[1] is None or any(g[1]):
        return False
    lead = g[0]
    nz = [k for k, x in enumerate(lead) if x]
    if len(nz) != 2:
        return False
    j, y = nz
    return lead[j] == 1 and lead[y] == 1 and ring._ypos.get(j) == y and g[2] == 1


def _tagged_key(key, N):
    def k(e):
        return (e[N],) + key(e[:N])

    return k


def _colon_internal(gb, m, key, N):
    """(G : x^m) via G ∩ <x^m> = (t*G + (1-t)*x^m) ∩ Q[x]."""
    if len(gb) == 1 and gb[0][1] is None and not any(gb[0][0]):
        return gb
    tk = _tagged_key(key, N)
    gens = []
    for g in gb:
        lead = g[0] + (1,)
        trail = None if g[1] is None else g[1] + (1,)
        gens.append((lead, trail, g[2]) if trail is not None else (lead, None, ZERO))
    mt = m + (1,)
    gens.append(_make((ONE, m + (0,)), (-ONE, mt), tk))
    big = buchberger(gens, tk)
    out = []
    for g in big:
        if g[0][N] or (g[1] is not None and g[1][N]):
            continue
        lead = tuple(a - b for a, b in zip(g[0][:N], m))
        trail = None if g[1] is None else tuple(a - b for a, b in zip(g[1][:N], m))
        if min(lead) < 0 or (trail is not None and min(trail) < 0):
            raise AssertionError("colon element not divisible by the monomial")
        out.append((lead, trail, g[2]))
    return _interreduce(out, key)


def _saturate_internal(gb, J, key, N):
    if len(gb) == 1 and gb[0][1] is None and not any(gb[0][0]):
        return gb
    tk = _tagged_key(key, N)
    gens = []
    for g in gb:
        lead = g[0] + (0,)
        trail = None if g[1] is None else g[1] + (0,)
        gens.append((lead, trail, g[2]))
    e = [0] * (N + 1)
    for j in J:
        e[j] = 1
    e[N] = 1
    gens.append((tuple(e), (0,) * (N + 1), ONE))
    big = buchberger(gens, tk)
    out = []
    for g in big:
        if g[0][N] or (g[1] is not None and g[1][N]):
            continue
        out.append((g[0][:N], None if g[1] is None else g[1][:N], g[2]))
    if not out:
        return ()
    return _interreduce(out, key)


# ---------------------------------------------------------------------------
# convenience


def groebner(I: BinomialIdeal) -> BinomialIdeal:
    return I.groebner()


def normal_form(I: BinomialIdeal, f: Binomial):
    return I.normal_form(f)


def contains(I: BinomialIdeal, f: Binomial) -> bool:
    return I.contains(f)


def contains_monomial(I: BinomialIdeal, q) -> bool:
    return I.contains_monomial(q)


def colon(I: BinomialIdeal, q) -> BinomialIdeal:
    return I.colon(q)


def saturate(I: BinomialIdeal, J) -> BinomialIdeal:
    return I.saturate(J)


def unit_ideal(ring):
    return BinomialIdeal(ring, [Binomial(ring.zero())])


def monomial_ideal(ring, qs):
    return BinomialIdeal(ring, [Binomial(q) for q in qs])
