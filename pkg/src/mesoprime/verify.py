"""Independent referee: general polynomial ideals over Q and a grid congruence closure.

Nothing here uses the binomial rewriting engine.  Polynomials are dicts
from exponent tuples to Fractions; Groebner bases are computed with a plain
Buchberger loop that only skips pairs with coprime leading monomials.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import CertificationFailed
from .io_format import format_coeff, format_monomial
from .ring import AmbientRing, Binomial, BinomialIdeal

# ---------------------------------------------------------------------------
# polynomial arithmetic


def _grevlex(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _elim(e):
    """Tag variable (last coordinate) first, then grevlex on the rest."""
    return (e[-1],) + _grevlex(e[:-1])


def _lead(f, key):
    return max(f, key=key)


def _monic(f, key):
    c = f[_lead(f, key)]
    return {e: v / c for e, v in f.items()}


def _sub_scaled(f, g, c, shift):
    """f - c * x^shift * g."""
    out = dict(f)
    for e, v in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        w = out.get(m, 0) - c * v
        if w:
            out[m] = w
        else:
            out.pop(m, None)
    return out


def _reduce(f, G, key):
    """Full reduction of f by the list G of monic polynomials."""
    leads = [(_lead(g, key), g) for g in G]
    rem = {}
    f = dict(f)
    while f:
        m = _lead(f, key)
        c = f[m]
        for lm, g in leads:
            if all(a >= b for a, b in zip(m, lm)):
                f = _sub_scaled(f, g, c, tuple(a - b for a, b in zip(m, lm)))
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _spoly(f, g, key):
    lf, lg = _lead(f, key), _lead(g, key)
    l = tuple(max(a, b) for a, b in zip(lf, lg))
    s = _sub_scaled({}, f, -1, tuple(a - b for a, b in zip(l, lf)))
    return _sub_scaled(s, g, 1, tuple(a - b for a, b in zip(l, lg)))


def groebner_basis(polys, key):
    """Reduced Groebner basis (monic, sorted) of the given polynomials."""
    G = []
    for f in polys:
        f = _reduce(f, G, key)
        if f:
            G.append(_monic(f, key))
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda p: key(tuple(max(a, b) for a, b in
                                           zip(_lead(G[p[0]], key), _lead(G[p[1]], key)))),
                   reverse=True)
        i, j = pairs.pop()
        li, lj = _lead(G[i], key), _lead(G[j], key)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        h = _reduce(_spoly(G[i], G[j], key), G, key)
        if h:
            G.append(_monic(h, key))
            k = len(G) - 1
            pairs.extend((i, k) for i in range(k))
    # minimalize and interreduce
    G = [g for g in G if g]
    keep = []
    for g in sorted(G, key=lambda g: key(_lead(g, key))):
        lg = _lead(g, key)
        if not any(all(a >= b for a, b in zip(lg, _lead(h, key))) for h in keep):
            keep.append(g)
    out = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        lg = _lead(g, key)
        tail = _reduce({e: v for e, v in g.items() if e != lg}, others, key)
        tail[lg] = Fraction(1)
        out.append(tail)
    out.sort(key=lambda g: key(_lead(g, key)))
    return out


def _freeze(G):
    return tuple(tuple(sorted(g.items())) for g in G)


def binomial_to_poly(b: Binomial):
    return {e: Fraction(c) for c, e in b.terms()}


def format_poly(names, f):
    if not f:
        return "0"
    parts = []
    for k, (e, c) in enumerate(sorted(f.items(), key=lambda t: _grevlex(t[0]), reverse=True)):
        mono = format_monomial(names, e)
        a = abs(c)
        body = format_coeff(a) if mono == "1" else (mono if a == 1 else f"{format_coeff(a)}*{mono}")
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# ideals


class GenericIdeal:
    """Ideal of Q[x_1..x_n] with arbitrary generators and a cached reduced basis."""

    def __init__(self, ring: AmbientRing, polys=()):
        self.ring = ring
        self.polys = [{e: Fraction(c) for e, c in f.items() if c} for f in polys]
        self.polys = [f for f in self.polys if f]
        self._gb = None

    @classmethod
    def from_binomial(cls, I: BinomialIdeal):
        ring = I.ring.polynomial()
        if I.ring.inverses:
            I = I.contract()
        return cls(ring, [binomial_to_poly(g) for g in I.gens])

    @property
    def gb(self):
        if self._gb is None:
            self._gb = groebner_basis(self.polys, _grevlex)
        return self._gb

    @property
    def is_unit(self):
        return any(set(g) == {(0,) * self.ring.n} for g in self.gb)

    def reduce(self, f):
        return _reduce(f, self.gb, _grevlex)

    def contains(self, f):
        return not self.reduce(f)

    def __eq__(self, other):
        if not isinstance(other, GenericIdeal):
            return NotImplemented
        return self.ring == other.ring and _freeze(self.gb) == _freeze(other.gb)

    def __hash__(self):
        return hash(_freeze(self.gb))

    def __repr__(self):
        return "<" + ", ".join(format_poly(self.ring.names, g) for g in self.gb) + ">"

    def generator_strings(self):
        return [format_poly(self.ring.names, g) for g in self.gb]


def _as_generic(A):
    return GenericIdeal.from_binomial(A) if isinstance(A, BinomialIdeal) else A


def _intersect2(A: GenericIdeal, B: GenericIdeal) -> GenericIdeal:
    """(t*A + (1 - t)*B) eliminated by t."""
    polys = []
    for f in A.gb:
        polys.append({e + (1,): c for e, c in f.items()})
    for g in B.gb:
        h = {e + (0,): c for e, c in g.items()}
        for e, c in g.items():
            h[e + (1,)] = h.get(e + (1,), 0) - c
        polys.append(h)
    G = groebner_basis(polys, _elim)
    kept = [{e[:-1]: c for e, c in g.items()} for g in G if all(e[-1] == 0 for e in g)]
    out = GenericIdeal(A.ring, kept)
    out._gb = groebner_basis(kept, _grevlex)
    return out


def intersect(ideals) -> GenericIdeal:
    ideals = [_as_generic(A) for A in ideals]
    if not ideals:
        raise ValueError("nothing to intersect")
    ring = ideals[0].ring
    if any(A.ring != ring for A in ideals):
        raise ValueError("ideals live in different rings")
    acc = ideals[0]
    for B in ideals[1:]:
        if acc.is_unit:
            acc = B
            continue
        if B.is_unit:
            continue
        acc = _intersect2(acc, B)
    return acc


def equal(A, B) -> bool:
    return _as_generic(A) == _as_generic(B)


def separator(A, B):
    """A polynomial in one ideal but not the other, or None when equal."""
    A, B = _as_generic(A), _as_generic(B)
    for g in A.gb:
        if not B.contains(g):
            return g
    for g in B.gb:
        if not A.contains(g):
            return g
    return None


# ---------------------------------------------------------------------------
# grid congruence closure


@dataclass
class GridPartition:
    """Classes of {0..D}^n under in-grid generator shifts.

    ``ratio[p]`` is the scalar r with x^p = r x^root(p) in the quotient.
    """

    n: int
    bound: int
    root: dict
    ratio: dict
    nil_set: set
    margin: int = 0
    classes: dict = field(default_factory=dict)

    def points(self):
        return list(self.root)

    def interior(self):
        top = self.bound - self.margin
        return [p for p in self.root if max(p, default=0) <= top]

    def same(self, a, b):
        a, b = tuple(a), tuple(b)
        if a in self.nil_set or b in self.nil_set:
            return a in self.nil_set and b in self.nil_set
        return self.root[a] == self.root[b]

    def class_of(self, p):
        p = tuple(p)
        return None if p in self.nil_set else self.root[p]


def _find(parent, ratio, p):
    """Root of p with path compression; ratio[p] becomes relative to the root."""
    path = []
    while parent[p] != p:
        path.append(p)
        p = parent[p]
    root = p
    acc = Fraction(1)
    for q in reversed(path):
        acc = acc * ratio[q]
        ratio[q] = acc
        parent[q] = root
    return root


def grid_oracle(gens, D, n=None) -> GridPartition:
    """Congruence closure of the generators on {0..D}^n."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("the number of variables is needed without generators")
        n = len(gens[0].lead)
    pts = list(product(range(D + 1), repeat=n))
    parent = {p: p for p in pts}
    ratio = {p: Fraction(1) for p in pts}
    nil = set()
    bad_roots = set()
    rules = []
    for g in gens:
        terms = g.terms()
        if len(terms) == 1:
            rules.append((terms[0][1], None, None))
        else:
            (c1, a), (c2, b) = terms
            rules.append((a, b, -c2 / c1))  # x^a = lam x^b
    maxdeg = 0
    for a, b, _ in rules:
        maxdeg = max([maxdeg] + list(a) + (list(b) if b else []))

    def union(a, b, lam):
        ra, rb = _find(parent, ratio, a), _find(parent, ratio, b)
        # x^a = ratio[a] x^ra, x^b = ratio[b] x^rb, x^a = lam x^b
        if ra == rb:
            if ratio[a] != lam * ratio[b]:
                bad_roots.add(ra)
            return
        # attach ra under rb: x^ra = (lam ratio[b] / ratio[a]) x^rb
        parent[ra] = rb
        ratio[ra] = lam * ratio[b] / ratio[a]
        if ra in bad_roots:
            bad_roots.discard(ra)
            bad_roots.add(rb)

    for a, b, lam in rules:
        for u in pts:
            pa = tuple(x + y for x, y in zip(a, u))
            if max(pa, default=0) > D:
                continue
            if b is None:
                nil.add(pa)
                continue
            pb = tuple(x + y for x, y in zip(b, u))
            if max(pb, default=0) > D:
                continue
            union(pa, pb, lam)

    # nil classes: conflicting ratios, explicit monomials, and upward closure
    changed = True
    while changed:
        changed = False
        dead_roots = set(bad_roots)
        for p in nil:
            dead_roots.add(_find(parent, ratio, p))
        for p in pts:
            if p not in nil and _find(parent, ratio, p) in dead_roots:
                nil.add(p)
                changed = True
        for p in list(nil):
            for i in range(n):
                if p[i] < D:
                    q = p[:i] + (p[i] + 1,) + p[i + 1:]
                    if q not in nil:
                        nil.add(q)
                        changed = True
    root = {p: _find(parent, ratio, p) for p in pts}
    classes = {}
    for p in pts:
        if p not in nil:
            classes.setdefault(root[p], []).append(p)
    return GridPartition(n, D, root, dict(ratio), nil, maxdeg, classes)


def nf_agrees(I: BinomialIdeal, part: GridPartition):
    """First interior pair where normal forms and the grid closure disagree, or None."""
    pts = part.interior()
    by_class = {}
    for p in pts:
        r = I.nf_exp(p)
        if (r is None) != (p in part.nil_set):
            return (p, p)
        if r is None:
            continue
        by_class.setdefault(r[1], []).append((p, r[0]))
    seen_roots = {}
    for key, items in by_class.items():
        p0, c0 = items[0]
        for p, c in items[1:]:
            if not part.same(p, p0):
                return (p0, p)
            # x^p = c x^key, x^p0 = c0 x^key
            if part.ratio[p] / part.ratio[p0] != c / c0:
                return (p0, p)
        root = part.root[p0]
        if root in seen_roots:
            return (seen_roots[root], p0)
        seen_roots[root] = p0
    return None


# ---------------------------------------------------------------------------
# certification


@dataclass
class Report:
    verdict: str
    checks: list

    def as_dict(self):
        return {"verdict": self.verdict, "checks": list(self.checks)}


def _refinement_pair(parts, source, pts):
    """First pair of grid points where the source partition and the common
    refinement of the component partitions disagree."""
    def sig(p):
        keys = tuple(P.class_of(p) for P in parts)
        return None if all(k is None for k in keys) else keys

    fwd, back = {}, {}
    for p in pts:
        s, t = sig(p), source.class_of(p)
        if (s is None) != (t is None):
            return (p, p)
        if s is None:
            continue
        if fwd.setdefault(s, (t, p))[0] != t:
            return (fwd[s][1], p)
        if back.setdefault(t, (s, p))[0] != s:
            return (back[t][1], p)
    return None


def certify(D, grid=None) -> Report:
    """Check a decomposition; raises CertificationFailed with a separator."""
    I = D.source
    comps = [c.ideal for c in D.components]
    checks = []
    if not comps:
        raise CertificationFailed("decomposition has no components")
    if D.mode == "congruence":
        from .congruence import congruence_ideal

        U = congruence_ideal(I)
        bound = grid or max(6, 2 + _max_degree(list(U.gens) + [g for c in comps for g in c.gens]))
        n = I.ring.n
        src = grid_oracle(U.gens, bound, n)
        parts = [grid_oracle(c.gens, bound, n) for c in comps]
        margin = max([src.margin] + [p.margin for p in parts])
        top = bound - margin
        pts = [p for p in src.points() if max(p, default=0) <= top]
        bad = _refinement_pair(parts, src, pts)
        if bad is not None:
            raise CertificationFailed(
                f"common refinement differs from the source congruence at {bad[0]} ~ {bad[1]}",
                bad)
        checks.append(f"common refinement equals the source congruence on [0,{top}]^{n}")
        return Report("pass", checks)
    for k, C in enumerate(comps):
        for g in I.gens:
            if not C.contains(g):
                raise CertificationFailed(f"component {k} misses a generator of the source",
                                          binomial_to_poly(g))
    checks.append("every component contains the source")
    meet = intersect(comps)
    src = GenericIdeal.from_binomial(I)
    sep = separator(meet, src)
    if sep is not None:
        raise CertificationFailed(
            "intersection of the components differs from the source: "
            + format_poly(I.ring.names, sep), sep)
    checks.append("intersection of the components equals the source")
    return Report("pass", checks)


def _max_degree(gens):
    top = 0
    for g in gens:
        for _, e in g.terms():
            top = max([top] + list(e))
    return top
