"""The congruence on exponent vectors induced by a binomial ideal.

Two exponents are congruent when their monomials have normal forms that
are nonzero multiples of one monomial; the monomials of the ideal form the
nil class.  ``LocalView`` packages everything that depends on a face J:
the ideal with x_J inverted, stabilizers, the orbit congruence on N^F
obtained by forgetting the unit coordinates, and Green's preorder.
"""
from __future__ import annotations

from collections import deque

from . import config
from .errors import BoundExceeded, NilClass
from .lattice import Lattice, PartialCharacter
from .ring import AmbientRing, Binomial, BinomialIdeal, FacePrime


class _Nil:
    __slots__ = ()

    def __repr__(self):
        return "NIL"

    def __reduce__(self):
        return "NIL"


NIL = _Nil()


def _face_tuple(P, n):
    if isinstance(P, FacePrime):
        return P.J
    return tuple(sorted(set(P)))


def local_view(I: BinomialIdeal, J) -> "LocalView":
    """Cached view of I with the variables in J inverted."""
    J = tuple(sorted(set(J)))
    key = ("view", J)
    view = I.cache.get(key)
    if view is None:
        view = I.cache.setdefault(key, LocalView(I, J))
    return view


class LocalView:
    """I localized at the face J (x_j inverted for j in J)."""

    def __init__(self, I: BinomialIdeal, J):
        if I.ring.inverses:
            raise ValueError("local views are built from ideals in a polynomial ring")
        self.source = I
        self.n = I.ring.n
        self.J = tuple(J)
        js = set(self.J)
        self.F = tuple(i for i in range(self.n) if i not in js)
        self.ring = I.ring.localized(self.J)
        self.loc = I.extend_to(self.ring)
        self._stab = {}
        self._principal = {}
        self._orbit = None
        self._orbit_classes = {}

    # -- basic queries --------------------------------------------------------

    @property
    def proper(self):
        return self.loc.proper

    def is_nil(self, q):
        return self.loc.contains_monomial(q)

    def class_key(self, q):
        r = self.loc.nf_exp(q)
        return NIL if r is None else r[1]

    def fpart(self, q):
        return tuple(q[i] for i in self.F)

    def lift(self, f, t=None):
        """Full exponent with F-part f and J-part t (zero by default)."""
        out = [0] * self.n
        for i, x in zip(self.F, f):
            out[i] = x
        if t is not None:
            for j, x in zip(self.J, t):
                out[j] = x
        return tuple(out)

    def jpart(self, q):
        return tuple(q[j] for j in self.J)

    # -- stabilizers and characters -------------------------------------------

    def stabilizer(self, q):
        """(character on the stabilizer of q, points_into_P flag).

        Computed from (I_loc : x^q): elements free of the F variables carry
        the stabilizer and its values; an element with exactly one F-free
        term shows that the class of q absorbs some p in P.
        """
        key = self.fpart(q)
        hit = self._stab.get(key)
        if hit is not None:
            return hit
        if self.is_nil(q):
            raise NilClass(f"class of {tuple(q)} is nil at face {list(self.J)}")
        col = self.loc.colon(q)
        F = self.F
        rows, vals = [], []
        pointing = False
        for lead, trail, c in col.gb:
            lf = any(lead[i] for i in F)
            if trail is None:
                if not lf:
                    raise NilClass(f"class of {tuple(q)} is nil at face {list(self.J)}")
                continue
            tf = any(trail[i] for i in F)
            if lf and tf:
                continue
            if lf != tf:
                pointing = True
                continue
            a = self.ring.from_internal(lead)
            b = self.ring.from_internal(trail)
            rows.append(tuple(a[j] - b[j] for j in self.J))
            vals.append(c)
        ch = PartialCharacter(self.J, self.n, rows, vals)
        out = (ch, pointing)
        self._stab[key] = out
        return out

    def character(self, q):
        return self.stabilizer(q)[0]

    def points_into_p(self, q):
        return self.stabilizer(q)[1]

    def offset(self, a, b):
        """t in Z^J with a + t congruent to b (both classes in one orbit)."""
        ra, rb = self.loc.nf_exp(a), self.loc.nf_exp(b)
        if ra is None or rb is None:
            raise NilClass("offset between nil classes")
        ma, mb = ra[1], rb[1]
        if self.fpart(ma) != self.fpart(mb):
            return None
        return tuple(mb[j] - ma[j] for j in self.J)

    # -- orbit congruence on N^F -----------------------------------------------

    @property
    def orbit_ideal(self):
        """Unital ideal on N^F whose congruence is the unit-orbit relation."""
        if self._orbit is None:
            names = [self.source.ring.names[i] for i in self.F] or ["_"]
            ring = AmbientRing(names)
            gens = []
            F = self.F
            for lead, trail, c in self.loc.gb:
                lf = tuple(lead[i] for i in F)
                if trail is None:
                    gens.append(Binomial(lf))
                    continue
                tf = tuple(trail[i] for i in F)
                if lf != tf:
                    gens.append(Binomial(lf, tf, 1))
            if not F:
                gens = [Binomial((0,))] if self.loc.is_unit else []
            self._orbit = BinomialIdeal(ring, gens)
        return self._orbit

    def orbit_key(self, f):
        r = self.orbit_ideal.nf_exp(f)
        return NIL if r is None else r[1]

    def orbit_class(self, f, cap=None):
        """All members of the orbit-congruence class of f (a finite class)."""
        f = tuple(f)
        key = self.orbit_key(f)
        if key is NIL:
            raise NilClass("nil classes are not enumerated")
        hit = self._orbit_classes.get(key)
        if hit is not None:
            return hit
        cap = cap or config.max_nodes()
        moves = [(g[0], g[1]) for g in self.orbit_ideal.gb if g[1] is not None]
        seen = {key}
        todo = deque([key])
        while todo:
            m = todo.popleft()
            for u, v in moves:
                for a, b in ((u, v), (v, u)):
                    if all(x >= y for x, y in zip(m, a)):
                        nxt = tuple(x - y + z for x, y, z in zip(m, a, b))
                        if nxt not in seen:
                            seen.add(nxt)
                            todo.append(nxt)
                            if len(seen) > cap:
                                raise BoundExceeded(
                                    f"class enumeration exceeded {cap} elements")
        out = frozenset(seen)
        self._orbit_classes[key] = out
        return out

    # -- Green's preorder --------------------------------------------------------

    def principal(self, a):
        """I_loc + <x^a> with a reduced basis (cached by the F-part of a)."""
        key = self.fpart(a)
        hit = self._principal.get(key)
        if hit is None:
            hit = self.loc.add_monomials([self.lift(key)])
            self._principal[key] = hit
        return hit

    def green_leq(self, a, b):
        """a precedes b: x^b lies in I_loc + <x^a>."""
        if self.is_nil(b):
            return True
        return self.principal(a).contains_monomial(b)

    def green_key(self, a):
        """Canonical label of the Green's class of a (nil gets NIL)."""
        if self.is_nil(a):
            return NIL
        return self.principal(a).gb


# ---------------------------------------------------------------------------
# congruences


class Congruence:
    """Congruence induced by a binomial ideal."""

    def __init__(self, source: BinomialIdeal):
        self.source = source
        self.ring = source.ring
        self._nil = None
        self._canc = None

    def __repr__(self):
        return f"Congruence({self.source!r})"

    def class_key(self, q):
        r = self.source.nf_exp(q)
        return NIL if r is None else r[1]

    def is_nil(self, q):
        return self.source.contains_monomial(q)

    def are_congruent(self, a, b):
        return self.class_key(a) == self.class_key(b)

    def view(self, P):
        return local_view(self.source, _face_tuple(P, self.ring.n))

    def green_leq(self, a, b, P):
        return self.view(P).green_leq(a, b)

    def localize(self, P):
        J = _face_tuple(P, self.ring.n)
        return Congruence(self.source.extend_to(self.ring.localized(J)))

    @property
    def nil_present(self):
        if self._nil is None:
            self._nil = nil_element(self.source) is not None
        return self._nil

    @property
    def cancellative_gens(self):
        if self._canc is None:
            U = congruence_ideal(self.source)
            self._canc = tuple(i for i in range(self.ring.n)
                               if U.colon(self.ring.unit_vector(i)) == U)
        return self._canc

    def annihilator_congruence(self, T):
        T = [tuple(t) for t in T]
        if not T:
            raise ValueError("annihilator needs at least one generator")
        if len(T) == 1 and not any(T[0]):
            return self
        return DerivedCongruence(self.ring, [(self, t) for t in T])

    def taxonomy(self):
        return taxonomy(self)


class DerivedCongruence:
    """Congruence described through other congruences: a ~ b iff C(a+t) = C(b+t) for all parts."""

    def __init__(self, ring, parts):
        self.ring = ring
        self.parts = list(parts)

    def class_key(self, q):
        keys = []
        for C, t in self.parts:
            keys.append(C.class_key(tuple(a + b for a, b in zip(q, t))))
        if all(k is NIL for k in keys):
            return NIL
        return tuple(keys)

    def is_nil(self, q):
        return self.class_key(q) is NIL

    def are_congruent(self, a, b):
        return self.class_key(a) == self.class_key(b)

    def annihilator_congruence(self, T):
        return DerivedCongruence(self.ring, [(self, tuple(t)) for t in T])


def class_key(C, q):
    return C.class_key(q)


def are_congruent(C, a, b):
    return C.are_congruent(a, b)


def green_leq(C, a, b, P):
    return C.green_leq(a, b, P)


def localize(C, P):
    return C.localize(P)


def annihilator_congruence(C, T):
    return C.annihilator_congruence(T)


def common_refinement(congruences):
    congruences = list(congruences)
    ring = congruences[0].ring
    zero = (0,) * ring.n
    return DerivedCongruence(ring, [(C, zero) for C in congruences])


# ---------------------------------------------------------------------------
# nil and the unital congruence ideal


def nil_element(I: BinomialIdeal, cap=None):
    """Some exponent in the nil class, or None when the quotient has no nil."""
    n = I.ring.n
    if I.is_unit:
        return I.ring.zero()
    mons = I.monomial_generators()
    if mons:
        return min(mons, key=lambda e: (sum(e), e))
    view = local_view(I, range(n))
    if not view.proper:
        raise AssertionError("ideal without monomials saturates to the unit ideal")
    ch, _ = view.stabilizer(I.ring.zero())
    if ch.lattice != Lattice.full(n):
        return None
    cap = cap or config.max_exp()
    for k in range(1, 64 * cap + 1):
        q = (k,) * n
        base = I.nf_exp(q)[1]
        if all(I.nf_exp(tuple(x + (i == j) for j, x in enumerate(q)))[1] == base
               for i in range(n)):
            return q
    raise BoundExceeded("nil element not found within the exponent cap")


def congruence_ideal(I: BinomialIdeal) -> BinomialIdeal:
    """Unital ideal inducing the same congruence, with the nil monomials adjoined."""
    hit = I.cache.get("congruence_ideal")
    if hit is not None:
        return hit
    q = nil_element(I)
    M = I
    if q is not None and not I.contains_monomial(q):
        M = I.add_monomials([q])
    U = M.unital()
    I.cache["congruence_ideal"] = U
    return U


# ---------------------------------------------------------------------------
# taxonomy


def taxonomy(C: Congruence):
    """Flags primary / mesoprimary / primitive / prime / toric for C."""
    from .witness import associated_objects

    U = congruence_ideal(C.source)
    n = C.ring.n
    canc, nilp, nil_gen = [], [], []
    for i in range(n):
        e = C.ring.unit_vector(i)
        if U.colon(e) == U:
            canc.append(i)
        if U.saturate([i]).is_unit:
            nilp.append(i)
        if U.contains_monomial(e):
            nil_gen.append(i)
    primary = all(i in canc or i in nilp for i in range(n))
    prime = all(i in canc or i in nil_gen for i in range(n))
    face = FacePrime(n, canc)
    mesoprimary = False
    lattice_saturated = None
    if primary:
        objs = associated_objects(U)
        mesoprimary = len(objs["prime_congruences"]) == 1
        view = local_view(U, canc)
        if view.proper:
            ch = view.character(C.ring.zero())
            lattice_saturated = ch.lattice.is_saturated()
    primitive = mesoprimary and bool(lattice_saturated)
    toric = prime and bool(lattice_saturated)
    return {
        "primary": primary,
        "mesoprimary": mesoprimary,
        "primitive": primitive,
        "prime": prime,
        "toric": toric,
        "cancellative": tuple(canc),
        "nilpotent": tuple(nilp),
        "nilpotent_ideal": face if primary else None,
    }
