"""Witnesses, key witnesses, testimony, and associated objects.

All tests run in the localization at a face J.  Writing F for the other
variables, the unit group Z^J acts on classes, and the class of an
exponent is pinned down by two pieces of data: its orbit (a class of the
orbit congruence on N^F) and a coset of its stabilizer.  A cover w+e_i has
a partner b (b+e_i ~ w+e_i, b not ~ w) exactly when

* the cover is nil, or its class absorbs some p in P (then b = w+p works
  as long as the class of w does not absorb anything itself), or
* the stabilizer grows from w to w+e_i, or
* some member of the orbit of w+e_i, stepped back along e_i, lands in a
  different orbit from w.

The last search is over a finite orbit class, so every test terminates.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import config
from .cellular import cellular_pieces, nilpotency_exponent
from .congruence import NIL, local_view
from .errors import BoundExceeded, Improper, NilClass
from .lattice import PartialCharacter, coset_intersection, extension_cover
from .mesoprime import Mesoprime
from .ring import BinomialIdeal, FacePrime, glex_key


def _face(P, n):
    if isinstance(P, FacePrime):
        return P
    return FacePrime(n, P)


@dataclass
class Cover:
    index: int
    nil: bool
    character: PartialCharacter | None = None
    pointing: bool = False
    partner: bool = False


@dataclass
class _Analysis:
    proper: bool
    character: PartialCharacter | None
    covers: list
    witness: bool


def _analyze(I: BinomialIdeal, w, J):
    view = local_view(I, J)
    w = tuple(w)
    hit = view.__dict__.setdefault("_analysis", {}).get(w)
    if hit is not None:
        return hit
    chw, pointing = view.stabilizer(w)
    if pointing:
        out = _Analysis(False, chw, [], False)
        view._analysis[w] = out
        return out
    covers = []
    for i in view.F:
        c = tuple(x + (k == i) for k, x in enumerate(w))
        if view.is_nil(c):
            covers.append(Cover(i, True, partner=True))
            continue
        chc, pt = view.stabilizer(c)
        cov = Cover(i, False, chc, pt)
        cov.partner = _cover_partner(view, w, chw, cov)
        covers.append(cov)
    witness = all(c.partner for c in covers)
    out = _Analysis(True, chw, covers, witness)
    view._analysis[w] = out
    return out


def _cover_partner(view, w, chw, cov):
    if cov.nil or cov.pointing:
        return True
    if cov.character.lattice != chw.lattice:
        return True
    wF = view.fpart(w)
    wkey = view.orbit_key(wF)
    pos = view.F.index(cov.index)
    cF = tuple(x + (k == pos) for k, x in enumerate(wF))
    for m in view.orbit_class(cF):
        if m[pos] >= 1:
            b = tuple(x - (k == pos) for k, x in enumerate(m))
            if view.orbit_key(b) != wkey:
                return True
    return False


def _bounded_class(view, f, bound):
    """Members of the orbit class of f with every coordinate at most ``bound``."""
    moves = [(g[0], g[1]) for g in view.orbit_ideal.gb if g[1] is not None]
    seen = {tuple(f)}
    todo = [tuple(f)]
    truncated = False
    while todo:
        m = todo.pop()
        for u, v in moves:
            for a, b in ((u, v), (v, u)):
                if all(x >= y for x, y in zip(m, a)):
                    nxt = tuple(x - y + z for x, y, z in zip(m, a, b))
                    if nxt in seen:
                        continue
                    if max(nxt) > bound:
                        truncated = True
                        continue
                    seen.add(nxt)
                    todo.append(nxt)
    return seen, truncated


def _key_partner(view, w, f, live, dead, chw):
    wF = view.fpart(w)
    for j in dead:
        pos = view.F.index(j)
        if view.orbit_key(tuple(x + (k == pos) for k, x in enumerate(f))) is not NIL:
            return False
    for cov in live:
        pos = view.F.index(cov.index)
        a = tuple(x + (k == pos) for k, x in enumerate(f))
        b = tuple(x + (k == pos) for k, x in enumerate(wF))
        if view.orbit_key(a) != view.orbit_key(b):
            return False
    b0 = view.lift(f)
    point, lat = None, None
    for cov in live:
        i = cov.index
        shift = tuple(x + (k == i) for k, x in enumerate(b0))
        target = tuple(x + (k == i) for k, x in enumerate(w))
        t = view.offset(shift, target)
        if t is None:
            return False
        if point is None:
            point, lat = t, cov.character.lattice
        else:
            hit = coset_intersection(point, lat, t, cov.character.lattice)
            if hit is None:
                return False
            point, lat = hit
    if view.orbit_key(f) != view.orbit_key(wF):
        return True
    tw = view.offset(b0, w)
    if lat != chw.lattice:
        return True
    return not chw.lattice.contains(tuple(a - b for a, b in zip(point, tw)))


def _key_status(I, w, J):
    an = _analyze(I, w, J)
    if not an.witness:
        return False
    view = local_view(I, J)
    live = [c for c in an.covers if not c.nil]
    dead = [c.index for c in an.covers if c.nil]
    if not live:
        return True
    wF = view.fpart(w)
    finite = [c for c in live if not c.pointing]
    if finite:
        best = None
        for c in finite:
            pos = view.F.index(c.index)
            cF = tuple(x + (k == pos) for k, x in enumerate(wF))
            members = view.orbit_class(cF)
            if best is None or len(members) < len(best[1]):
                best = (pos, members)
        pos, members = best
        cands = {tuple(x - (k == pos) for k, x in enumerate(m))
                 for m in members if m[pos] >= 1}
        return any(_key_partner(view, w, f, live, dead, an.character)
                   for f in sorted(cands, key=glex_key))
    return _key_status_pointing(view, w, live, dead, an.character)


def _key_status_pointing(view, w, live, dead, chw):
    """Every live cover has an infinite orbit class: search growing boxes."""
    wF = view.fpart(w)
    cap = config.max_exp()
    bound = max(wF, default=0) + 2
    floor = 4 * (max(wF, default=0) + _max_degree(view.orbit_ideal))
    tried = set()
    while True:
        bound = min(bound, cap)
        cands, truncated = None, False
        for c in live:
            pos = view.F.index(c.index)
            cF = tuple(x + (k == pos) for k, x in enumerate(wF))
            members, cut = _bounded_class(view, cF, bound)
            truncated = truncated or cut
            if len(members) > config.max_nodes():
                raise BoundExceeded("class enumeration exceeded the node budget")
            here = {tuple(x - (k == pos) for k, x in enumerate(m))
                    for m in members if m[pos] >= 1}
            cands = here if cands is None else cands & here
        fresh = cands - tried
        for f in sorted(fresh, key=glex_key):
            tried.add(f)
            if _key_partner(view, w, f, live, dead, chw):
                return True
        if not truncated:
            return False
        # no new candidates after doubling a box that clears the generator
        # degrees: treat the candidate set as complete
        if not fresh and bound >= floor:
            return False
        if bound >= cap:
            raise BoundExceeded(
                f"key-witness search for {w} at face {list(view.J)} hit the exponent cap {cap}")
        bound *= 2


def _max_degree(I):
    d = 1
    for lead, trail, _ in I.gb:
        d = max(d, sum(lead), sum(trail) if trail is not None else 0)
    return d


# ---------------------------------------------------------------------------
# public operations


def character_at(I: BinomialIdeal, q, P) -> Mesoprime:
    """The P-mesoprime of I at q."""
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    ch, pointing = view.stabilizer(tuple(q))
    if pointing:
        raise Improper(f"the class of {tuple(q)} absorbs an element of P; its mesoprime is improper")
    return Mesoprime(I.ring, ch)


def is_witness(I: BinomialIdeal, w, P) -> bool:
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    if view.is_nil(w):
        raise NilClass(f"class of {tuple(w)} is nil")
    if P.is_empty_prime:
        return view.proper
    return _analyze(I, w, P.J).witness


def is_key_witness(I: BinomialIdeal, w, P) -> bool:
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    if view.is_nil(w):
        raise NilClass(f"class of {tuple(w)} is nil")
    if P.is_empty_prime:
        return view.proper
    return _key_status(I, tuple(w), P.J)


def testimony(I: BinomialIdeal, w, P):
    """Proper extensions of the character at w found at its non-nil covers."""
    P = _face(P, I.ring.n)
    if P.is_empty_prime:
        return []
    an = _analyze(I, tuple(w), P.J)
    out = []
    for c in an.covers:
        if c.nil or c.pointing:
            continue
        # a cover carrying the same character adds no information
        if c.character == an.character:
            continue
        if c.character not in out:
            out.append(c.character)
    return out


def classify(I: BinomialIdeal, w, P) -> str:
    """'false' when the testimony is suspicious, else 'character'."""
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    rho = view.character(tuple(w))
    if extension_cover(rho, testimony(I, w, P), config.max_dual()):
        return "false"
    return "character"


class WitnessRecord:
    """A witness w for the face prime P with its mesoprime and flags."""

    def __init__(self, source, w, P, character, testimony, is_character):
        self.source = source
        self.w = tuple(w)
        self.P = P
        self.character = character
        self.mesoprime = Mesoprime(source.ring, character)
        self.testimony = testimony
        self.is_character = is_character
        self._key = None

    @property
    def is_false(self):
        return not self.is_character

    @property
    def is_key(self):
        if self._key is None:
            if self.P.is_empty_prime:
                self._key = True
            else:
                self._key = _key_status(self.source, self.w, self.P.J)
        return self._key

    def sort_key(self):
        return self.P.sort_key() + (glex_key(self.w),)

    def __repr__(self):
        flag = "character" if self.is_character else "false"
        return f"WitnessRecord(w={self.w}, J={list(self.P.J)}, {flag})"


def _record(I, w, P):
    view = local_view(I, P.J)
    rho = view.character(w)
    if P.is_empty_prime:
        return WitnessRecord(I, w, P, rho, [], True)
    tm = testimony(I, w, P)
    suspicious = extension_cover(rho, tm, config.max_dual())
    return WitnessRecord(I, w, P, rho, tm, not suspicious)


def _stable_colon_power(K, i, cap):
    prev = K
    for k in range(1, cap + 1):
        cur = K.colon(K.ring.unit_vector(i, k))
        if cur == prev:
            return k - 1
        prev = cur
    raise BoundExceeded(f"colon by powers of x_{i} did not stabilise within {cap}")


def witness_box(I: BinomialIdeal, J):
    """Per-variable exclusive bounds for witness candidates at the face J, or None.

    The box covers the nilpotency exponents of the cellular pieces of the
    saturation at J with that face, and one step past the power where colon
    by x_i stabilises in the localization (split choices in the cellular
    pieces can hide a witness otherwise).
    """
    n = I.ring.n
    S = I.saturate(J)
    if S.is_unit:
        return None
    cap = config.max_exp()
    view = local_view(I, J)
    F = [i for i in range(n) if i not in set(J)]
    bounds = {i: 0 for i in F}
    for K, face in cellular_pieces(S):
        if face != tuple(J):
            continue
        for i in F:
            bounds[i] = max(bounds[i], nilpotency_exponent(K, i))
    for i in F:
        bounds[i] = max(bounds[i], _stable_colon_power(view.loc, i, cap) + 1)
    return bounds


def _faces(n):
    out = []
    for size in range(n, -1, -1):
        out.extend(combinations(range(n), size))
    return out


def enumerate_witnesses(I: BinomialIdeal):
    """One record per Green's class of witnesses, in a fixed order."""
    hit = I.cache.get("witnesses")
    if hit is not None:
        return hit
    if I.is_unit:
        I.cache["witnesses"] = []
        return []
    n = I.ring.n
    records = []
    for J in _faces(n):
        P = FacePrime(n, J)
        view = local_view(I, J)
        if not view.proper:
            continue
        if P.is_empty_prime:
            records.append(_record(I, I.ring.zero(), P))
            continue
        box = witness_box(I, J)
        if box is None:
            continue
        F = P.F
        ranges = [range(box[i]) for i in F]
        total = 1
        for r in ranges:
            total *= len(r)
        if total > config.max_nodes():
            raise BoundExceeded(f"witness candidate box of size {total} exceeds the cap")
        classes = {}
        for f in sorted(product(*ranges), key=glex_key):
            w = view.lift(f)
            if view.is_nil(w):
                continue
            if not _analyze(I, w, J).witness:
                continue
            g = view.green_key(w)
            if g not in classes:
                classes[g] = w
        for w in sorted(classes.values(), key=glex_key):
            records.append(_record(I, w, P))
    records.sort(key=lambda r: r.sort_key())
    I.cache["witnesses"] = records
    return records


def associated_objects(I: BinomialIdeal):
    recs = enumerate_witnesses(I)
    primes, congs, mesos, truly = [], [], [], []
    for r in recs:
        m = r.mesoprime
        if m not in mesos:
            mesos.append(m)
        if r.is_character and m not in truly:
            truly.append(m)
        if r.is_key:
            if r.P not in primes:
                primes.append(r.P)
            pc = Mesoprime(I.ring, r.character.unital())
            if pc not in congs:
                congs.append(pc)
    return {
        "monoid_primes": primes,
        "prime_congruences": congs,
        "mesoprimes": mesos,
        "truly_associated": truly,
        "witnesses": recs,
    }
