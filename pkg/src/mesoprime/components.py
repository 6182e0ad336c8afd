"""Order ideals, cogenerated monomial ideals and the components built from them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from . import config
from .congruence import local_view
from .errors import BoundExceeded, MixedMesoprimes
from .mesoprime import Mesoprime, lattice_binomials
from .ring import Binomial, BinomialIdeal, FacePrime, glex_key


def _face(P, n):
    return P if isinstance(P, FacePrime) else FacePrime(n, P)


def _source(C):
    """Accept either a binomial ideal or a congruence built from one."""
    return getattr(C, "source", C)


class OrderIdeal:
    """Exponents whose image precedes q in the localized quotient modulo Green's relation."""

    def __init__(self, I: BinomialIdeal, q, P):
        self.source = I
        self.q = tuple(q)
        self.P = _face(P, I.ring.n)
        self.view = local_view(I, self.P.J)

    def __contains__(self, a):
        return self.view.green_leq(tuple(a), self.q)

    def classes(self):
        """One representative (F-support only) per Green's class below q."""
        reps, _ = _explore(self.view, [self.q])
        return reps


def order_ideal(C, q, P) -> OrderIdeal:
    return OrderIdeal(_source(C), q, P)


def _explore(view, ww):
    """Breadth-first walk over N^F from 0 through the union of the order ideals of ww.

    Returns (inside representatives, minimal outside exponents).  Children that
    are Green's equivalent to a visited node are skipped: Green's equivalence is
    a congruence, so their subtrees repeat.
    """
    n = view.n
    F = view.F
    zero = (0,) * n
    cap = config.max_nodes()
    inside = []
    outside = []
    seen = set()

    def is_in(a):
        return any(view.green_leq(a, w) for w in ww)

    if not is_in(zero):
        return [], [zero]
    seen.add(view.green_key(zero))
    inside.append(zero)
    todo = deque([zero])
    visited = {zero}
    while todo:
        a = todo.popleft()
        for i in F:
            c = tuple(x + (k == i) for k, x in enumerate(a))
            if c in visited:
                continue
            visited.add(c)
            if not is_in(c):
                outside.append(c)
                continue
            g = view.green_key(c)
            if g in seen:
                continue
            seen.add(g)
            inside.append(c)
            todo.append(c)
            if len(visited) > cap:
                raise BoundExceeded("order-ideal exploration exceeded the node budget")
    return inside, _minimal(outside)


def _minimal(exps):
    exps = sorted(set(exps), key=glex_key)
    out = []
    for e in exps:
        if not any(all(x >= y for x, y in zip(e, g)) for g in out):
            out.append(e)
    return out


def _down_closure(points):
    out = set()
    todo = list(points)
    while todo:
        p = todo.pop()
        if p in out:
            continue
        out.add(p)
        for k, x in enumerate(p):
            if x:
                todo.append(p[:k] + (x - 1,) + p[k + 1:])
    return out


class _Cogenerated:
    """Finite description of the order ideals of non-pointing cogenerators.

    a precedes w exactly when a_F + u lies in the (finite) orbit class of w_F
    for some u, so each order ideal is the down-closure of that class.
    """

    def __init__(self, view, ww):
        self.view = view
        self.ww = ww
        self.orbits = []
        self.inside = []
        for w in ww:
            if view.points_into_p(w):
                raise ValueError("cogenerators must not absorb elements of P")
            orb = sorted(view.orbit_class(view.fpart(w)), key=glex_key)
            self.orbits.append(orb)
            self.inside.append(_down_closure(orb))
        self.union = set().union(*self.inside)

    def monomial_generators(self):
        outside = []
        for a in self.union:
            for k in range(len(a)):
                c = a[:k] + (a[k] + 1,) + a[k + 1:]
                if c not in self.union:
                    outside.append(c)
        if not self.union:
            outside.append(tuple(0 for _ in self.view.F))
        return [self.view.lift(f) for f in _minimal(outside)]

    def _valid(self, k, a, b, lam):
        """x^a - lam x^b is joined under the coprincipal congruence of ww[k]."""
        view = self.view
        aF = view.fpart(a)
        for m in self.orbits[k]:
            if not all(x >= y for x, y in zip(m, aF)):
                continue
            u = view.lift(tuple(x - y for x, y in zip(m, aF)))
            ra = view.loc.nf_exp(tuple(x + y for x, y in zip(a, u)))
            rb = view.loc.nf_exp(tuple(x + y for x, y in zip(b, u)))
            if ra is None or rb is None:
                continue
            if ra[1] == rb[1] and ra[0] == lam * rb[0]:
                return True
        return False

    def joins(self):
        """Binomials x^a - lam x^b identified by the common refinement of the
        coprincipal congruences (beyond the stabilizer, which I_rho supplies)."""
        view = self.view
        out = []
        for aF in sorted(self.union, key=glex_key):
            ins = [k for k in range(len(self.ww)) if aF in self.inside[k]]
            outs = [k for k in range(len(self.ww)) if aF not in self.inside[k]]
            first = ins[0]
            a = view.lift(aF)
            done = set()
            orb = self.orbits[first]
            for m in orb:
                if not all(x >= y for x, y in zip(m, aF)):
                    continue
                uF = tuple(x - y for x, y in zip(m, aF))
                u = view.lift(uF)
                for m2 in orb:
                    if not all(x >= y for x, y in zip(m2, uF)):
                        continue
                    bF = tuple(x - y for x, y in zip(m2, uF))
                    if bF == aF or bF in done:
                        continue
                    if any(bF in self.inside[k] for k in outs):
                        continue
                    if any(bF not in self.inside[k] for k in ins):
                        continue
                    b0 = view.lift(bF)
                    t = view.offset(tuple(x + y for x, y in zip(b0, u)),
                                    tuple(x + y for x, y in zip(a, u)))
                    if t is None:
                        continue
                    b = view.lift(bF, t)
                    ra = view.loc.nf_exp(tuple(x + y for x, y in zip(a, u)))
                    rb = view.loc.nf_exp(tuple(x + y for x, y in zip(b, u)))
                    lam = ra[0] / rb[0]
                    if all(self._valid(k, a, b, lam) for k in ins[1:]):
                        done.add(bF)
                        out.append(_laurent_binomial(a, b, lam))
        return out


def _laurent_binomial(a, b, lam):
    """x^a - lam x^b with both exponents shifted to be nonnegative."""
    shift = [max(0, -x, -y) for x, y in zip(a, b)]
    a = tuple(x + s for x, s in zip(a, shift))
    b = tuple(x + s for x, s in zip(b, shift))
    return Binomial.from_terms([(1, a), (-lam, b)])


def _pointing_free(view, ww):
    return all(not view.points_into_p(w) for w in ww)


def monomial_cogenerated(I: BinomialIdeal, ww, P) -> BinomialIdeal:
    """Monomial ideal of exponents lying outside every order ideal of ww."""
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    ww = [tuple(w) for w in ww]
    if all(not view.is_nil(w) for w in ww) and _pointing_free(view, ww):
        gens = _Cogenerated(view, ww).monomial_generators()
    else:
        _, gens = _explore(view, ww)
    return BinomialIdeal(I.ring, [Binomial(g) for g in gens])


@dataclass
class Component:
    ideal: BinomialIdeal
    kind: str
    cogenerators: list
    mesoprime: Mesoprime
    face: FacePrime
    witnesses: list = field(default_factory=list)

    @property
    def coprincipal(self):
        return self.kind == "coprincipal"


def mesoprimary_component(I: BinomialIdeal, ww, P, witnesses=None, *, identify=False) -> Component:
    """Contraction of I_P + I_rho + M_ww^P(I) to the polynomial ring.

    With ``identify`` the pairs that the coprincipal congruences of ww join
    inside the order ideal (a + u and b + u both landing on w) are added as
    binomials, so the result induces the common refinement of those
    congruences; this is the congruence-level component.
    """
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    ww = [tuple(w) for w in ww]
    if not ww:
        raise ValueError("at least one cogenerator is needed")
    rho = view.character(ww[0])
    for w in ww[1:]:
        if view.character(w) != rho:
            raise MixedMesoprimes("cogenerators carry different mesoprimes")
    data = _Cogenerated(view, ww)
    gens = list(I.gens) + lattice_binomials(rho)
    gens += [Binomial(g) for g in data.monomial_generators()]
    if identify:
        gens += [g for g in data.joins() if g is not None]
    W = BinomialIdeal(I.ring, gens).saturate(P.J)
    kind = "coprincipal" if len(ww) == 1 else "mesoprimary"
    return Component(W, kind, ww, Mesoprime(I.ring, rho), P, list(witnesses or []))


def coprincipal_congruence_component(C, q, P) -> Component:
    """Unital ideal inducing the coprincipal congruence cogenerated by q along P."""
    from .congruence import congruence_ideal

    U = congruence_ideal(_source(C))
    return mesoprimary_component(U, [q], P, identify=True)


def coprincipal_component(I: BinomialIdeal, w, P, witness=None) -> Component:
    return mesoprimary_component(I, [w], P, [witness] if witness is not None else None)


def p_socle_contains(I: BinomialIdeal, q, P) -> bool:
    """x^q is a nonzero element of the saturation at P killed by every variable of m_P."""
    P = _face(P, I.ring.n)
    S = I.saturate(P.J)
    q = tuple(q)
    if S.contains_monomial(q):
        return False
    return all(S.contains_monomial(tuple(x + (k == i) for k, x in enumerate(q))) for i in P.F)


# ---------------------------------------------------------------------------
# binomial localization


def _search_bounds(view):
    """Per-variable exclusive bounds for minimal generators of the monomial ideals below."""
    cap = config.max_exp()
    out = {}
    for i in view.F:
        top = 0
        for lead, trail, _ in view.loc.gb:
            a = view.ring.from_internal(lead)
            top = max(top, a[i])
            if trail is not None:
                top = max(top, view.ring.from_internal(trail)[i])
        prev = view.loc
        stable = 0
        for k in range(1, cap + 1):
            cur = view.loc.colon(view.ring.unit_vector(i, k))
            if cur == prev:
                stable = k - 1
                break
            prev = cur
        else:
            raise BoundExceeded(f"colon by powers of x_{i} did not stabilise within {cap}")
        out[i] = max(top, stable + 1) + 1
    return out


def _monomial_search(view, pred):
    """Minimal exponents (J-part zero) in the search box satisfying pred."""
    bounds = _search_bounds(view)
    F = view.F
    total = 1
    for i in F:
        total *= bounds[i]
    if total > config.max_nodes():
        raise BoundExceeded(f"monomial search box of size {total} exceeds the cap")
    found = []
    for f in sorted(product(*(range(bounds[i]) for i in F)), key=glex_key):
        q = view.lift(f)
        if any(all(x >= y for x, y in zip(q, g)) for g in found):
            continue
        if view.is_nil(q):
            continue
        if pred(q):
            found.append(q)
    return found


def infinite_ideal(I: BinomialIdeal, P) -> BinomialIdeal:
    """Monomials whose class absorbs some element of P in the localization."""
    P = _face(P, I.ring.n)
    view = local_view(I, P.J)
    if not view.proper or not P.F:
        return BinomialIdeal(I.ring, [])
    gens = _monomial_search(view, view.points_into_p)
    return BinomialIdeal(I.ring, [Binomial(g) for g in gens])


def _restricts(rho, sigma):
    """sigma is a restriction of rho: its lattice sits inside rho's and values agree."""
    if not rho.lattice.includes(sigma.lattice):
        return False
    return all(rho(row) == val for row, val in zip(sigma.lattice.basis, sigma.values))


def incommensurate_ideal(I: BinomialIdeal, m: Mesoprime) -> BinomialIdeal:
    """Monomials whose character is not a restriction of the character of m."""
    P = m.face
    view = local_view(I, P.J)
    if not view.proper:
        return BinomialIdeal(I.ring, [])
    rho = m.character
    gens = _monomial_search(view, lambda q: not _restricts(rho, view.character(q)))
    return BinomialIdeal(I.ring, [Binomial(g) for g in gens])


def binomial_localization(I: BinomialIdeal, m: Mesoprime) -> BinomialIdeal:
    extra = infinite_ideal(I, m.face).gens + incommensurate_ideal(I, m).gens
    return I.add_monomials([g.lead for g in extra]) if extra else I
