"""Decomposition drivers, ideal taxonomy and the nil/augmentation analysis."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .cellular import cellular_pieces, is_cellular
from .components import (Component, coprincipal_component, coprincipal_congruence_component,
                         mesoprimary_component)
from .congruence import Congruence, congruence_ideal, local_view, nil_element
from .errors import NoAugmentation
from .mesoprime import Mesoprime, PrimaryBundle, rational_fibers
from .ring import Binomial, BinomialIdeal, FacePrime
from .verify import certify as _certify
from .verify import equal, intersect
from .witness import associated_objects, enumerate_witnesses

MODES = ("coprincipal", "mesoprimary", "characteristic", "cellular", "congruence")


@dataclass
class Decomposition:
    source: BinomialIdeal
    mode: str
    components: list
    certificate: object = None
    redundant: list = field(default_factory=list)

    def ideals(self):
        return [c.ideal for c in self.components]

    def __len__(self):
        return len(self.components)


def _finish(I, mode, comps, check):
    D = Decomposition(I, mode, _dedupe(comps))
    if check:
        D.certificate = _certify(D)
    return D


def _dedupe(comps):
    out = []
    for c in comps:
        for d in out:
            if d.ideal == c.ideal:
                d.witnesses.extend(w for w in c.witnesses if w not in d.witnesses)
                break
        else:
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# nil and augmentation


@dataclass
class AugmentationSplit:
    source: BinomialIdeal
    maximal: BinomialIdeal
    augmentation: BinomialIdeal | None = None
    lambda_map: dict = field(default_factory=dict)

    @property
    def chain_length(self):
        return 0 if self.augmentation is None else 1


def maximalize(I: BinomialIdeal) -> AugmentationSplit:
    """Top of the chain of binomial ideals inducing the congruence of I.

    When the quotient has a nil whose monomials I lacks, the nil monomial is
    adjoined, and I is recovered as its intersection with the augmentation
    ideal <x_i - lambda_i> read off from x_i x^q = lambda_i x^q mod I.
    When the congruence is universal the nil class is everything and the
    top of the chain is the unit ideal.
    """
    if I.is_unit:
        return AugmentationSplit(I, I)
    q = nil_element(I)
    if q is None or I.contains_monomial(q):
        return AugmentationSplit(I, I)
    M = I.add_monomials([q])
    c0, e0 = I.nf_exp(q)
    lam = {}
    for i in range(I.ring.n):
        r = I.nf_exp(tuple(x + (k == i) for k, x in enumerate(q)))
        if r is None or r[1] != e0:
            raise NoAugmentation("the nil class is not stable under the variables")
        lam[i] = r[0] / c0
    aug = BinomialIdeal(I.ring, [Binomial.from_terms([(1, I.ring.unit_vector(i)),
                                                      (-lam[i], I.ring.zero())])
                                 for i in range(I.ring.n)])
    if not equal(intersect([M, aug]), I):
        raise NoAugmentation("no augmentation ideal recovers the source")
    return AugmentationSplit(I, M, aug, lam)


# ---------------------------------------------------------------------------
# taxonomy


def _is_mesoprime(I: BinomialIdeal) -> bool:
    if I.is_unit:
        return False
    n = I.ring.n
    F = [i for i in range(n) if I.contains_monomial(I.ring.unit_vector(i))]
    J = [i for i in range(n) if i not in F]
    view = local_view(I, J)
    if not view.proper:
        return False
    ch, pointing = view.stabilizer(I.ring.zero())
    if pointing:
        return False
    return Mesoprime(I.ring, ch).ideal == I


def ideal_taxonomy(I: BinomialIdeal) -> dict:
    if I.is_unit:
        return {"cellular": False, "mesoprimary": False, "mesoprime": False, "maximal": True}
    meso = associated_objects(I)["mesoprimes"]
    return {
        "cellular": is_cellular(I),
        "mesoprimary": len(meso) == 1,
        "mesoprime": _is_mesoprime(I),
        "maximal": maximalize(I).augmentation is None,
    }


# ---------------------------------------------------------------------------
# drivers


def _component_for(I, rec):
    return coprincipal_component(I, rec.w, rec.P, rec)


def cellular_decomposition(I: BinomialIdeal, certify=True) -> Decomposition:
    comps = []
    n = I.ring.n
    for K, face in cellular_pieces(I):
        comps.append(Component(K, "cellular", [], None, FacePrime(n, face), []))
    return _finish(I, "cellular", comps, certify)


def coprincipal_decomposition(I: BinomialIdeal, certify=True) -> Decomposition:
    """One coprincipal component per witness class."""
    comps = [_component_for(I, r) for r in enumerate_witnesses(I)]
    return _finish(I, "coprincipal", comps, certify)


def characteristic_decomposition(I: BinomialIdeal, certify=True) -> Decomposition:
    """Coprincipal components at the character witnesses only."""
    comps = [_component_for(I, r) for r in enumerate_witnesses(I) if r.is_character]
    return _finish(I, "characteristic", comps, certify)


def mesoprimary_decomposition(I: BinomialIdeal, certify=True) -> Decomposition:
    """One component per truly associated mesoprime."""
    groups = {}
    for r in enumerate_witnesses(I):
        if r.is_character:
            groups.setdefault((r.P, r.character), []).append(r)
    comps = []
    for (P, _), recs in groups.items():
        comps.append(mesoprimary_component(I, [r.w for r in recs], P, recs))
    return _finish(I, "mesoprimary", comps, certify)


def congruence_decomposition(C, certify=True, flag=True) -> Decomposition:
    """Coprincipal congruences at the key witnesses of the congruence of C."""
    C = C if isinstance(C, Congruence) else Congruence(C)
    U = congruence_ideal(C.source)
    comps = []
    for r in enumerate_witnesses(U):
        if r.is_key:
            comp = coprincipal_congruence_component(U, r.w, r.P)
            comp.witnesses = [r]
            comps.append(comp)
    D = Decomposition(C.source, "congruence", _dedupe(comps))
    if certify:
        D.certificate = _certify(D)
    if flag:
        D.redundant = redundant_components(D)
    return D


def decompose(I: BinomialIdeal, mode="mesoprimary", certify=True) -> Decomposition:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return {
        "coprincipal": coprincipal_decomposition,
        "mesoprimary": mesoprimary_decomposition,
        "characteristic": characteristic_decomposition,
        "cellular": cellular_decomposition,
        "congruence": congruence_decomposition,
    }[mode](I, certify=certify)


def redundant_components(D: Decomposition) -> list:
    """Indices of components whose removal alone keeps the certificate valid."""
    from .errors import CertificationFailed

    out = []
    for k in range(len(D.components)):
        rest = D.components[:k] + D.components[k + 1:]
        if not rest:
            continue
        try:
            _certify(Decomposition(D.source, D.mode, rest))
        except CertificationFailed:
            continue
        out.append(k)
    return out


# ---------------------------------------------------------------------------
# primary and irreducible recovery


def _fiber_ideal(comp, sigma):
    return comp.ideal + Mesoprime(comp.ideal.ring, sigma).lattice_ideal()


def component_bundle(comp: Component) -> PrimaryBundle:
    m = comp.mesoprime
    inv = m.lattice.torsion()
    count = prod(inv) if inv else 1
    if count == 1:
        return PrimaryBundle(m, inv, 1, [comp.ideal])
    sigmas = rational_fibers(m.character)
    fibers = None if sigmas is None else [_fiber_ideal(comp, s) for s in sigmas]
    return PrimaryBundle(m, inv, count, fibers)


def primary_bundles(D: Decomposition) -> list:
    """(component, bundle) pairs; rational fibers are primary ideals."""
    return [(c, component_bundle(c)) for c in D.components if c.mesoprime is not None]


def irreducible_bundles(I: BinomialIdeal) -> list:
    return primary_bundles(coprincipal_decomposition(I))


def _prune(ideals):
    """Drop duplicates and ideals containing another one."""
    uniq = []
    for A in ideals:
        if not any(A == B for B in uniq):
            uniq.append(A)

    def contains(A, B):
        return all(A.contains(g) for g in B.gens)

    return [A for A in uniq if not any(B is not A and contains(A, B) for B in uniq)]


def primary_expansion(D: Decomposition, prune=True):
    """Rational primary ideals from the bundles of D, or None if one stays symbolic."""
    out = []
    for _, b in primary_bundles(D):
        if b.fibers is None:
            return None
        out.extend(b.fibers)
    return _prune(out) if prune else out


@dataclass
class PrimeBundle:
    mesoprime: Mesoprime
    saturated_lattice: object
    invariants: list
    primes: list | None
    exact: bool
    witnesses: list = field(default_factory=list)


def associated_primes_symbolic(I: BinomialIdeal) -> list:
    """Minimal primes over each associated mesoprime.

    ``exact`` is True for cellular I, where these are exactly the associated
    primes; otherwise the list is a superset tagged with its witnesses.
    """
    exact = is_cellular(I)
    groups = {}
    for r in enumerate_witnesses(I):
        groups.setdefault(r.mesoprime, []).append(r)
    out = []
    for m, recs in groups.items():
        sigmas = rational_fibers(m.character)
        primes = None if sigmas is None else [Mesoprime(I.ring, s) for s in sigmas]
        out.append(PrimeBundle(m, m.lattice.saturation(), m.lattice.torsion(), primes,
                               exact, recs))
    return out
