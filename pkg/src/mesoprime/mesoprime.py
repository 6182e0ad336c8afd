"""Mesoprimes: ideals built from a partial character on a face."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .errors import Improper, NotLaurent
from .lattice import PartialCharacter, saturated_extensions
from .ring import AmbientRing, Binomial, BinomialIdeal, FacePrime


def lattice_binomials(rho: PartialCharacter):
    """x^{l+} - rho(l) x^{l-} for each basis vector l of the domain lattice."""
    out = []
    for row, val in zip(rho.lattice.basis, rho.values):
        v = rho.embed(row)
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        out.append(Binomial(plus, minus, val))
    return out


class Mesoprime:
    """The ideal generated by the lattice binomials of a character (saturated
    at its face) together with the variables off the face."""

    __slots__ = ("ring", "character", "_ideal")

    def __init__(self, ring: AmbientRing, character: PartialCharacter):
        if character.n != ring.n:
            raise ValueError("character and ring disagree on the number of variables")
        self.ring = ring
        self.character = character
        self._ideal = None

    @property
    def face(self):
        return FacePrime(self.ring.n, self.character.face)

    @property
    def lattice(self):
        return self.character.lattice

    @property
    def ideal(self) -> BinomialIdeal:
        if self._ideal is None:
            F = self.face.F
            lat = BinomialIdeal(self.ring, lattice_binomials(self.character))
            lat = lat.saturate(self.character.face)
            self._ideal = lat.with_gens([Binomial(self.ring.unit_vector(i)) for i in F])
        return self._ideal

    def lattice_ideal(self) -> BinomialIdeal:
        """The ideal of the character alone, without the variables off the face."""
        lat = BinomialIdeal(self.ring, lattice_binomials(self.character))
        return lat.saturate(self.character.face)

    def __eq__(self, other):
        return isinstance(other, Mesoprime) and self.ring == other.ring \
            and self.character == other.character

    def __hash__(self):
        return hash((self.ring, self.character))

    def __repr__(self):
        return f"Mesoprime({self.ideal!r})"


def mesoprime_ideal(rho: PartialCharacter, ring: AmbientRing) -> Mesoprime:
    return Mesoprime(ring, rho)


def extract_character(I: BinomialIdeal, J=None) -> PartialCharacter:
    """Character rho with I = I_rho in the Laurent ring on the variables J.

    J defaults to the inverted variables of I's ring.
    """
    ring = I.ring
    if J is None:
        J = ring.inverses
    J = tuple(sorted(set(J)))
    js = set(J)
    for g in I.gens:
        for e in (g.lead, g.trail):
            if e is not None and any(x for i, x in enumerate(e) if i not in js):
                raise NotLaurent("a generator involves a variable that is not inverted")
    loc = BinomialIdeal(ring.localized(J), I.gens) if ring.inverses != J else I
    if loc.is_unit:
        raise Improper("the ideal is the unit ideal")
    rows, vals = [], []
    for lead, trail, c in loc.gb:
        if trail is None:
            raise Improper("a unit monomial lies in the ideal")
        a = loc.ring.from_internal(lead)
        b = loc.ring.from_internal(trail)
        rows.append(tuple(a[j] - b[j] for j in J))
        vals.append(c)
    return PartialCharacter(J, ring.n, rows, vals)


@dataclass
class PrimaryBundle:
    """Symbolic family of primary pieces indexed by the extensions of a character
    to the saturation of its lattice."""

    base: object
    group_invariants: list
    count: int
    fibers: list | None = field(default=None)

    @property
    def expanded(self):
        return self.fibers is not None


def primary_bundle(m: Mesoprime) -> PrimaryBundle:
    inv = m.lattice.torsion()
    return PrimaryBundle(m, inv, prod(inv) if inv else 1)


def rational_fibers(rho: PartialCharacter):
    """Characters on sat(L) extending rho when all of them are rational, else None."""
    return saturated_extensions(rho)
