"""Canonical text for exponents, binomials, ideals and characters."""
from __future__ import annotations

from fractions import Fraction

from .ring import Binomial, BinomialIdeal, glex_key


def format_coeff(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(names, e) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def _term(names, c, e, first):
    mono = format_monomial(names, e)
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if mono == "1":
        body = format_coeff(a)
    elif a == 1:
        body = mono
    else:
        body = f"{format_coeff(a)}*{mono}"
    if first:
        return ("-" if c < 0 else "") + body
    return f" {sign} {body}"


def canonical_terms(b: Binomial):
    """Terms sorted graded-lex descending with the leading coefficient scaled to 1."""
    terms = sorted(b.terms(), key=lambda t: glex_key(t[1]), reverse=True)
    lead = terms[0][0]
    return [(c / lead, e) for c, e in terms]


def format_binomial(names, b: Binomial) -> str:
    terms = canonical_terms(b)
    return "".join(_term(names, c, e, i == 0) for i, (c, e) in enumerate(terms))


def sort_key(b: Binomial):
    terms = canonical_terms(b)
    return tuple((glex_key(e), c) for c, e in terms)


def canonical_generators(I: BinomialIdeal):
    """Reduced basis in the polynomial ring, sorted for stable printing."""
    gens = I.basis()
    return sorted(gens, key=sort_key)


def format_ideal(I: BinomialIdeal) -> str:
    if I.is_unit:
        return "<1>"
    gens = canonical_generators(I)
    if not gens:
        return "<0>"
    names = I.ring.names
    return "<" + ", ".join(format_binomial(names, g) for g in gens) + ">"


def ideal_strings(I: BinomialIdeal):
    if I.is_unit:
        return ["1"]
    return [format_binomial(I.ring.names, g) for g in canonical_generators(I)]


def format_exponent(names, e) -> str:
    return format_monomial(names, e)


def format_face(names, J):
    return "{" + ", ".join(names[j] for j in J) + "}"


# ---------------------------------------------------------------------------
# structured output


def character_dict(names, rho):
    return {
        "face": [names[j] for j in rho.face],
        "lattice": [list(r) for r in rho.lattice.basis],
        "values": [format_coeff(v) for v in rho.values],
    }


def witness_dict(names, rec):
    return {
        "exponent": list(rec.w),
        "monomial": format_monomial(names, rec.w),
        "face": [names[j] for j in rec.P.J],
        "key": bool(rec.is_key),
        "character": bool(rec.is_character),
        "mesoprime": ideal_strings(rec.mesoprime.ideal),
    }


def component_dict(names, comp, bundle=None):
    out = {
        "kind": comp.kind,
        "face": [names[j] for j in comp.face.J],
        "generators": ideal_strings(comp.ideal),
        "cogenerators": [list(w) for w in comp.cogenerators],
        "witnesses": [witness_dict(names, r) for r in comp.witnesses],
    }
    if comp.mesoprime is not None:
        out["character"] = character_dict(names, comp.mesoprime.character)
        out["mesoprime"] = ideal_strings(comp.mesoprime.ideal)
    if bundle is not None:
        out["bundle"] = {
            "invariants": list(bundle.group_invariants),
            "count": bundle.count,
            "fibers": None if bundle.fibers is None else [ideal_strings(F) for F in bundle.fibers],
        }
    return out


def decomposition_dict(D, bundles=False):
    from .decompose import component_bundle

    names = D.source.ring.names
    comps = []
    for c in D.components:
        b = component_bundle(c) if bundles and c.mesoprime is not None else None
        comps.append(component_dict(names, c, b))
    return {
        "mode": D.mode,
        "source": ideal_strings(D.source),
        "components": comps,
        "redundant": list(D.redundant),
        "certificate": None if D.certificate is None else D.certificate.as_dict(),
    }


def load_decomposition(doc):
    """Rebuild a Decomposition (without witnesses) from its dict form."""
    from .components import Component
    from .decompose import Decomposition
    from .parse import parse_ideal
    from .ring import FacePrime

    names = doc["ring"]
    body = doc.get("result", doc)
    src = parse_ideal(", ".join(body["source"]), names)
    comps = []
    for c in body["components"]:
        ideal = parse_ideal(", ".join(c["generators"]), names)
        J = [names.index(v) for v in c.get("face", [])]
        comps.append(Component(ideal, c.get("kind", "component"),
                               [tuple(w) for w in c.get("cogenerators", [])], None,
                               FacePrime(len(names), J), []))
    return Decomposition(src, body["mode"], comps)
