from fractions import Fraction
from itertools import product

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from mesoprime.decompose import characteristic_decomposition, ideal_taxonomy
from mesoprime.io_format import ideal_strings
from mesoprime.lattice import Lattice, PartialCharacter, extension_cover
from mesoprime.mesoprime import Mesoprime, extract_character
from mesoprime.parse import parse_ideal
from mesoprime.ring import AmbientRing, Binomial, BinomialIdeal
from mesoprime.verify import grid_oracle

COEFFS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2)]
NAMES = ["x", "y", "z"]
SETTINGS = settings(max_examples=25, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def ideals(draw, max_n=2, max_deg=2, unital=False, monomials=True):
    n = draw(st.integers(1, max_n))
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        a, b = draw(exps), draw(exps)
        if monomials and draw(st.integers(0, 4)) == 0:
            gens.append(Binomial(a))
        elif a != b:
            lam = Fraction(1) if unital else draw(st.sampled_from(COEFFS))
            gens.append(Binomial.from_terms([(1, a), (-lam, b)]))
    return BinomialIdeal(AmbientRing(NAMES[:n]), gens)


@st.composite
def characters(draw):
    rows = draw(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=2))
    L = Lattice(2, rows)
    vals = [draw(st.sampled_from(COEFFS)) for _ in L.basis]
    return PartialCharacter((0, 1), 2, L.basis, vals)


@SETTINGS
@given(ideals(unital=True, monomials=False))
def test_normal_forms_match_closure_on_small_box(A):
    part = grid_oracle(A.gens, 9, A.ring.n)
    box = [p for p in product(range(3), repeat=A.ring.n)]
    for a in box:
        for b in box:
            ra, rb = A.nf_exp(a), A.nf_exp(b)
            same_nf = (ra is None and rb is None) or (
                ra is not None and rb is not None and ra[1] == rb[1])
            assert same_nf == part.same(a, b)


@SETTINGS
@given(ideals())
def test_saturation_idempotent_and_contains(A):
    J = [0]
    S = A.saturate(J)
    assert S.saturate(J) == S
    assert all(S.contains(g) for g in A.gens)


@SETTINGS
@given(ideals())
def test_colon_contains_ideal(A):
    q = A.ring.unit_vector(0)
    C = A.colon(q)
    assert all(C.contains(g) for g in A.gens)


@SETTINGS
@given(characters())
def test_extract_inverts_mesoprime(rho):
    m = Mesoprime(AmbientRing(["x", "y"]), rho)
    assert extract_character(m.ideal, (0, 1)) == rho


@SETTINGS
@given(characters())
def test_cover_by_itself_always(rho):
    assert extension_cover(rho, [rho])


@SETTINGS
@given(characters())
def test_saturation_monotone_and_idempotent(rho):
    L = rho.lattice
    S = L.saturation()
    assert S.includes(L) and S.saturation() == S
    assert L.index_in(S) >= 1


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals())
def test_characteristic_decomposition_certifies(A):
    assume(A.proper)
    D = characteristic_decomposition(A)
    assert D.certificate.verdict == "pass"
    for comp in D.components:
        assert ideal_taxonomy(comp.ideal)["mesoprimary"]
        back = parse_ideal(", ".join(ideal_strings(comp.ideal)), ",".join(A.ring.names))
        assert back == comp.ideal
