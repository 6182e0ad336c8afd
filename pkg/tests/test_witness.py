from itertools import product
import random

import pytest

from mesoprime.congruence import local_view
from mesoprime.errors import NilClass
from mesoprime.ring import AmbientRing, Binomial, BinomialIdeal
from mesoprime.verify import grid_oracle
from mesoprime.witness import (associated_objects, classify, enumerate_witnesses,
                               is_key_witness, is_witness)
from mesoprime.witness import testimony as cover_testimony
from helpers import I, same


def _keys(A):
    """{(face, green class)} for the witness records of A."""
    out = set()
    for r in enumerate_witnesses(A):
        out.add((r.P.J, local_view(A, r.P.J).green_key(r.w), r.is_key))
    return out


def _key(A, J, w, key=True):
    return (tuple(J), local_view(A, J).green_key(w), key)


def test_swap_key_witnesses():
    A = I("x^2 - x*y, x*y - y^2", "x,y")
    assert is_key_witness(A, (1, 0), ()) and is_key_witness(A, (0, 1), ())
    assert not is_witness(A, (0, 0), ())
    primes = {P.J for P in associated_objects(A)["monoid_primes"]}
    assert primes == {(), (0, 1)}


def test_swap_with_two_units_zero_not_key():
    A = I("x^2-x*y, y^2-x*y, x*(z-1), y*(w-1)", "x,y,z,w")
    J = (2, 3)
    assert is_witness(A, (0, 0, 0, 0), J)
    assert not is_key_witness(A, (0, 0, 0, 0), J)
    assert is_key_witness(A, (1, 0, 0, 0), J) and is_key_witness(A, (0, 1, 0, 0), J)


def test_shared_witness_classes():
    A = I("x*(z-1), x*(w-1), y*(z-1), y^2", "x,y,z,w")
    assert _keys(A) == {
        _key(A, (0, 2, 3), (0, 1, 0, 0)),
        _key(A, (2, 3), (0, 0, 0, 0)),
        _key(A, (2, 3), (0, 1, 0, 0)),
    }
    for k in range(3):
        assert is_key_witness(A, (k, 1, 0, 0), (0, 2, 3))
        assert is_witness(A, (0, 0, k, 0), (2, 3))
        assert is_witness(A, (0, 1, k, k), (2, 3))
        assert not is_witness(A, (1 + k, 0, 0, 0), (2, 3))


def test_shared_witness_prime_congruences():
    A = I("x*(z-1), x*(w-1), y*(z-1), y^2", "x,y,z,w")
    got = {frozenset(g for g in m.ideal.basis()) for m in associated_objects(A)["prime_congruences"]}
    want = {frozenset(I(t, "x,y,z,w").basis()) for t in ("x, y", "x, y, z - 1", "y, z - 1, w - 1")}
    assert got == want


def test_zero_ideal_has_only_empty_prime():
    A = I("0", "x,y")
    recs = enumerate_witnesses(A)
    assert len(recs) == 1 and recs[0].P.is_empty_prime


def test_x_minus_y_only_empty_prime():
    recs = enumerate_witnesses(I("x - y", "x,y"))
    assert [r.P.J for r in recs] == [(0, 1)]


def test_nil_witness_raises():
    with pytest.raises(NilClass):
        is_witness(I("x^2, y^2", "x,y"), (2, 0), ())


def test_false_example():
    A = I("x*(z-1), y*(z+1), z^2-1, x^2, y^2", "x,y,z")
    t = cover_testimony(A, (0, 0, 0), (2,))
    assert sorted(c((1,)) for c in t) == [-1, 1]
    assert classify(A, (0, 0, 0), (2,)) == "false"
    assert is_key_witness(A, (0, 0, 0), (2,))


def test_character_example():
    A = I("x*(z-1), y*(z-1), z^2-1, x^2, x*y, y^2", "x,y,z")
    assert classify(A, (0, 0, 0), (2,)) == "character"


def test_non_key_false():
    A = I("w^6-1, x*(w^2-1), y*(w^3-1), z*(w^3+1)", "x,y,z,w")
    J = (3,)
    assert is_witness(A, (0, 0, 0, 0), J)
    assert not is_key_witness(A, (0, 0, 0, 0), J)
    assert classify(A, (0, 0, 0, 0), J) == "false"


def test_testimony_on_trivial_cover_is_empty():
    A = I("x^2, y^2", "x,y")
    assert cover_testimony(A, (1, 1), ()) == []


# ---------------------------------------------------------------------------
# brute-force oracle at the maximal face


def _shift(a, i):
    return tuple(x + (k == i) for k, x in enumerate(a))


def _oracle_witnesses(A, box, D):
    part = grid_oracle(A.gens, D, A.ring.n)
    n = A.ring.n
    pts = list(product(range(box + 1), repeat=n))
    wit, key = set(), set()
    for w in pts:
        if w in part.nil_set:
            continue
        ok = []
        for b in product(range(D), repeat=n):
            if part.same(b, w):
                continue
            ok.append([part.same(_shift(b, i), _shift(w, i)) for i in range(n)])
        if all(any(o[i] for o in ok) for i in range(n)):
            wit.add(w)
            if any(all(o) for o in ok):
                key.add(w)
    return wit, key


def _artinian(rng, n):
    R = AmbientRing(["x", "y", "z"][:n])
    gens = [Binomial(tuple(rng.randint(2, 3) if k == i else 0 for k in range(n)))
            for i in range(n)]
    for _ in range(rng.randint(1, 2)):
        a = tuple(rng.randint(0, 2) for _ in range(n))
        b = tuple(rng.randint(0, 2) for _ in range(n))
        if a != b:
            gens.append(Binomial.from_terms([(1, a), (-rng.choice([1, -1, 2]), b)]))
    return BinomialIdeal(R, gens)


@pytest.mark.parametrize("seed", range(15))
def test_witnesses_match_brute_force(seed):
    rng = random.Random(seed)
    A = _artinian(rng, rng.randint(1, 2))
    if A.is_unit:
        return
    wit, key = _oracle_witnesses(A, 3, 9)
    for w in product(range(4), repeat=A.ring.n):
        if A.contains_monomial(w):
            continue
        assert is_witness(A, w, ()) == (w in wit), w
        assert is_key_witness(A, w, ()) == (w in key), w
    view = local_view(A, ())
    got = {view.green_key(r.w) for r in enumerate_witnesses(A) if not r.P.J}
    assert got == {view.green_key(w) for w in wit}


def test_monomial_socle_staircase():
    A = I("x^2, y^2", "x,y")
    wit, _ = _oracle_witnesses(A, 3, 6)
    assert wit == {(1, 1)}
    assert [r.w for r in enumerate_witnesses(A)] == [(1, 1)]


def test_records_are_witnesses_and_deterministic():
    A = I("x^2-x*y, y^2-x*y, x*(z-1)", "x,y,z")
    recs = enumerate_witnesses(A)
    for r in recs:
        if not r.P.is_empty_prime:
            assert is_witness(A, r.w, r.P)
    again = enumerate_witnesses(I("x^2-x*y, y^2-x*y, x*(z-1)", "x,y,z"))
    assert [(r.w, r.P.J) for r in again] == [(r.w, r.P.J) for r in recs]


def test_mesoprimes_of_xz_minus_yz():
    A = I("x*z - y*z", "x,y,z")
    got = {(r.P.J, r.mesoprime.ideal) for r in enumerate_witnesses(A)}
    assert got == {((0, 1, 2), I("x - y", "x,y,z")), ((0, 1), I("z", "x,y,z"))}
