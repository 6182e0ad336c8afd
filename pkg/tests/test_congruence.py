from itertools import product

import pytest

from mesoprime.congruence import (NIL, Congruence, common_refinement, congruence_ideal,
                                  nil_element, taxonomy)
from mesoprime.verify import grid_oracle
from mesoprime.witness import associated_objects
from helpers import I
from randgen import random_ideals


def C(text, names):
    return Congruence(I(text, names))


def test_top_row_is_nil():
    c = C("y - x^2*y, y^2 - x*y^2, y^3", "x,y")
    assert c.class_key((0, 3)) is NIL
    assert c.class_key((5, 3)) is NIL
    assert c.class_key((0, 2)) is not NIL


def test_identity_congruence_keys():
    c = C("0", "x,y")
    for q in product(range(4), repeat=2):
        assert c.class_key(q) == q


def test_bottom_row_period_two():
    c = C("1 - x^2, y^2", "x,y")
    assert c.class_key((3, 0)) == c.class_key((1, 0))
    assert c.class_key((2, 0)) != c.class_key((1, 0))


def test_green_order_ideal_group_of_order_three():
    c = C("x^3 - x^6", "x")
    assert c.green_leq((0,), (1,), ())
    assert not c.green_leq((1,), (0,), ())
    assert c.green_leq((3,), (6,), ()) and c.green_leq((6,), (3,), ())


@pytest.mark.parametrize("seed", [0, 1])
def test_green_reflexive(seed):
    for A in random_ideals(seed, 5, max_n=3, max_gens=3, max_deg=3):
        c = Congruence(A)
        for q in [(0,) * A.ring.n, (1,) * A.ring.n]:
            if not c.is_nil(q):
                assert c.green_leq(q, q, ())


def test_green_matches_grid_reachability():
    # a <= b when some shift a + u lands in the class of b
    for A in random_ideals(21, 8, n=2, max_gens=2, max_deg=2, unital=True):
        D = 6
        part = grid_oracle(A.gens, D, A.ring.n)
        inner = [p for p in part.interior() if max(p) <= 2]
        c = Congruence(A)
        for a in inner:
            for b in inner:
                if c.is_nil(a) or c.is_nil(b):
                    continue
                seen = any(part.same(tuple(x + y for x, y in zip(a, u)), b)
                           for u in product(range(D + 1 - max(a)), repeat=A.ring.n))
                if seen:
                    assert c.green_leq(a, b, ())


def test_localize_all_gives_x_minus_y():
    c = C("x^2 - x*y, x*y - y^2", "x,y").localize((0, 1))
    assert c.are_congruent((1, 0), (0, 1))
    assert c.are_congruent((-3, 0), (0, -3))
    assert not c.is_nil((5, 5))


def test_localize_nothing_is_same():
    c = C("x^2 - x*y, x*y - y^2", "x,y")
    loc = c.localize(())
    for a in product(range(3), repeat=2):
        for b in product(range(3), repeat=2):
            assert loc.are_congruent(a, b) == c.are_congruent(a, b)


def test_annihilator_joins_ex_ey():
    c = C("x^2 - x*y, x*y - y^2", "x,y")
    ann = c.annihilator_congruence([(1, 0), (0, 1)])
    assert ann.are_congruent((1, 0), (0, 1))
    assert not c.are_congruent((1, 0), (0, 1))


def test_annihilator_of_zero_is_self():
    c = C("x^2 - x*y, x*y - y^2", "x,y")
    assert c.annihilator_congruence([(0, 0)]) is c


def test_annihilator_matches_grid_kernels():
    for A in random_ideals(31, 8, n=2, max_gens=3, max_deg=2, unital=True):
        part = grid_oracle(A.gens, 7, A.ring.n)
        c = Congruence(A)
        T = [(1, 0), (0, 1)]
        ann = c.annihilator_congruence(T)
        pts = [p for p in product(range(3), repeat=2)]
        for a in pts:
            for b in pts:
                want = all(part.same(tuple(x + y for x, y in zip(a, t)),
                                     tuple(x + y for x, y in zip(b, t))) for t in T)
                assert ann.are_congruent(a, b) == want


def test_common_refinement():
    a = C("x - y", "x,y")
    b = C("x^2 - y^2", "x,y")
    r = common_refinement([a, b])
    assert r.are_congruent((2, 0), (0, 2))
    assert not r.are_congruent((1, 0), (0, 1))


@pytest.mark.parametrize("text,flags", [
    ("x - y", {"toric": True, "prime": True, "primitive": True}),
    ("x^2 - y^2", {"toric": False, "prime": True}),
    ("y - x^2*y, y^2 - x*y^2, y^3", {"primary": True, "mesoprimary": False}),
    ("x^2, x - y", {"primitive": True}),
])
def test_taxonomy_fixtures(text, flags):
    t = taxonomy(C(text, "x,y"))
    for k, v in flags.items():
        assert t[k] is v


FIXTURES = [
    ("x - y", "x,y"), ("x^2 - y^2", "x,y"), ("y - x^2*y, y^2 - x*y^2, y^3", "x,y"),
    ("x^2, x - y", "x,y"), ("x^2 - x*y, x*y - y^2", "x,y"), ("1 - x^2, y^2", "x,y"),
    ("x^2 - x", "x"), ("x^2, y^2", "x,y"), ("x^3 - x^6", "x"),
    ("x*z - y*z", "x,y,z"), ("x*(z-1), y*(z-1), z^2-1, x^2, x*y, y^2", "x,y,z"),
]


@pytest.mark.parametrize("text,names", FIXTURES)
def test_taxonomy_implications(text, names):
    t = taxonomy(C(text, names))
    if t["toric"]:
        assert t["prime"] and t["primitive"]
    if t["prime"]:
        assert t["mesoprimary"]
    if t["primitive"]:
        assert t["mesoprimary"]
    if t["mesoprimary"]:
        assert t["primary"]


@pytest.mark.parametrize("text,names", FIXTURES)
def test_primary_iff_one_monoid_prime(text, names):
    A = I(text, names)
    t = taxonomy(Congruence(A))
    primes = associated_objects(congruence_ideal(A))["monoid_primes"]
    assert t["primary"] == (len(primes) == 1)


def test_rees_classes_are_singletons():
    c = C("x^2*y, y^3, x^4", "x,y")
    pts = [p for p in product(range(5), repeat=2) if not c.is_nil(p)]
    keys = [c.class_key(p) for p in pts]
    assert len(set(keys)) == len(keys)


def test_nil_element_and_congruence_ideal():
    A = I("x - y, x - x^2", "x,y")
    q = nil_element(A)
    assert q is not None and not A.contains_monomial(q)
    U = congruence_ideal(A)
    assert U.contains_monomial((1, 0))
    assert nil_element(I("x - y", "x,y")) is None
