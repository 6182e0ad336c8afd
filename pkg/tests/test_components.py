import random

import pytest

from mesoprime.components import (binomial_localization, coprincipal_component,
                                  coprincipal_congruence_component,
                                  incommensurate_ideal, infinite_ideal, mesoprimary_component,
                                  monomial_cogenerated, order_ideal, p_socle_contains)
from mesoprime.congruence import local_view
from mesoprime.decompose import ideal_taxonomy
from mesoprime.errors import MixedMesoprimes
from mesoprime.mesoprime import Mesoprime
from mesoprime.ring import Binomial
from mesoprime.verify import grid_oracle
from mesoprime.witness import enumerate_witnesses
from helpers import I, same
from randgen import random_ideals

XZ = ("x*z - y*z", "x,y,z")


def test_cogenerated_monomials_maximal_face():
    assert same(monomial_cogenerated(I(*XZ), [(0, 1, 1)], ()), "x^2, x*y, y^2, z^2")


def test_cogenerated_monomials_smaller_face():
    assert same(monomial_cogenerated(I(*XZ), [(0, 1, 1)], (0, 1)), "z^2")


def test_cogenerated_identity_at_zero():
    assert same(monomial_cogenerated(I("0", "x,y,z"), [(0, 0, 0)], ()), "x, y, z")


def test_component_maximal_face():
    W = mesoprimary_component(I(*XZ), [(0, 1, 1)], ()).ideal
    assert same(W, "x*z - y*z, x^2, x*y, y^2, z^2")


def test_component_smaller_face():
    W = mesoprimary_component(I(*XZ), [(0, 1, 1)], (0, 1)).ideal
    assert same(W, "x - y, z^2")


def test_components_incomparable_without_hypothesis():
    A = I(*XZ)
    big = mesoprimary_component(A, [(0, 1, 1)], ()).ideal
    small = mesoprimary_component(A, [(0, 1, 1)], (0, 1)).ideal
    assert not all(big.contains(g) for g in small.gens)
    assert not all(small.contains(g) for g in big.gens)


def test_nonmesoprimary_prime_component():
    A = I("x^2 - x*y, x*y - y^2, x^3, y^3", "x,y")
    assert same(coprincipal_congruence_component(A, (1, 1), ()).ideal, "x - y, x^3")
    # the ideal-level component keeps x and y apart
    assert same(mesoprimary_component(A, [(1, 1)], ()).ideal, "x^2 - y^2, x*y - y^2, y^3")


def test_coprincipal_fixed_point():
    A = I("x - y, x^3", "x,y")
    assert coprincipal_component(A, (2, 0), ()).ideal == A


def test_mixed_mesoprimes_rejected():
    A = I("x*(z-1), y*(z+1), z^2-1, x^2, y^2", "x,y,z")
    with pytest.raises(MixedMesoprimes):
        mesoprimary_component(A, [(1, 0, 0), (0, 1, 0)], (2,))


def test_order_ideal_of_e():
    oi = order_ideal(I("x^3 - x^6", "x"), (1,), ())
    assert [k for k in range(10) if (k,) in oi] == [0, 1]


def test_order_ideal_of_3e_is_everything():
    oi = order_ideal(I("x^3 - x^6", "x"), (3,), ())
    assert all((k,) in oi for k in range(15))


def test_order_ideal_axis_translates():
    oi = order_ideal(I("0", "x,y,z"), (1, 1, 2), (2,))
    assert sorted(oi.classes()) == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]
    assert (1, 1, 7) in oi and (0, 0, 3) in oi
    assert (2, 0, 0) not in oi and (0, 2, 1) not in oi


def test_order_ideal_of_zero():
    oi = order_ideal(I("0", "x,y"), (0, 0), ())
    assert oi.classes() == [(0, 0)]
    assert (1, 0) not in oi


def test_socle_has_no_monomial():
    A = I("x^2 - x*y, x*y - y^2", "x,y")
    assert not any(p_socle_contains(A, q, ()) for q in [(0, 0), (1, 0), (0, 1), (2, 0)])


def test_socle_contains_cogenerator():
    A = I(*XZ)
    W = mesoprimary_component(A, [(0, 1, 1)], ()).ideal
    assert p_socle_contains(W, (0, 1, 1), ())


def test_socle_nil_is_false():
    assert not p_socle_contains(I("x^2, y^2", "x,y"), (2, 0), ())


def test_infinite_ideal_matches_closure():
    A = I("x^3 - x^6", "x")
    part = grid_oracle(A.gens, 12, 1)
    absorbing = [q for q in range(7) if any(part.same((q + p,), (q,)) for p in range(1, 6))]
    assert min(absorbing) == 3
    assert same(infinite_ideal(A, ()), "x^%d" % min(absorbing))


def test_infinite_ideal_prime_congruence():
    assert infinite_ideal(I("x - y", "x,y"), ()).is_zero


def test_infinite_generators_factor():
    A = I("x^3 - x^6", "x")
    for q in infinite_ideal(A, ()).monomial_generators():
        # x^q (1 - x^p) lies in the ideal for some p
        assert any(A.contains(Binomial.from_terms([(1, q), (-1, (q[0] + p,))]))
                   for p in range(1, 6))


def test_incommensurate_contains_y():
    A = I("x*(z-1), y*(z+1), z^2-1, x^2, y^2", "x,y,z")
    m = Mesoprime(A.ring, local_view(A, (2,)).character((1, 0, 0)))
    assert same(m.ideal, "z - 1, x, y")
    assert incommensurate_ideal(A, m).contains_monomial((0, 1, 0))
    loc = binomial_localization(A, m)
    assert loc.contains_monomial((0, 1, 0))
    assert all(loc.contains(g) for g in A.gens)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_components_contain_source_and_are_mesoprimary(seed):
    for A in random_ideals(seed, 5, max_n=3, max_gens=3, max_deg=3):
        for r in enumerate_witnesses(A):
            comp = coprincipal_component(A, r.w, r.P)
            W = comp.ideal
            assert all(W.contains(g) for g in A.gens)
            assert ideal_taxonomy(W)["mesoprimary"]


def test_coprincipal_socle_single_class():
    A = I("x^2 - x*y, x*y - y^2, x^3, y^3", "x,y")
    W = mesoprimary_component(A, [(1, 1)], ()).ideal
    view = local_view(W, ())
    socle = {view.green_key(q) for q in [(a, b) for a in range(4) for b in range(4)]
             if p_socle_contains(W, q, ())}
    assert socle == {view.green_key((1, 1))}
