from fractions import Fraction
from math import prod
import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from mesoprime.errors import Improper, NotExtension, NotLaurent
from mesoprime.lattice import (Lattice, PartialCharacter, extension_cover, hnf,
                               saturated_extensions, snf)
from mesoprime.mesoprime import Mesoprime, extract_character, primary_bundle
from mesoprime.ring import AmbientRing, BinomialIdeal
from helpers import I, same


def _mul(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


def _sympy_invariants(M):
    D = smith_normal_form(Matrix(M), domain=ZZ)
    return sorted(abs(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0)


def test_snf_eight_to_one_data():
    assert snf([[2, 0, 0], [0, 2, 0], [0, 0, 2]])[0] == [2, 2, 2]


def test_snf_identity():
    assert snf([[1, 0], [0, 1]])[0] == [1, 1]


@pytest.mark.parametrize("seed", range(12))
def test_snf_transforms_remultiply(seed):
    rng = random.Random(seed)
    M = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(4)]
    diag, U, V, W = snf(M)
    D = _mul(_mul(U, M), V)
    for i in range(4):
        for j in range(4):
            want = diag[i] if i == j and i < len(diag) else 0
            assert D[i][j] == want
    assert _mul(V, W) == [[int(i == j) for j in range(4)] for i in range(4)]
    assert sorted(diag) == _sympy_invariants(M)


def test_hnf_unique_for_equal_lattices():
    assert Lattice(2, [(2, 4), (0, 6)]) == Lattice(2, [(2, -2), (0, 6)])


def test_saturation_of_two_minus_two():
    L = Lattice(2, [(2, -2)])
    S = L.saturation()
    assert S == Lattice(2, [(1, -1)])
    assert L.index_in(S) == 2


def test_saturated_lattice_is_fixed():
    L = Lattice(3, [(1, 0, 0), (0, 1, -1)])
    assert L.saturation() == L and L.is_saturated()


@pytest.mark.parametrize("seed", range(10))
def test_saturation_index_matches_torsion(seed):
    rng = random.Random(100 + seed)
    rows = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(rng.randint(1, 3))]
    L = Lattice(3, rows)
    if not L.basis:
        return
    S = L.saturation()
    assert S.includes(L)
    assert S.saturation() == S
    assert L.index_in(S) == prod(L.torsion() or [1])
    assert [d for d in _sympy_invariants(rows) if d > 1] == sorted(L.torsion())


def test_extract_z2_minus_1():
    R = AmbientRing(["z"]).localized([0])
    rho = extract_character(BinomialIdeal(R, I("z^2 - 1", "z").gens))
    assert rho.lattice == Lattice(1, [(2,)])
    assert rho((2,)) == 1


def test_extract_zero_ideal():
    R = AmbientRing(["z"]).localized([0])
    rho = extract_character(BinomialIdeal(R, []))
    assert rho.lattice.rank == 0


def test_extract_twisted_cube():
    R = AmbientRing(["x"]).localized([0])
    rho = extract_character(BinomialIdeal(R, I("x^3 - 2", "x").gens))
    assert rho.lattice == Lattice(1, [(3,)])
    assert rho((3,)) == 2 and rho((-3,)) == Fraction(1, 2)


def test_extract_rejects_non_laurent():
    A = I("x - y", "x,y")
    with pytest.raises(NotLaurent):
        extract_character(A, [0])


def test_extract_rejects_unit():
    R = AmbientRing(["z"]).localized([0])
    with pytest.raises(Improper):
        extract_character(BinomialIdeal(R, I("z - 1, z - 2", "z").gens))


def test_mesoprime_on_x_squared():
    rho = PartialCharacter((0,), 2, [(2,)], [1])
    assert same(Mesoprime(AmbientRing(["x", "y"]), rho).ideal, "x^2 - 1, y")


def test_mesoprime_trivial_character_is_maximal():
    R = AmbientRing(["x", "y", "z"])
    assert same(Mesoprime(R, PartialCharacter.trivial((), 3)).ideal, "x, y, z")


def test_mesoprime_from_false_example():
    rho = PartialCharacter((2,), 3, [(2,)], [1])
    assert same(Mesoprime(AmbientRing(["x", "y", "z"]), rho).ideal, "z^2 - 1, x, y")


def test_improper_character_rejected():
    with pytest.raises(Improper):
        PartialCharacter((0,), 1, [(2,), (3,), (1,)], [1, 1, 2])


@pytest.mark.parametrize("seed", range(8))
def test_character_basis_independent(seed):
    rng = random.Random(seed)
    rows = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2)]
    L = Lattice(2, rows)
    if L.rank == 0:
        return
    vals = [Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2])) for _ in L.basis]
    rho = PartialCharacter((0, 1), 2, L.basis, vals)
    for _ in range(5):
        c = [rng.randint(-3, 3) for _ in L.basis]
        v = tuple(sum(k * b[i] for k, b in zip(c, L.basis)) for i in range(2))
        want = prod((val ** k for k, val in zip(c, vals)), start=Fraction(1))
        assert rho(v) == want


def test_extract_mesoprime_round_trip():
    R = AmbientRing(["x", "y"])
    rho = PartialCharacter((0, 1), 2, [(2, -1), (0, 3)], [Fraction(1, 2), 2])
    m = Mesoprime(R, rho)
    assert extract_character(m.ideal, (0, 1)) == rho


def _chars(vals_by_gen):
    return [PartialCharacter((0,), 1, [(k,)], [v]) for k, v in vals_by_gen]


def test_cover_z2_minus_1():
    rho = PartialCharacter((0,), 1, [(2,)], [1])
    assert extension_cover(rho, _chars([(1, 1), (1, -1)]))
    assert not extension_cover(rho, _chars([(1, 1)]))


def test_cover_w6_minus_1():
    rho = PartialCharacter((0,), 1, [(6,)], [1])
    assert extension_cover(rho, _chars([(2, 1), (3, 1), (3, -1)]))
    assert not extension_cover(rho, _chars([(2, 1), (3, 1)]))


def test_cover_infinite_extension_contributes_nothing():
    rho = PartialCharacter((0, 1), 2, [(2, 0)], [1])
    sigma = PartialCharacter((0, 1), 2, [(2, 0), (0, 1)], [1, 1])
    assert not extension_cover(rho, [sigma])


def test_cover_rejects_non_extension():
    rho = PartialCharacter((0,), 1, [(2,)], [1])
    with pytest.raises(NotExtension):
        extension_cover(rho, _chars([(1, 2)]))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_cover_by_itself(k):
    rho = PartialCharacter((0,), 1, [(k,)], [1])
    assert extension_cover(rho, [rho])


def test_bundle_eight_to_one():
    R = AmbientRing("abde")
    units = BinomialIdeal(R.localized([0, 1, 2, 3]),
                          I("b - e, e^2 - 1, d^2 - 1, a^2 - 1", "a,b,d,e").gens)
    b = primary_bundle(Mesoprime(R, extract_character(units)))
    assert b.group_invariants == [2, 2, 2] and b.count == 8


def test_bundle_saturated():
    rho = PartialCharacter((0,), 2, [(1,)], [1])
    b = primary_bundle(Mesoprime(AmbientRing(["x", "y"]), rho))
    assert b.group_invariants == [] and b.count == 1


def test_bundle_x_squared():
    rho = PartialCharacter((0,), 2, [(2,)], [1])
    b = primary_bundle(Mesoprime(AmbientRing(["x", "y"]), rho))
    assert b.group_invariants == [2] and b.count == 2


def test_bundle_count_multiplies_on_blocks():
    a = PartialCharacter((0,), 1, [(2,)], [1])
    b = PartialCharacter((0,), 1, [(3,)], [1])
    ab = PartialCharacter((0, 1), 2, [(2, 0), (0, 3)], [1, 1])
    R1, R2 = AmbientRing(["x"]), AmbientRing(["x", "y"])
    n = primary_bundle(Mesoprime(R2, ab)).count
    assert n == primary_bundle(Mesoprime(R1, a)).count * primary_bundle(Mesoprime(R1, b)).count


def test_saturated_extensions_rational_and_irrational():
    rho = PartialCharacter((0,), 1, [(2,)], [1])
    ext = saturated_extensions(rho)
    assert sorted(s((1,)) for s in ext) == [-1, 1]
    assert saturated_extensions(PartialCharacter((0,), 1, [(2,)], [2])) is None
