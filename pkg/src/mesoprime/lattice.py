"""Integer lattices, normal forms, and partial characters.

Lattices live in Z^m and are stored by a row basis in Hermite normal form,
so equal lattices have equal bases.  A partial character attaches a nonzero
rational value to each basis row; every row operation on the basis carries
the values along multiplicatively, which keeps the homomorphism well defined
without ever leaving the rationals.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod

from .config import DEFAULT_MAX_DUAL
from .errors import BoundExceeded, Improper, NotExtension

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms


def _hnf_core(rows, vals=None):
    """Row-style HNF.  Returns (basis, basis_vals, leftover_vals).

    ``leftover_vals`` are the values that ended up on zero rows; for a
    consistent character they are all 1.
    """
    rows = [list(r) for r in rows]
    if vals is None:
        vals = None
    else:
        vals = [Fraction(v) for v in vals]
    if not rows:
        return [], ([] if vals is not None else None), []
    m = len(rows[0])
    r = 0
    for col in range(m):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[piv] = rows[piv], rows[r]
            if vals is not None:
                vals[r], vals[piv] = vals[piv], vals[r]
            clean = True
            p = rows[r][col]
            for i in range(r + 1, len(rows)):
                a = rows[i][col]
                if a == 0:
                    continue
                q = a // p
                if q:
                    ri, rr = rows[i], rows[r]
                    for k in range(col, m):
                        ri[k] -= q * rr[k]
                    if vals is not None:
                        vals[i] = vals[i] / vals[r] ** q
                if rows[i][col] != 0:
                    clean = False
            if clean:
                break
        if r < len(rows) and rows[r][col] != 0:
            if rows[r][col] < 0:
                rows[r] = [-x for x in rows[r]]
                if vals is not None:
                    vals[r] = 1 / vals[r]
            p = rows[r][col]
            for i in range(r):
                q = rows[i][col] // p
                if q:
                    ri, rr = rows[i], rows[r]
                    for k in range(col, m):
                        ri[k] -= q * rr[k]
                    if vals is not None:
                        vals[i] = vals[i] / vals[r] ** q
            r += 1
            if r == len(rows):
                break
    basis = [tuple(x) for x in rows[:r]]
    if vals is None:
        return basis, None, []
    return basis, vals[:r], vals[r:]


def hnf(rows):
    """Hermite normal form of the row span (zero rows dropped)."""
    return _hnf_core(rows)[0]


def snf(matrix):
    """Smith normal form ``U * M * V = D`` with unimodular ``U`` and ``V``.

    Returns ``(diagonal, U, V, V_inverse)``; ``diagonal`` lists the nonzero
    invariant factors in divisibility order.
    """
    A = [list(r) for r in matrix]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]
    W = [[int(i == j) for j in range(nc)] for i in range(nc)]  # V^{-1}

    def row_add(i, j, q):  # row_i += q*row_j
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    def col_add(i, j, q):  # col_i += q*col_j
        for row in A:
            row[i] += q * row[j]
        for row in V:
            row[i] += q * row[j]
        W[j] = [a - q * b for a, b in zip(W[j], W[i])]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        W[i], W[j] = W[j], W[i]

    t = 0
    while t < min(nr, nc):
        entries = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        row_swap(t, i)
        col_swap(t, j)
        while True:
            done = True
            for i in range(t + 1, nr):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_add(i, t, -q)
                    if A[i][t]:
                        row_swap(t, i)
                        done = False
            for j in range(t + 1, nc):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_add(j, t, -q)
                    if A[t][j]:
                        col_swap(t, j)
                        done = False
            if not done:
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] % A[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = [A[i][i] for i in range(min(nr, nc)) if A[i][i]]
    return diag, U, V, W


def left_kernel(rows, width):
    """Integer basis (HNF) of {c : sum c_i rows_i = 0}."""
    k = len(rows)
    if k == 0:
        return []
    aug = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    basis = hnf(aug)
    return hnf([b[width:] for b in basis if not any(b[:width])])


def solve_left(rows, target):
    """Integer coefficients c with sum c_i rows_i = target, or None."""
    k = len(rows)
    width = len(target)
    if k == 0:
        return [] if not any(target) else None
    aug = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    basis = hnf(aug)
    t = list(target)
    coeffs = [0] * k
    for b in basis:
        head = next((c for c in range(width) if b[c]), None)
        if head is None:
            continue
        if t[head] % b[head]:
            return None
        q = t[head] // b[head]
        if q:
            for c in range(width):
                t[c] -= q * b[c]
            for c in range(k):
                coeffs[c] += q * b[width + c]
    if any(t):
        return None
    return coeffs


# ---------------------------------------------------------------------------
# Lattices


class Lattice:
    """A subgroup of Z^m given by a row basis in Hermite normal form."""

    __slots__ = ("dim", "basis", "_pivots")

    def __init__(self, dim, rows=()):
        self.dim = dim
        rows = [tuple(int(x) for x in r) for r in rows]
        for r in rows:
            if len(r) != dim:
                raise ValueError("row length does not match lattice dimension")
        self.basis = tuple(hnf(rows)) if rows else ()
        self._pivots = tuple(next(c for c in range(dim) if b[c]) for b in self.basis)

    @classmethod
    def _from_hnf(cls, dim, basis):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.basis = tuple(tuple(b) for b in basis)
        obj._pivots = tuple(next(c for c in range(dim) if b[c]) for b in obj.basis)
        return obj

    @classmethod
    def full(cls, dim):
        return cls(dim, [tuple(int(i == j) for j in range(dim)) for i in range(dim)])

    @property
    def rank(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __repr__(self):
        return f"Lattice({self.dim}, {[list(b) for b in self.basis]})"

    def coordinates(self, v):
        """Integer coordinates of ``v`` in the basis, or None if v is not in L."""
        t = list(v)
        out = []
        for b, p in zip(self.basis, self._pivots):
            if t[p] % b[p]:
                return None
            q = t[p] // b[p]
            out.append(q)
            if q:
                for c in range(p, self.dim):
                    t[c] -= q * b[c]
        if any(t):
            return None
        return out

    def contains(self, v):
        return self.coordinates(v) is not None

    def reduce(self, v):
        """Canonical representative of the coset v + L."""
        t = list(v)
        for b, p in zip(self.basis, self._pivots):
            q = t[p] // b[p]
            if q:
                for c in range(p, self.dim):
                    t[c] -= q * b[c]
        return tuple(t)

    def __add__(self, other):
        return Lattice(self.dim, list(self.basis) + list(other.basis))

    def includes(self, other):
        return all(self.contains(b) for b in other.basis)

    def intersect(self, other):
        rows = list(self.basis) + [tuple(-x for x in b) for b in other.basis]
        ker = left_kernel(rows, self.dim)
        out = []
        for c in ker:
            v = [0] * self.dim
            for coef, b in zip(c[: self.rank], self.basis):
                for k in range(self.dim):
                    v[k] += coef * b[k]
            out.append(v)
        return Lattice(self.dim, out)

    def smith(self):
        """Nonzero invariant factors and the transforms of the basis matrix."""
        if not self.basis:
            return [], [], [[int(i == j) for j in range(self.dim)] for i in range(self.dim)], \
                [[int(i == j) for j in range(self.dim)] for i in range(self.dim)]
        return snf(self.basis)

    def saturation(self):
        if not self.basis:
            return self
        diag, _, _, W = self.smith()
        return Lattice(self.dim, W[: len(diag)])

    def is_saturated(self):
        return self.saturation() == self

    def torsion(self):
        """Invariant factors > 1 of sat(L)/L (equivalently of the torsion of Z^m/L)."""
        if not self.basis:
            return []
        diag = self.smith()[0]
        return [d for d in diag if d > 1]

    def index_in(self, other):
        """[other : self] for self inside other of equal rank."""
        if not other.includes(self):
            raise ValueError("not a sublattice")
        if self.rank != other.rank:
            return None
        rows = [other.coordinates(b) for b in self.basis]
        if not rows:
            return 1
        diag = snf(rows)[0]
        return prod(diag)


def coset_intersection(t1, L1, t2, L2):
    """Return (point, lattice) for (t1 + L1) ∩ (t2 + L2), or None when empty."""
    rows = list(L1.basis) + [tuple(-x for x in b) for b in L2.basis]
    diff = [b - a for a, b in zip(t1, t2)]
    c = solve_left(rows, diff)
    if c is None:
        return None
    p = list(t1)
    for coef, b in zip(c[: L1.rank], L1.basis):
        for k in range(len(p)):
            p[k] += coef * b[k]
    inter = L1.intersect(L2)
    return inter.reduce(p), inter


# ---------------------------------------------------------------------------
# Partial characters


class PartialCharacter:
    """A homomorphism from a lattice L in Z^J to the nonzero rationals.

    ``face`` is the tuple of ambient variable indices J; lattice vectors are
    indexed by position in ``face``.
    """

    __slots__ = ("face", "n", "lattice", "values")

    def __init__(self, face, n, rows=(), values=(), *, check=True):
        self.face = tuple(sorted(face))
        self.n = n
        dim = len(self.face)
        rows = [tuple(int(x) for x in r) for r in rows]
        values = [Fraction(v) for v in values]
        if len(rows) != len(values):
            raise ValueError("one value per generating row is required")
        for v in values:
            if v == 0:
                raise ValueError("character values must be nonzero")
        basis, bvals, rest = _hnf_core(rows, values) if rows else ([], [], [])
        if check and any(v != 1 for v in rest):
            raise Improper("generators do not define a homomorphism")
        self.lattice = Lattice._from_hnf(dim, basis)
        self.values = tuple(bvals or ())

    @classmethod
    def trivial(cls, face, n):
        return cls(face, n)

    def __eq__(self, other):
        return (
            isinstance(other, PartialCharacter)
            and self.face == other.face
            and self.n == other.n
            and self.lattice == other.lattice
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.face, self.n, self.lattice, self.values))

    def __repr__(self):
        pairs = ", ".join(f"{list(b)}->{v}" for b, v in zip(self.lattice.basis, self.values))
        return f"PartialCharacter(face={list(self.face)}, {{{pairs}}})"

    def __call__(self, v):
        c = self.lattice.coordinates(v)
        if c is None:
            raise ValueError(f"{tuple(v)} is not in the domain lattice")
        out = ONE
        for k, val in zip(c, self.values):
            if k:
                out *= val**k
        return out

    @property
    def is_unital(self):
        return all(v == 1 for v in self.values)

    def extends(self, other):
        """True when self is an extension of ``other`` (same face)."""
        if self.face != other.face or not self.lattice.includes(other.lattice):
            return False
        return all(self(b) == v for b, v in zip(other.lattice.basis, other.values))

    def restrict(self, lattice):
        rows = list(lattice.basis)
        return PartialCharacter(self.face, self.n, rows, [self(r) for r in rows])

    def unital(self):
        return PartialCharacter(self.face, self.n, self.lattice.basis, [1] * self.lattice.rank)

    def joint(self, others):
        """The character on the sum of the domains, or None if inconsistent."""
        rows, vals = list(self.lattice.basis), list(self.values)
        for o in others:
            rows += list(o.lattice.basis)
            vals += list(o.values)
        basis, bvals, rest = _hnf_core(rows, vals) if rows else ([], [], [])
        if any(v != 1 for v in rest):
            return None
        return PartialCharacter(self.face, self.n, basis, bvals)

    def embed(self, v):
        """Lift a Z^J vector to an ambient exponent vector of length n."""
        out = [0] * self.n
        for j, x in zip(self.face, v):
            out[j] = x
        return tuple(out)


def extension_cover(rho, sigmas, max_dual=DEFAULT_MAX_DUAL):
    """Decide whether the saturated finite extensions of ``sigmas`` cover those of ``rho``.

    Extensions of rho to sat(L) form a torsor under the dual of
    D = sat(L)/L.  A sigma whose lattice stays inside sat(L) contributes
    the coset of extensions agreeing with it; a sigma reaching outside
    sat(L) has only infinite extensions and contributes nothing.  Union
    sizes are counted by inclusion-exclusion: a family of sigmas meets in
    a nonempty coset exactly when their values glue to one character, and
    then the coset has [sat(L) : L_S] elements.
    """
    for s in sigmas:
        if not s.extends(rho):
            raise NotExtension(f"{s!r} does not extend {rho!r}")
    sat = rho.lattice.saturation()
    total = rho.lattice.index_in(sat)
    if total > max_dual:
        raise BoundExceeded(f"dual group of order {total} exceeds the enumeration cap")
    finite = []
    seen = set()
    for s in sigmas:
        if sat.includes(s.lattice) and s not in seen:
            seen.add(s)
            finite.append(s)
    if not finite:
        return False
    covered = 0
    for size in range(1, len(finite) + 1):
        sign = 1 if size % 2 else -1
        for family in combinations(finite, size):
            glued = family[0].joint(family[1:])
            if glued is None:
                continue
            covered += sign * glued.lattice.index_in(sat)
    return covered == total


def rational_root(value, k):
    """The positive rational k-th root of ``value`` when it exists, else None."""
    value = Fraction(value)
    if value <= 0:
        return None
    num = _int_root(value.numerator, k)
    den = _int_root(value.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_root(a, k):
    if a < 0:
        return None
    r = round(a ** (1.0 / k)) if a < 2**52 else int(a ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == a:
            return c
    lo, hi = 0, a + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < a:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == a else None


def saturated_extensions(rho):
    """All extensions of rho to sat(L) when every one of them is rational.

    Returns a list of PartialCharacter on sat(L), or None if some extension
    needs an irrational value (then the bundle stays symbolic).
    """
    L = rho.lattice
    sat = L.saturation()
    if sat == L:
        return [rho]
    # Smith basis of sat(L) adapted to L: coordinates of L in a basis of sat(L).
    coords = [sat.coordinates(b) for b in L.basis]
    diag, U, V, W = snf(coords)
    # L is spanned by d_i * s_i where s_i = rows of W expressed in the sat basis.
    s_rows = []
    for i in range(len(diag)):
        v = [0] * L.dim
        for c, b in zip(W[i], sat.basis):
            for k in range(L.dim):
                v[k] += c * b[k]
        s_rows.append(tuple(v))
    choices = []
    for d, s in zip(diag, s_rows):
        base = rho(tuple(d * x for x in s))
        if d == 1:
            choices.append([base])
        elif d == 2:
            root = rational_root(base, 2)
            if root is None:
                return None
            choices.append([root, -root])
        else:
            return None
    out = []

    def rec(i, vals):
        if i == len(choices):
            out.append(PartialCharacter(rho.face, rho.n, s_rows, vals))
            return
        for c in choices[i]:
            rec(i + 1, vals + [c])

    rec(0, [])
    return out
