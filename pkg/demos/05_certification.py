"""Certify decompositions two ways and watch a wrong one get rejected."""
from mesoprime.parse import parse
from mesoprime.decompose import decompose, Decomposition
from mesoprime.verify import certify, grid_oracle, nf_agrees
from mesoprime.errors import CertificationFailed
from mesoprime.io_format import format_ideal

I = parse("ring: x, y, z\nideal: x*z - y*z\n").ideal()
for mode in ("coprincipal", "characteristic", "mesoprimary", "cellular"):
    D = decompose(I, mode)
    print(f"{mode:>14}:", ", ".join(format_ideal(A) for A in D.ideals()), "->", D.certificate.verdict)

# drop a component: the intersection grows and the referee notices
D = decompose(I, "mesoprimary")
bad = Decomposition(I, D.mode, D.components[:1])
try:
    certify(bad)
except CertificationFailed as exc:
    print("rejected:", exc)

# normal forms agree with brute-force union-find on a finite grid
part = grid_oracle(I.gens, 6, I.ring.n)
print("grid check mismatch:", nf_agrees(I, part))
