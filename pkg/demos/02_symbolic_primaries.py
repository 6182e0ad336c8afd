"""A single mesoprimary component that splits into eight primary ideals over Q."""
from mesoprime.parse import parse
from mesoprime.decompose import mesoprimary_decomposition, component_bundle, primary_expansion
from mesoprime.verify import intersect, equal
from mesoprime.io_format import format_ideal

I = parse("ring: a, b, c, d, e\nideal: b - e, e^2 - 1, d^2 - 1, a^2 - 1, c^3\n").ideal()
D = mesoprimary_decomposition(I)
print(len(D), "mesoprimary component(s)")

b = component_bundle(D.components[0])
print("torsion invariants", b.group_invariants, "->", b.count, "primary fibers")
for F in b.fibers:
    print("  ", format_ideal(F))

# the fibers really do cut out the input again
print("intersection equals input:", equal(intersect(primary_expansion(D)), I))

# an irrational character stays symbolic
J = parse("ring: x\nideal: x^2 - 2\n").ideal()
print("x^2 - 2 fibers:", component_bundle(mesoprimary_decomposition(J).components[0]).fibers)
