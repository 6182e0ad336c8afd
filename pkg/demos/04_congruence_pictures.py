"""Congruences on N^2 drawn as text grids, plus the nil/augmentation split."""
from mesoprime.parse import parse
from mesoprime.diagram import diagram, render_text
from mesoprime.decompose import maximalize, congruence_decomposition
from mesoprime.io_format import format_ideal

I = parse("ring: x, y\nideal: x^2 - x*y, x*y - y^2, x^3, y^3\n").ideal()
print(render_text(diagram(I, 4)))  # nil shown as the infinity mark

D = congruence_decomposition(I)
for k, c in enumerate(D.components):
    flag = " (redundant)" if k in D.redundant else ""
    print("coprincipal congruence", format_ideal(c.ideal) + flag)

# a unital ideal whose congruence has a nil that the ideal itself misses
s = maximalize(parse("ring: x, y\nideal: x - y, x - x^2\n").ideal())
print("maximal:", format_ideal(s.maximal), " augmentation:", format_ideal(s.augmentation))
