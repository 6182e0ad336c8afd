"""Key, non-key, character and false witnesses on a handful of small ideals."""
from mesoprime.parse import parse
from mesoprime.witness import is_witness, is_key_witness, classify, associated_objects
from mesoprime.io_format import format_ideal

def ideal(text, names):
    return parse(f"ring: {names}\nideal: {text}\n").ideal()

A = ideal("x^2 - x*y, x*y - y^2", "x, y")
print(format_ideal(A))
print("  e_x key:", is_key_witness(A, (1, 0), ()), " 0 witness:", is_witness(A, (0, 0), ()))

B = ideal("x^2-x*y, y^2-x*y, x*(z-1), y*(w-1)", "x, y, z, w")
J = (2, 3)  # z and w inverted
print(format_ideal(B))
print("  0 witness:", is_witness(B, (0,) * 4, J), " key:", is_key_witness(B, (0,) * 4, J))

# same monoid data, different coefficients: character vs false
A1 = ideal("x*(z-1), y*(z+1), z^2-1, x^2, y^2", "x, y, z")
A2 = ideal("x*(z-1), y*(z-1), z^2-1, x^2, x*y, y^2", "x, y, z")
print("  0 in", format_ideal(A1), "->", classify(A1, (0, 0, 0), (2,)))
print("  0 in", format_ideal(A2), "->", classify(A2, (0, 0, 0), (2,)))

obj = associated_objects(B)
print("associated mesoprimes:")
for m in obj["mesoprimes"]:
    mark = "*" if m in obj["truly_associated"] else " "
    print(" ", mark, format_ideal(m.ideal))
