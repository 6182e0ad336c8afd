"""Walk through a small unital binomial ideal: parse, witnesses, decompose, certify."""
from mesoprime.parse import parse
from mesoprime.decompose import mesoprimary_decomposition, ideal_taxonomy
from mesoprime.witness import enumerate_witnesses
from mesoprime.io_format import format_ideal

doc = parse("ring: x, y\nideal: y - x^2*y, y^2 - x*y^2, y^3\n")
I = doc.ideal()
print("input:", format_ideal(I))
print("taxonomy:", ideal_taxonomy(I))  # cellular but not mesoprimary

# witnesses come in classes; one record per class
for r in enumerate_witnesses(I):
    print("  witness", r.w, "face", r.P.J, "key" if r.is_key else "non-key",
          "character" if r.is_character else "false")

D = mesoprimary_decomposition(I)
for c in D.components:
    print("component", format_ideal(c.ideal))
print("certificate:", D.certificate.verdict)
