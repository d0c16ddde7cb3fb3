"""Classifying p-local submodules of Q^r from tagged generators.

Run:  python demos/05_submodules.py
"""

from fractions import Fraction

from limext import TaggedGenerators, classify_submodule, extension_shape

# Inside Q^3: one full Q-line along (1, 1, 0), plus two Z_(5)-lines.
gens = TaggedGenerators.build(3, 5, [
    ([1, 1, 0], "divisible"),
    ([1, 0, 0], "local"),
    ([0, 0, Fraction(1, 2)], "local"),
])
out = classify_submodule(gens)
print("submodule type: extension of Q^t by Z_(5)^s with (s, t) =",
      (out.s, out.t))

# The invariants don't care about the chosen coordinates: shear the ambient
# space and classify again.
sheared = TaggedGenerators.build(3, 5, [
    ([1, 1, 0], "divisible"),
    ([1, 0, 0], "local"),
    ([Fraction(3, 7), Fraction(3, 7), Fraction(1, 2)], "local"),
])
out2 = classify_submodule(sheared)
print("after a rational change of basis:   (s, t) =", (out2.s, out2.t))

# The same (s, t) bookkeeping describes the degree-two cohomology shape.
shape = extension_shape(r=3, s=1)
print("\nextension shape record for (r, s) = (3, 1):")
for key, value in shape.items():
    print(f"  {key}: {value}")
