"""p-adic valuation bounds and the principal-unit torsion computation.

Run:  python demos/06_valuations.py
"""

from limext import (
    TruncatedPolyRing,
    check_binomial_lemma,
    unit_power_check,
    vp_binomial,
    vp_factorial,
)

# Legendre's floor-sum formula.
print("v_2(10!) =", vp_factorial(2, 10))
print("v_3(9!)  =", vp_factorial(3, 9))

# Valuations of binomial coefficients count base-p carries.
print("\nv_2 C(8, 2) =", vp_binomial(2, 8, 2), "   (28 = 4 * 7)")
print("v_2 C(8, 3) =", vp_binomial(2, 8, 3), "   (56 = 8 * 7)")

# The key bound: v_p C(p^(n+s), u) > n for all 0 < u < p^s.
for p, n, s in ((2, 1, 2), (3, 2, 1), (5, 1, 1)):
    print(f"bound holds for p={p}, n={n}, s={s}:",
          check_binomial_lemma(p, n, s))

# Consequence in a truncated polynomial ring over Z/p^n: the principal unit
# 1 + p*y raised to p^(n+s) collapses to 1 once p^s >= n.
ring = TruncatedPolyRing(p=2, n=3, degree_bound=10)
print("\n(1 + 2y)^(2^5) == 1 in (Z/8)[y]/(y^11):",
      unit_power_check(ring, s=2))

# The first few powers, to see the collapse happen.
x = ring.principal_unit()
power = ring.one()
for e in (1, 2, 4, 8, 16, 32):
    power = ring.power(x, e)
    nonzero = {i: c for i, c in enumerate(power) if c}
    print(f"  (1 + 2y)^{e:<2} has nonzero coefficients {nonzero}")
