"""Closed-form kernel structure reports from arithmetic invariants.

Run:  python demos/07_kernel_reports.py
"""

from limext import (
    BrauerInvariants,
    abelian_surface_picard_rank,
    compute_r,
    invariant_report,
    jacobian_example_report,
    k3_abelian_structure,
    kernel_structure,
)

# The key rank: special Picard number minus generic Picard number minus
# component count plus one.
r = compute_r(rho_special=4, rho_generic=1, components=1)
print("r =", r)

# The kernel of reduction splits by (s, t) with s + t = r.
k = kernel_structure(s=1, t=2, p=19)
print("kernel:", k.display())
print("corank at l != 19:", k.corank(3), "   corank at 19:", k.corank(19))

# Full report from a bag of invariants.
rep = invariant_report(BrauerInvariants(
    p=19, f=1, h01=2, h02=1, rho_generic=1, rho_special=4,
    components=1, s=1, special_fiber_brauer_finite=True,
))
print("\n--- report ---")
print(rep.summary())

# The genus-2 curve y^2 = x^5 - 1 over Z_p, p = -1 mod 5: the package
# assembles the same report from the surface facts alone.
print("\n--- jacobian family at p = 19 ---")
print(jacobian_example_report(19).summary())

# Abelian / K3 families over the p-adic integers: one-dimensional H^2(X, O)
# pins s = 1 whenever r > 0.
for r in (0, 1, 3):
    print(f"\nabelian/K3 family with r = {r}:",
          k3_abelian_structure(r, 19).display())

# Picard rank of an abelian surface over the prime field, by point counts.
print("\nsimple surface:", abelian_surface_picard_rank("simple"))
print("E1 x E2, equal counts:",
      abelian_surface_picard_rank("product", 20, 20, 19))
print("E1 x E2, different counts:",
      abelian_surface_picard_rank("product", 18, 21, 19))
