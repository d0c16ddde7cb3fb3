"""Derived limits of constant-rank inverse systems of free groups.

Run:  python demos/04_derived_limits.py
"""

from limext import (
    InverseSystemSpec,
    drop_prefix,
    is_mittag_leffler,
    lim1_classify,
    lim_structure,
    validate_system,
)

# Rank 2, one arbitrary invertible prefix map, then the diagonal (1, 6)
# repeating forever.
spec = InverseSystemSpec.build(
    rank=2,
    prefix=[[[2, 1], [0, 3]]],
    tail=[[1, 6]],
)
v = validate_system(spec)
print("cokernel orders per transition:", v.cokernel_orders)
print("prime support:", v.cokernel_prime_support,
      " single-prime:", v.p_group_prime)

print("\nlim  =", lim_structure(v))
print("Mittag-Leffler?", is_mittag_leffler(v))

cls = lim1_classify(v, "recursive")
print("lim^1 rational part:", cls.rational)
print("lim^1 multiplicities: n_2 =", cls.multiplicity(2),
      " n_3 =", cls.multiplicity(3),
      " n_5 =", cls.multiplicity(5),
      " n_7 =", cls.multiplicity(7))

# Two independent classification routes agree.
print("recursive == ext oracle:",
      lim1_classify(v, "recursive") == lim1_classify(v, "ext_oracle"))

# Dropping the prefix is cofinal: nothing changes.
print("prefix dropped, same class:",
      lim1_classify(drop_prefix(spec, 1)) == cls)

# A single-prime system: all cokernels are 5-groups, and the multiplicity
# at 5 drops strictly below the common multiplicity elsewhere.
single = InverseSystemSpec.build(2, [], [[5, 25]])
cls = lim1_classify(single)
print("\nsystem diag(5, 25):  n_5 =", cls.multiplicity(5),
      " n_2 = n_3 = ... =", cls.multiplicity(2))
