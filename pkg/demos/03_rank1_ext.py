"""Rank-1 torsion-free subgroups of Q and their Ext groups against Z.

Run:  python demos/03_rank1_ext.py
"""

from limext import (
    EProfile,
    INFINITE,
    eprofile_from_multipliers,
    ext_to_z,
    hom_to_z,
    is_free,
    quotient_mod_z,
)

# A multiplier sequence describes the colimit  Z -> Z -> Z -> ...  dual to a
# rank-1 inverse system; primes in the repeating part get inverted fully.
profile = eprofile_from_multipliers(prefix=[6], period=[5])
print("colim along 6, 5, 5, 5, ...  has profile", profile.to_json())
print("free?", is_free(profile))

# The three landmark profiles and their Ext groups.
cases = [
    ("Z[1/5]        ", EProfile.inverted_profile([5])),
    ("Z localized at 5", EProfile.localized_profile(5)),
    ("exponent 1 a.e.", EProfile.build(1)),
    ("Z              ", EProfile.z_profile()),
]
for name, prof in cases:
    print(f"\nM = {name}")
    print("  Hom(M, Z) =", hom_to_z(prof))
    print("  Ext(M, Z) =", ext_to_z(prof))

# M/Z is a direct sum of cyclic and Pruefer pieces read off the exponents.
mixed = EProfile.build(0, {3: 2, 5: INFINITE})
print("\nM with e_3 = 2, e_5 = infinity:   M/Z =", quotient_mod_z(mixed))
