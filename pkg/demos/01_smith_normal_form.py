"""Smith normal form and what it buys: cokernels and exactness checking.

Run:  python demos/01_smith_normal_form.py
"""

from limext import (
    GroupPresentation,
    IntMatrix,
    check_exact_at,
    cokernel_structure,
    smith_normal_form,
)

# Diagonalize an integer matrix with unimodular transforms on both sides.
m = IntMatrix.from_rows([[2, 4], [6, 8]])
u, d, v = smith_normal_form(m)
print("M =", m.to_rows())
print("D =", d.to_rows(), "   (U M V = D, U and V unimodular)")
print("det U =", u.determinant(), " det V =", v.determinant())

# The diagonal reads off the cokernel: Z^2 / im(M).
print("\nZ^2 / M Z^2  =", cokernel_structure(m))

# A presentation: two generators x, y with the single relation 2x = 0.
pres = GroupPresentation(2, IntMatrix.from_rows([[2, 0]]))
print("<x, y | 2x>  =", pres.structure())

# Exactness of  Z --(1,0)--> Z^2 --second projection--> Z  in the middle.
include_first = IntMatrix.from_rows([[1], [0]])
project_second = IntMatrix.from_rows([[0, 1]])
print("\nexact at Z^2:", check_exact_at(include_first, project_second))

# Doubling then collapsing to zero is not exact: the image misses half the
# kernel.
double = IntMatrix.from_rows([[2]])
to_zero = IntMatrix(0, 1, ())
print("exact at Z (x2 then 0):", check_exact_at(double, to_zero))
