"""Exact integer linear algebra: normal forms, kernels, saturation.

Vectors are rows throughout, and a matrix's rows span a sublattice.
Everything here is computed without a single floating point number.
"""

from fanscheme import IntMatrix
from fanscheme.lattice import (
    hermite_normal_form,
    invariant_factors,
    kernel_basis,
    lattice_member_rows,
    saturate_sublattice,
    smith_normal_form,
)

m = IntMatrix.from_rows([[2, 4, 4], [6, 6, 12], [10, 4, 16]])
print("matrix rows:", m.row_list())

# Hermite form: a canonical, staircase-shaped basis of the row lattice.
h, u = hermite_normal_form(m)
print("hermite form:", h.row_list())
print("transform is unimodular and u * m == h:", (u * m) == h)

# Smith form reveals the quotient group structure of the ambient lattice
# modulo the row lattice: one invariant factor per diagonal entry.
d, p, q = smith_normal_form(m)
print("smith diagonal:", d.row_list())
print("invariant factors:", invariant_factors(m))
print("p * m * q == d:", (p * m) * q == d)

# The left kernel catches every integer relation between the rows.
relations = kernel_basis(m)
print("row relations:", relations.row_list())
print("relations * m vanishes:", (relations * m).row_list())

# Saturation: the largest sublattice with the same rational span.  The
# index of the original inside it is the product of the invariant factors.
doubled = IntMatrix.from_rows([[2, 0, 2], [0, 4, 4]])
print("saturation of", doubled.row_list(), "is",
      saturate_sublattice(doubled).row_list())

# Membership is decided exactly: (1, 2, 3) is a combination of the rows,
# (1, 1, 1) is not.
rows = [[1, 0, 1], [0, 2, 2]]
print("(1, 2, 3) in lattice:", lattice_member_rows(rows, 3, (1, 2, 3)))
print("(1, 1, 1) in lattice:", lattice_member_rows(rows, 3, (1, 1, 1)))
