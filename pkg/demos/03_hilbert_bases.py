"""Affine monoids: Hilbert bases, membership, integral closure.

The lattice points of a pointed rational cone form a monoid with a unique
minimal generating set, its Hilbert basis.  Monoids given by arbitrary
generators support exact membership tests and closure checks too.
"""

from fanscheme import (
    AffineMonoid,
    cone_from_rays,
    dual_cone,
    dual_monoid,
    hilbert_basis,
    is_integrally_closed,
    monoid_contains,
    monoid_of_differences,
)

# Lattice points of the wedge spanned by (1, 0) and (1, 2): the ray
# generators alone miss (1, 1), which the Hilbert basis supplies.
wedge = cone_from_rays(2, [(1, 0), (1, 2)])
points = dual_monoid(dual_cone(wedge))
print("hilbert basis of the wedge:", points.hilbert_pointed)

# The chart monoid of the same cone lives on the dual side.
chart = dual_monoid(wedge)
print("dual monoid generators:", chart.generators)

# A numeric semigroup: 2 and 3 generate every integer from 2 on.
semigroup = AffineMonoid.from_generators(1, [(2,), (3,)])
for k in range(6):
    print("contains", k, ":", monoid_contains(semigroup, (k,)))

# It is not integrally closed: 1 lies in both the group of differences
# and the cone, but not in the monoid.
print("2, 3 semigroup closed:", is_integrally_closed(semigroup))
print("wedge points closed:", is_integrally_closed(points))

# 2N inside the even lattice IS closed: closure happens inside the
# monoid's own group of differences, which here is 2Z.
even = AffineMonoid.from_generators(1, [(2,)])
print("2N closed in its own group:", is_integrally_closed(even))

# Inverting a generator extends the monoid; membership follows suit.
extension = monoid_of_differences(semigroup, invert=[(2,)])
print("after inverting 2:", extension.result.generators)
print("extension contains -4:", monoid_contains(extension.result, (-4,)))

# Monoids with units: hilbert_basis splits off the invertible directions.
halfplane = cone_from_rays(2, [(1, 0), (-1, 0), (0, 1)])
upper = dual_monoid(dual_cone(halfplane))
print("halfplane points, pointed part:", upper.hilbert_pointed,
      " units:", upper.hilbert_lineality)
print("flattened generating set:", hilbert_basis(upper))
