"""Rational polyhedral cones: canonical form, duality, faces.

A cone is stored in a split canonical form: primitive extremal rays plus
a basis of its lineality space, together with the same data for the dual.
Equal cones compare equal no matter which generators built them.
"""

from fanscheme import cone_from_rays, contains_point, dual_cone, faces, intersect_cones

wedge = cone_from_rays(2, [(2, 0), (3, 6), (1, 1)])  # (1, 1) is redundant
print("rays:", wedge.rays)
print("normals:", wedge.normals)
print("dim:", wedge.dim, " pointed:", wedge.is_pointed)

# Duality is an involution on the nose, not just up to relabeling.
print("dual rays:", dual_cone(wedge).rays)
print("double dual equals the cone:", dual_cone(dual_cone(wedge)) == wedge)

# Membership is a handful of exact inequalities.
print("(5, 3) inside:", contains_point(wedge, (5, 3)))
print("(1, 3) inside:", contains_point(wedge, (1, 3)))

# A cone containing a line keeps the line in its lineality part.
slab = cone_from_rays(2, [(1, 0), (-1, 0), (0, 1)])
print("slab rays:", slab.rays, " lineality:", slab.lineality)
print("slab is pointed:", slab.is_pointed)

# Intersections stay exact; here two wedges meet along a ray.
other = cone_from_rays(2, [(1, 2), (-1, 1)])
meet = intersect_cones(wedge, other)
print("intersection rays:", meet.rays)

# The face lattice of a pointed cone, each face with a supporting
# functional that vanishes exactly on it.
lattice = faces(wedge)
for f in sorted(lattice, key=lambda c: (c.dim, c.rays)):
    print("face dim", f.dim, "rays", f.rays, "witness", lattice.witnesses[f])
