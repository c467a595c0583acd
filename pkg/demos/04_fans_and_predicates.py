"""Fans: validation with typed errors, completeness, regularity, torus factors."""

from fanscheme import (
    Fan,
    FanError,
    complete_under_faces,
    cone_from_rays,
    fullify,
    is_complete,
    is_full,
    is_regular,
    validate_fan,
)

# The three maximal cones of the projective plane fan, closed under faces.
tops = [
    cone_from_rays(2, [(1, 0), (0, 1)]),
    cone_from_rays(2, [(0, 1), (-1, -1)]),
    cone_from_rays(2, [(-1, -1), (1, 0)]),
]
fan = complete_under_faces(Fan(2, tops))
validate_fan(fan)
print("cones:", len(fan.cones))
print("complete:", is_complete(fan), " full:", is_full(fan))
print("regular:", is_regular(fan).regular)

# Remove one ray and validation pinpoints the missing face.
broken = Fan(2, [c for c in fan.cones if c.rays != ((1, 0),)])
try:
    validate_fan(broken)
except FanError as e:
    print("broken fan rejected:", e)

# A singular wedge: index two in the lattice, so not regular.
wedge_fan = complete_under_faces(Fan(2, [cone_from_rays(2, [(1, 0), (1, 2)])]))
report = is_regular(wedge_fan)
print("wedge fan regular:", report.regular,
      " offending cones:", [c.rays for c in report.failures])
print("wedge fan complete:", is_complete(wedge_fan))

# A fan whose rays span only a line in rank two: fullify splits off the
# torus factor and rewrites the fan inside the span of its rays.
thin = complete_under_faces(Fan(2, [cone_from_rays(2, [(2, 4)])]))
result = fullify(thin)
print("span basis:", result.basis, " torus rank:", result.torus_rank)
print("reduced fan rank:", result.reduced.rank,
      " cones:", [c.rays for c in result.reduced.cones])
for old, new in result.cone_map:
    print("  cone", old.rays, "becomes", new.rays)
