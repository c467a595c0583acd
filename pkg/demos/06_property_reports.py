"""Property reports: cited verdicts for a fan-built scheme over a base."""

from fanscheme import (
    BaseDescriptor,
    DimRange,
    Fan,
    build_atlas,
    complete_under_faces,
    cone_from_rays,
    dimension_bounds,
    property_report,
)


def show(records, names):
    for rec in records:
        if rec.property in names:
            line = "%-22s %-8s [%s]" % (rec.property, rec.verdict, rec.citation)
            if rec.interval is not None:
                line += " " + str(rec.interval.to_json())
            print(" ", line)


# Over a field, the plane fan gives a smooth proper surface.
plane = complete_under_faces(Fan(2, [
    cone_from_rays(2, [(1, 0), (0, 1)]),
    cone_from_rays(2, [(0, 1), (-1, -1)]),
    cone_from_rays(2, [(-1, -1), (1, 0)]),
]))
field = BaseDescriptor.field()
print("plane fan over a field:")
show(property_report(plane, field),
     {"morphism.proper", "morphism.regular", "scheme.regular",
      "scheme.integral", "scheme.dim"})

# The singular wedge keeps properness questions separate from smoothness.
wedge = complete_under_faces(Fan(2, [cone_from_rays(2, [(1, 0), (1, 2)])]))
print("wedge fan over a field:")
show(property_report(wedge, field),
     {"morphism.proper", "morphism.regular", "scheme.regular",
      "scheme.normal", "scheme.cohen_macaulay", "scheme.dim"})

# Every verdict is three-valued; an unconstrained base mostly says unknown,
# while fiberwise facts stay crisp.
print("wedge fan over an unconstrained base:")
show(property_report(wedge, BaseDescriptor()),
     {"morphism.flat", "morphism.quasicompact", "scheme.noetherian",
      "scheme.reduced", "scheme.dim"})

# Charts and transitions for the line fan: two affine lines glued along
# the punctured line, plus the torus chart for the zero cone.
line = complete_under_faces(Fan(1, [
    cone_from_rays(1, [(1,)]),
    cone_from_rays(1, [(-1,)]),
]))
atlas = build_atlas(line)
print("line fan atlas:")
for lab, monoid in enumerate(atlas.charts):
    print("  chart", lab, "generated by", monoid.generators)
for i, j, cert in atlas.transitions:
    print("  gluing %d into %d inverts %s" % (j, i, cert.element))

# Dimension bounds track the base; without local noetherianity the upper
# bound degrades but never disappears.
wild = BaseDescriptor(dim=DimRange.between(0, 3))
print("wedge fan dimension over a dim-[0,3] base, noetherianity unknown:",
      dimension_bounds(wedge, wild).to_json())
tame = BaseDescriptor(locally_noetherian="yes", dim=DimRange.between(0, 3))
print("same base but locally noetherian:",
      dimension_bounds(wedge, tame).to_json())
