"""Monoid algebras: exact coefficient rings, monomials, base change."""

from fractions import Fraction

from fanscheme import (
    AffineMonoid,
    AlgebraElement,
    CoeffRing,
    augmentation,
    base_change,
    cone_from_rays,
    dual_monoid,
    exp_map,
)

ZZ = CoeffRing.integers()
QQ = CoeffRing.rationals()
mod6 = CoeffRing.integers_mod(6)

# Monomials live over a monoid; exponents are checked for membership.
quadrant = AffineMonoid.from_generators(2, [(1, 0), (0, 1)])
x = exp_map(ZZ, quadrant, (1, 0))
y = exp_map(ZZ, quadrant, (0, 1))
p = (x + y) * (x + y)
print("(x + y)^2 =", p.terms)

# Coefficients normalize per ring: 8 = 2 in Z/6, and Q keeps fractions.
q = AlgebraElement.from_terms(mod6, quadrant, [((1, 1), 8)])
print("8·xy over Z/6:", q.terms)
r = AlgebraElement.from_terms(QQ, quadrant, [((1, 0), Fraction(1, 2))])
print("half of x over Q:", r.terms)

# Laurent behavior comes from monoids with units, not from a new type:
# over the chart monoid of a ray, t and its inverse coexist and cancel.
line = dual_monoid(cone_from_rays(1, []))  # dual of the origin: all of Z
t = exp_map(ZZ, line, (1,))
tinv = exp_map(ZZ, line, (-1,))
print("(t - 1/t)(t + 1/t) =", ((t - tinv) * (t + tinv)).terms)
print("t * 1/t =", (t * tinv).terms)

# The augmentation collapses every monomial onto its coefficient.
print("augmentation of (x + y)^2:", augmentation(p))

# Base change rides a coefficient morphism; here integers to Z/2.
three = AlgebraElement.from_terms(ZZ, quadrant, [((1, 0), 3), ((0, 1), 2)])
print("3x + 2y over Z/2:", base_change(three, CoeffRing.integers_mod(2)).terms)
