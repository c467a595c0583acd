"""Fans: finite collections of pointed cones glued along common faces.

A Fan object only normalizes its cone list; the fan axioms are checked by
validate_fan, which raises a typed error naming the offending cones.  The
predicates (completeness, regularity) assume a valid fan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import cone_from_rays, faces, intersect_cones, Polycone
from .lattice import (
    invert_unimodular_rows,
    saturate_rows,
    smith_rows,
    unimodular_complement_rows,
)


class FanError(ValueError):
    pass


class NonPointedConeError(FanError):
    def __init__(self, cone):
        super().__init__("fan cones must be pointed")
        self.cone = cone


class MissingFaceError(FanError):
    def __init__(self, cone, missing):
        super().__init__("fan is not closed under taking faces")
        self.cone = cone
        self.missing = missing


class BadIntersectionError(FanError):
    def __init__(self, first, second, intersection):
        super().__init__("cones do not meet along a common face")
        self.first = first
        self.second = second
        self.intersection = intersection


def _cone_key(c):
    return (c.dim, c.rays, c.lineality)


class Fan:
    """Cones in a common lattice, deduplicated and kept in a sorted order."""

    def __init__(self, rank, cones):
        cones = list(cones)
        for c in cones:
            if not isinstance(c, Polycone):
                raise TypeError("fan entries must be cones")
            if c.ambient_rank != rank:
                raise ValueError("cone lives in the wrong lattice")
        self.rank = rank
        self.cones = tuple(sorted(set(cones), key=_cone_key))
        self._members = frozenset(self.cones)

    def __eq__(self, other):
        return (
            isinstance(other, Fan)
            and self.rank == other.rank
            and self._members == other._members
        )

    def __hash__(self):
        return hash((self.rank, self._members))

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)

    def __contains__(self, cone):
        return cone in self._members

    def index(self, cone):
        return self.cones.index(cone)

    def __repr__(self):
        return "Fan(rank=%d, cones=%d)" % (self.rank, len(self.cones))


def validate_fan(fan):
    """Raise a FanError subclass unless the collection is a genuine fan."""
    for c in fan.cones:
        if not c.is_pointed:
            raise NonPointedConeError(c)
    lattices = {}
    for c in fan.cones:
        lattices[c] = faces(c)
        for f in lattices[c]:
            if f not in fan:
                raise MissingFaceError(c, f)
    for i, a in enumerate(fan.cones):
        for b in fan.cones[i + 1 :]:
            cap = intersect_cones(a, b)
            if cap not in lattices[a] or cap not in lattices[b]:
                raise BadIntersectionError(a, b, cap)


def complete_under_faces(fan):
    """Add every face of every cone."""
    out = set()
    for c in fan.cones:
        if not c.is_pointed:
            raise NonPointedConeError(c)
        out.update(faces(c))
    return Fan(fan.rank, out)


def is_full(fan):
    """Is some cone of top dimension present?"""
    return any(c.dim == fan.rank for c in fan.cones)


def is_complete(fan):
    """Does the support fill the whole space?  Assumes a valid fan.

    Wall criterion: a top-dimensional cone exists and every cone of
    codimension one bounds exactly two top-dimensional ones.  A conical
    support with no free walls has no boundary, hence is everything.
    """
    n = fan.rank
    if n == 0:
        return len(fan.cones) > 0
    tops = [c for c in fan.cones if c.dim == n]
    if not tops:
        return False
    lattices = {t: faces(t) for t in tops}
    for wall in fan.cones:
        if wall.dim != n - 1:
            continue
        count = sum(1 for t in tops if wall in lattices[t])
        if count != 2:
            return False
    return True


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    entries: tuple  # (cone, verdict) pairs in fan order

    @property
    def failures(self):
        return tuple(c for c, ok in self.entries if not ok)


def is_regular(fan):
    """Check that each cone's rays extend to a basis of the lattice."""
    entries = []
    for c in fan.cones:
        ok = len(c.rays) == c.dim
        if ok and c.rays:
            d = smith_rows([list(r) for r in c.rays], fan.rank)[0]
            ok = all(d[i][i] == 1 for i in range(len(c.rays)))
        entries.append((c, ok))
    return RegularityReport(
        regular=all(ok for _, ok in entries), entries=tuple(entries)
    )


@dataclass(frozen=True)
class FullificationResult:
    original: Fan
    reduced: Fan
    basis: tuple       # lattice basis of the saturated span of all rays
    complement: tuple  # completes basis to a basis of the ambient lattice
    torus_rank: int
    cone_map: tuple    # (original cone, reduced image) pairs in fan order


def fullify(fan):
    """Rewrite the fan inside the saturated span of its rays.

    The reduced fan is full in rank d = dimension of that span; the
    complement rows record a splitting of the ambient lattice, so the
    original data is the reduced part times a torus factor of rank n - d.
    """
    n = fan.rank
    all_rays = [list(r) for c in fan.cones for r in c.rays]
    basis = saturate_rows(all_rays, n)
    d = len(basis)
    w = unimodular_complement_rows(basis, n)
    winv = invert_unimodular_rows(w)
    mapping = []
    reduced_cones = []
    for c in fan.cones:
        imgs = []
        for r in c.rays:
            y = [sum(r[a] * winv[a][b] for a in range(n)) for b in range(n)]
            assert all(x == 0 for x in y[d:])
            imgs.append(tuple(y[:d]))
        rc = cone_from_rays(d, imgs)
        mapping.append((c, rc))
        reduced_cones.append(rc)
    return FullificationResult(
        original=fan,
        reduced=Fan(d, reduced_cones),
        basis=tuple(tuple(b) for b in basis),
        complement=tuple(tuple(r) for r in w[d:]),
        torus_rank=n - d,
        cone_map=tuple(mapping),
    )
