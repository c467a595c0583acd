"""Rational polyhedral cones in a canonical split representation.

A cone is stored four ways at once: generators of its pointed part (rays)
and of its lineality space, plus the same data for the dual cone (normals
and dual_lineality).  All four components are canonical, so dataclass
equality is geometric equality of cones.

The conversion between the generator and inequality sides is an
incremental double description computation.  Extremality of a candidate
ray is decided by an exact rank test on its tight constraint set, never by
adjacency bookkeeping, so redundant input never leaks into the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    _as_int,
    dot,
    identity_rows,
    perp_rows,
    primitive_vector,
    rank_rows,
)


@dataclass(frozen=True)
class Polycone:
    """Cone in canonical split form.

    rays: primitive representatives of the extremal rays of the pointed
        part, each orthogonal to the lineality span, sorted.
    lineality: canonical basis of the saturated lineality lattice.
    normals / dual_lineality: the same two fields for the dual cone.  They
        cut the cone out: x lies in the cone iff <x, u> >= 0 for every u in
        normals and <x, w> == 0 for every w in dual_lineality.
    """

    ambient_rank: int
    rays: tuple
    lineality: tuple
    normals: tuple
    dual_lineality: tuple

    @property
    def dim(self):
        return self.ambient_rank - len(self.dual_lineality)

    @property
    def lineality_rank(self):
        return len(self.lineality)

    @property
    def is_pointed(self):
        return not self.lineality

    @property
    def is_full(self):
        return not self.dual_lineality

    def generator_rows(self):
        """Integer generators: rays plus both signs of the lineality basis."""
        gens = [tuple(r) for r in self.rays]
        for l in self.lineality:
            gens.append(tuple(l))
            gens.append(tuple(-x for x in l))
        return gens


def _clean_constraints(constraints):
    out = []
    seen = set()
    for c in constraints:
        if not any(c):
            continue
        p = primitive_vector(c)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _extremal_filter(rays, processed, lin_rank, n):
    """Keep one representative per extremal ray.

    A candidate r spans an extremal ray of the current cone exactly when
    the kernel of its tight constraints has dimension lin_rank + 1; two
    candidates lie on the same extremal ray (mod lineality) exactly when
    their tight sets agree.
    """
    kept = []
    seen = set()
    for r in rays:
        tight = [c for c in processed if dot(r, c) == 0]
        if n - rank_rows(tight, n) != lin_rank + 1:
            continue
        key = frozenset(tight)
        if key in seen:
            continue
        seen.add(key)
        kept.append(r)
    return kept


def _dual_generator_sets(constraints, n):
    """Generators of {x : <x, c> >= 0 for all c in constraints}.

    Returns (lineality, rays): the canonical saturated basis of the
    lineality lattice, and sorted primitive extremal rays of the pointed
    part, each orthogonal to the lineality span.
    """
    cons = _clean_constraints(constraints)
    lin = [tuple(r) for r in identity_rows(n)]
    rays = []
    processed = []
    for g in cons:
        lin_vals = [dot(l, g) for l in lin]
        if any(lin_vals):
            # g cuts the lineality space: one basis vector becomes a ray,
            # the rest get flattened onto the hyperplane of g
            i0 = next(i for i, v in enumerate(lin_vals) if v)
            l0, c0 = lin[i0], lin_vals[i0]
            if c0 < 0:
                l0 = tuple(-x for x in l0)
                c0 = -c0
            new_lin = []
            for i, (l, v) in enumerate(zip(lin, lin_vals)):
                if i == i0:
                    continue
                new_lin.append(primitive_vector(tuple(c0 * a - v * b for a, b in zip(l, l0))))
            new_rays = [l0]
            for r in rays:
                v = dot(r, g)
                vec = tuple(c0 * a - v * b for a, b in zip(r, l0))
                if any(vec):
                    new_rays.append(primitive_vector(vec))
            lin, rays = new_lin, new_rays
        else:
            plus, zero, minus = [], [], []
            for r in rays:
                v = dot(r, g)
                if v > 0:
                    plus.append((r, v))
                elif v < 0:
                    minus.append((r, v))
                else:
                    zero.append(r)
            new_rays = [r for r, _ in plus] + zero
            for rp, vp in plus:
                for rm, vm in minus:
                    vec = tuple(vp * a - vm * b for a, b in zip(rm, rp))
                    if any(vec):
                        new_rays.append(primitive_vector(vec))
            rays = new_rays
        processed.append(g)
        rays = _extremal_filter(rays, processed, len(lin), n)

    # canonical reassembly: the lineality from scratch as a kernel lattice,
    # then one canonical primitive representative per extremal ray, living
    # in the orthogonal complement of the lineality
    lin_basis = [tuple(r) for r in perp_rows(processed, n)]
    canon = []
    seen = set()
    for r in rays:
        tight = [c for c in processed if dot(r, c) == 0]
        key = frozenset(tight)
        if key in seen:
            continue
        seen.add(key)
        basis = perp_rows(list(tight) + lin_basis, n)
        assert len(basis) == 1, "extremal ray is not one-dimensional mod lineality"
        rep = tuple(basis[0])
        for c in processed:
            v = dot(rep, c)
            if v:
                if v < 0:
                    rep = tuple(-x for x in rep)
                break
        canon.append(rep)
    canon.sort()
    return tuple(lin_basis), tuple(canon)


def _validated_gens(ambient_rank, generators):
    gens = []
    seen = set()
    for g in generators:
        g = tuple(g)
        if len(g) != ambient_rank:
            raise ValueError("generator has wrong length")
        for x in g:
            _as_int(x)
        if not any(g):
            continue
        p = primitive_vector(g)
        if p not in seen:
            seen.add(p)
            gens.append(p)
    return gens


def cone_from_rays(ambient_rank, generators):
    """Cone generated by integer vectors; redundant input is fine.

    Both sides of the stored form are recomputed canonically, so == on the
    results means the generated cones are equal as sets.
    """
    n = ambient_rank
    gens = _validated_gens(n, generators)
    dlin, drays = _dual_generator_sets(gens, n)
    cons = list(drays)
    for w in dlin:
        cons.append(w)
        cons.append(tuple(-x for x in w))
    lin, rays = _dual_generator_sets(cons, n)
    return Polycone(n, rays, lin, drays, dlin)


def dual_cone(c):
    """The dual cone {u : <u, x> >= 0 on c}, rebuilt from generators."""
    gens = [tuple(u) for u in c.normals]
    for w in c.dual_lineality:
        gens.append(tuple(w))
        gens.append(tuple(-x for x in w))
    return cone_from_rays(c.ambient_rank, gens)


def intersect_cones(a, b):
    """Intersection, computed on the inequality side."""
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient ranks differ")
    n = a.ambient_rank
    cons = [tuple(u) for u in a.normals] + [tuple(u) for u in b.normals]
    for w in tuple(a.dual_lineality) + tuple(b.dual_lineality):
        cons.append(tuple(w))
        cons.append(tuple(-x for x in w))
    lin, rays = _dual_generator_sets(cons, n)
    gens = list(rays)
    for l in lin:
        gens.append(l)
        gens.append(tuple(-x for x in l))
    dlin, drays = _dual_generator_sets(gens, n)
    return Polycone(n, rays, lin, drays, dlin)


def contains_point(cone, point):
    """Exact membership; point entries may be ints or Fractions."""
    if len(point) != cone.ambient_rank:
        raise ValueError("point has wrong length")
    return all(dot(point, u) >= 0 for u in cone.normals) and not any(
        dot(point, w) for w in cone.dual_lineality
    )


def linear_span_rows(c):
    """Saturated basis of the linear span of the cone."""
    return perp_rows([list(w) for w in c.dual_lineality], c.ambient_rank)


class FaceLattice:
    """All faces of a pointed cone, with exact supporting covectors.

    witnesses[f] is a covector u of the dual cone such that f is exactly
    {x in cone : <u, x> = 0}; the top face (the cone itself) carries u = 0.
    """

    def __init__(self, cone, all_faces, witnesses):
        self.cone = cone
        self.faces = all_faces
        self.witnesses = witnesses

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def __contains__(self, f):
        return f in self.witnesses

    def leq(self, f, g):
        """Is f a face of g, both taken inside this lattice?"""
        if f not in self.witnesses or g not in self.witnesses:
            raise KeyError("not faces of this cone")
        return set(f.rays) <= set(g.rays)


def faces(c):
    """Face lattice of a pointed cone.

    Every face is an intersection of facets, so the ray subsets of faces
    form the closure of the full ray set under intersection with the facet
    ray sets.  Cones with lineality are rejected; nothing downstream needs
    their faces.
    """
    if c.lineality:
        raise ValueError("face lattice requires a pointed cone")
    n = c.ambient_rank
    facet_sets = [
        frozenset(r for r in c.rays if dot(r, u) == 0) for u in c.normals
    ]
    full = frozenset(c.rays)
    found = {full, frozenset()}
    frontier = [full]
    while frontier:
        cur = frontier.pop()
        for fs in facet_sets:
            nxt = cur & fs
            if nxt not in found:
                found.add(nxt)
                frontier.append(nxt)
    face_list = []
    witnesses = {}
    for rayset in found:
        face = cone_from_rays(n, sorted(rayset))
        smax = [u for u in c.normals if all(dot(r, u) == 0 for r in rayset)]
        if smax:
            w = tuple(sum(col) for col in zip(*smax))
        else:
            w = (0,) * n
        face_list.append(face)
        witnesses[face] = w
    face_list.sort(key=lambda f: (f.dim, f.rays))
    return FaceLattice(c, tuple(face_list), witnesses)
