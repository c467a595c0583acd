"""Independent reference implementations used to check the package.

Everything here is deliberately written from scratch on top of Fractions
and brute force, not by calling back into the package, so a bug in the
package cannot hide behind itself.
"""

from fractions import Fraction
from itertools import product


def mat_mult(a, b, b_cols):
    """Product of two row-lists; b_cols disambiguates empty b."""
    if a and b:
        assert len(a[0]) == len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(b_cols)]
        for i in range(len(a))
    ]


def frac_det(rows):
    """Determinant over QQ by plain Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def is_unimodular(rows):
    return abs(frac_det(rows)) == 1


def frac_row_space_contains(rows, v):
    """Is v in the QQ-span of the rows?  Gauss-Jordan from scratch."""
    work = [[Fraction(x) for x in r] for r in rows]
    target = [Fraction(x) for x in v]
    used = []
    for r in work:
        r = list(r)
        for piv_col, piv_row in used:
            if r[piv_col]:
                f = r[piv_col]
                r = [x - f * y for x, y in zip(r, piv_row)]
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is not None:
            inv = 1 / r[lead]
            used.append((lead, [x * inv for x in r]))
    for piv_col, piv_row in used:
        if target[piv_col]:
            f = target[piv_col]
            target = [x - f * y for x, y in zip(target, piv_row)]
    return not any(target)


def frac_rank(rows):
    work = [[Fraction(x) for x in r] for r in rows]
    used = []
    for r in work:
        r = list(r)
        for piv_col, piv_row in used:
            if r[piv_col]:
                f = r[piv_col]
                r = [x - f * y for x, y in zip(r, piv_row)]
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is not None:
            inv = 1 / r[lead]
            used.append((lead, [x * inv for x in r]))
    return len(used)


def assert_canonical_hnf(h, cols):
    """Shape checks for the canonical row Hermite form."""
    pivots = []
    seen_zero = False
    for row in h:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            seen_zero = True
            continue
        assert not seen_zero, "zero row above a nonzero row"
        assert row[lead] > 0, "pivot not positive"
        if pivots:
            assert lead > pivots[-1], "pivot columns not strictly increasing"
        pivots.append(lead)
    for k, col in enumerate(pivots):
        p = h[k][col]
        for i in range(k):
            assert 0 <= h[i][col] < p, "entry above pivot not reduced"


def random_matrix(rng, max_rows=5, max_cols=5, bound=9, min_rows=0):
    m = rng.randint(min_rows, max_rows)
    n = rng.randint(1, max_cols)
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)], n


def random_unimodular(rng, n, steps=12):
    """Random product of elementary row operations applied to the identity."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randint(-3, 3)
            u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        elif kind == 1 and i != j:
            u[i], u[j] = u[j], u[i]
        elif kind == 2:
            u[i] = [-x for x in u[i]]
    return u


# ---------------------------------------------------------------------------
# rational cone membership by Fourier-Motzkin elimination; independent
# oracle for the double description code


def fm_cone_contains(rays, point, n):
    """Is `point` a nonnegative rational combination of `rays`?

    Decided by eliminating the combination coefficients with
    Fourier-Motzkin.  Variables: t_1..t_k >= 0 with sum t_i r_i = point.
    The equalities are split into two inequalities each; then coordinates
    of t are eliminated one at a time.
    """
    k = len(rays)
    # system over variables t (length k): rows are (coeffs..., const) with
    # meaning coeffs . t + const >= 0
    rows = []
    for i in range(k):
        e = [Fraction(0)] * k + [Fraction(0)]
        e[i] = Fraction(1)
        rows.append(e)  # t_i >= 0
    for j in range(n):
        coeffs = [Fraction(rays[i][j]) for i in range(k)]
        const = Fraction(-point[j])
        rows.append(coeffs + [const])  # sum t_i r_ij - p_j >= 0
        rows.append([-c for c in coeffs] + [-const])  # and <= 0
    for var in range(k):
        pos = [r for r in rows if r[var] > 0]
        neg = [r for r in rows if r[var] < 0]
        zero = [r for r in rows if r[var] == 0]
        new_rows = zero
        for rp in pos:
            for rn in neg:
                # scale so the var cancels
                combo = [rp[t] * (-rn[var]) + rn[t] * rp[var] for t in range(k + 1)]
                combo[var] = Fraction(0)
                new_rows.append(combo)
        rows = new_rows
    # all variables eliminated: feasible iff every residual constant >= 0
    return all(r[k] >= 0 for r in rows)


# ---------------------------------------------------------------------------
# shared fan fixtures: the four workhorse fans plus two random fan families


def fan_from_ray_lists(rank, ray_lists):
    from fanscheme.cones import cone_from_rays
    from fanscheme.fans import complete_under_faces, Fan

    cones = [cone_from_rays(rank, rays) for rays in ray_lists]
    return complete_under_faces(Fan(rank, cones))


def projective_line_fan():
    return fan_from_ray_lists(1, [[(1,)], [(-1,)]])


def projective_plane_fan():
    rays = [(1, 0), (0, 1), (-1, -1)]
    pairs = [[rays[i], rays[(i + 1) % 3]] for i in range(3)]
    return fan_from_ray_lists(2, pairs)


def hirzebruch_fan():
    # complete and regular, with the ray (-1,2) tilting two charts
    rays = [(1, 0), (0, 1), (-1, 2), (0, -1)]
    pairs = [[rays[i], rays[(i + 1) % 4]] for i in range(4)]
    return fan_from_ray_lists(2, pairs)


def affine_wedge_fan():
    # one singular top cone and its faces; not complete, not regular
    return fan_from_ray_lists(2, [[(1, 0), (1, 2)]])


def random_staircase_fan(rng):
    """Random valid 2d fan and whether it is complete by construction.

    Distinct primitive rays are sorted by angle; each consecutive pair
    with an angular gap under a half turn becomes a top cone.
    """
    import math
    from math import atan2

    rays = set()
    for _ in range(rng.randint(3, 6)):
        v = (rng.randint(-4, 4), rng.randint(-4, 4))
        if v == (0, 0):
            continue
        g = math.gcd(abs(v[0]), abs(v[1]))
        rays.add((v[0] // g, v[1] // g))
    rays = sorted(rays, key=lambda r: atan2(r[1], r[0]))
    if len(rays) < 2:
        rays = [(1, 0), (0, 1)]
    pairs = []
    gaps_ok = []
    for i in range(len(rays)):
        a = rays[i]
        b = rays[(i + 1) % len(rays)]
        if i + 1 == len(rays) and len(rays) == 2:
            # wrap pair would duplicate the single adjacent pair
            gaps_ok.append(False)
            continue
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0:
            pairs.append([a, b])
            gaps_ok.append(True)
        else:
            gaps_ok.append(False)
    ray_lists = pairs if pairs else [[r] for r in rays]
    complete = all(gaps_ok) and len(rays) >= 3
    return fan_from_ray_lists(2, ray_lists), complete


def random_orthant_subfan(rng):
    """Random face-closed piece of the coordinate orthant fan in rank 3."""
    from fanscheme.cones import cone_from_rays, faces
    from fanscheme.fans import Fan

    orthant = cone_from_rays(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    pool = list(faces(orthant))
    chosen = [c for c in pool if rng.random() < 0.5]
    chosen.append(cone_from_rays(3, []))
    closed = set()
    for c in chosen:
        closed.update(faces(c))
    return Fan(3, closed)
