"""Exact integer and rational linear algebra on row lattices.

Convention: vectors are rows, a matrix is a sequence of rows, and the
lattice of a matrix is the ZZ-span of its rows.  Everything is exact;
integers are unbounded and rational intermediates use fractions.Fraction.

Two layers live here.  The row layer works on plain sequences of int rows
plus an explicit column count (so 0-row matrices keep their shape) and is
what the rest of the package calls.  The IntMatrix layer wraps the same
operations for callers that want validated, hashable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _as_int(x):
    # bool is an int subclass; reject it anyway
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError("matrix entries must be plain ints, got %r" % (x,))
    return x


def xgcd(a, b):
    """Extended gcd: (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries, keeping direction."""
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose_rows(rows, cols):
    return [[row[j] for row in rows] for j in range(cols)]


def hnf_rows(rows, cols):
    """Row Hermite normal form with transform.

    Returns (h, u, pivot_cols): u is unimodular with u * rows == h, h is the
    canonical row echelon form (positive pivots, entries above each pivot
    reduced into [0, pivot), zero rows at the bottom), and pivot_cols lists
    the pivot column of each nonzero row.  The canonical form depends only
    on the row lattice, not on the presentation.
    """
    m = len(rows)
    h = [list(r) for r in rows]
    u = identity_rows(m)

    def combine(i, k, c):
        # row i -= c * row k, on h and u in lockstep
        hi, hk = h[i], h[k]
        for j in range(cols):
            hi[j] -= c * hk[j]
        ui, uk = u[i], u[k]
        for j in range(m):
            ui[j] -= c * uk[j]

    piv = 0
    pivot_cols = []
    for col in range(cols):
        if piv == m:
            break
        while True:
            best = -1
            for i in range(piv, m):
                if h[i][col] != 0 and (best < 0 or abs(h[i][col]) < abs(h[best][col])):
                    best = i
            if best < 0:
                break
            if best != piv:
                h[piv], h[best] = h[best], h[piv]
                u[piv], u[best] = u[best], u[piv]
            clean = True
            for i in range(piv + 1, m):
                if h[i][col] != 0:
                    combine(i, piv, h[i][col] // h[piv][col])
                    if h[i][col] != 0:
                        clean = False
            if clean:
                break
        if h[piv][col] == 0:
            continue
        if h[piv][col] < 0:
            h[piv] = [-x for x in h[piv]]
            u[piv] = [-x for x in u[piv]]
        for i in range(piv):
            q = h[i][col] // h[piv][col]
            if q != 0:
                combine(i, piv, q)
        pivot_cols.append(col)
        piv += 1
    return h, u, pivot_cols


def rank_rows(rows, cols):
    return len(hnf_rows(rows, cols)[2])


def smith_rows(rows, cols):
    """Smith normal form with transforms.

    Returns (d, p, q): p and q unimodular with p * rows * q == d, where d is
    diagonal with nonnegative entries and each diagonal entry divides the
    next one.
    """
    nr = len(rows)
    d = [list(r) for r in rows]
    p = identity_rows(nr)
    q = identity_rows(cols)

    def row_combine(i, k, c):
        di, dk = d[i], d[k]
        for j in range(cols):
            di[j] -= c * dk[j]
        pi, pk = p[i], p[k]
        for j in range(nr):
            pi[j] -= c * pk[j]

    def col_combine(j, k, c):
        for r in d:
            r[j] -= c * r[k]
        for r in q:
            r[j] -= c * r[k]

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        p[i], p[k] = p[k], p[i]

    def col_swap(j, k):
        for r in d:
            r[j], r[k] = r[k], r[j]
        for r in q:
            r[j], r[k] = r[k], r[j]

    t = 0
    while t < nr and t < cols:
        best_i, best_j = -1, -1
        for i in range(t, nr):
            for j in range(t, cols):
                if d[i][j] != 0 and (best_i < 0 or abs(d[i][j]) < abs(d[best_i][best_j])):
                    best_i, best_j = i, j
        if best_i < 0:
            break
        if best_i != t:
            row_swap(t, best_i)
        if best_j != t:
            col_swap(t, best_j)
        while True:
            again = False
            for i in range(t + 1, nr):
                if d[i][t] != 0:
                    row_combine(i, t, d[i][t] // d[t][t])
                    if d[i][t] != 0:
                        # the remainder is strictly smaller; make it the pivot
                        row_swap(t, i)
                        again = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    col_combine(j, t, d[t][j] // d[t][t])
                    if d[t][j] != 0:
                        col_swap(t, j)
                        again = True
            if not again:
                break
        t += 1

    rank = t
    for i in range(rank):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            p[i] = [-x for x in p[i]]
    # enforce d[i][i] | d[i+1][i+1] with an explicit unimodular 2x2 fix that
    # replaces diag(a, b) by diag(gcd, a*b/gcd); each fix strictly shrinks
    # d[i][i], a lexicographic descent, so the loop terminates
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = d[i][i], d[i + 1][i + 1]
            if b % a == 0:
                continue
            g, s, tt = xgcd(a, b)
            af, bf = a // g, b // g
            new_pi = [s * x + tt * y for x, y in zip(p[i], p[i + 1])]
            new_pj = [-bf * x + af * y for x, y in zip(p[i], p[i + 1])]
            p[i], p[i + 1] = new_pi, new_pj
            d[i][i], d[i][i + 1] = g, 0
            d[i + 1][i], d[i + 1][i + 1] = 0, af * b
            for r in q:
                ci, cj = r[i], r[i + 1]
                r[i] = ci + cj
                r[i + 1] = -tt * bf * ci + s * af * cj
            changed = True
    return d, p, q


def kernel_rows(rows, cols):
    """Canonical basis of the left kernel lattice {x : x * rows == 0}.

    The transform rows of the Hermite form that sit over zero rows span the
    full integer kernel, so the result is automatically saturated; a second
    Hermite pass makes it canonical.
    """
    h, u, _ = hnf_rows(rows, cols)
    rel = [u[i] for i in range(len(rows)) if not any(h[i])]
    if not rel:
        return []
    kh, _, _ = hnf_rows(rel, len(rows))
    return [row for row in kh if any(row)]


def perp_rows(rows, cols):
    """Basis of {y in ZZ^cols : <y, r> = 0 for every row r}."""
    return kernel_rows(transpose_rows(rows, cols), len(rows))


def saturate_rows(rows, cols):
    """Canonical basis of the saturation: QQ-span of the rows meet ZZ^cols.

    Computed as the orthogonal complement of the orthogonal complement,
    which lands on the saturated lattice directly.
    """
    return perp_rows(perp_rows(rows, cols), cols)


def solve_left_rows(rows, cols, target):
    """One rational solution x of x * rows == target, or None.

    target entries may be ints or Fractions; the solution is a list of
    Fractions, one coordinate per row.
    """
    if len(target) != cols:
        raise ValueError("target length does not match column count")
    h, u, pivot_cols = hnf_rows(rows, cols)
    t = [Fraction(x) for x in target]
    y = [Fraction(0)] * len(rows)
    for k, col in enumerate(pivot_cols):
        c = t[col] / h[k][col]
        if c:
            y[k] = c
            hk = h[k]
            for j in range(cols):
                if hk[j]:
                    t[j] -= c * hk[j]
    if any(t):
        return None
    m = len(rows)
    return [sum((y[k] * u[k][j] for k in range(m)), Fraction(0)) for j in range(m)]


def lattice_coords_rows(rows, cols, target):
    """Integer coordinates of target over the rows, or None if target is not
    in the ZZ-row-span.

    Integrality of the particular solution is equivalent to membership: the
    pivot coordinates are the unique expansion over the Hermite basis.
    """
    x = solve_left_rows(rows, cols, target)
    if x is None or any(c.denominator != 1 for c in x):
        return None
    return [int(c) for c in x]


def lattice_member_rows(rows, cols, target):
    return lattice_coords_rows(rows, cols, target) is not None


def det_rows(rows):
    """Determinant of a square integer matrix (Bareiss, division-free result)."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def invert_unimodular_rows(rows):
    """Integer inverse of a unimodular matrix; ValueError if not unimodular."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        c = a[col][col]
        a[col] = [x / c for x in a[col]]
        inv[col] = [x / c for x in inv[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    out = []
    for r in inv:
        for x in r:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular over ZZ")
        out.append([int(x) for x in r])
    return out


def unimodular_complement_rows(basis, n):
    """Extend a saturated basis to a full unimodular n x n matrix.

    The first len(basis) rows of the result are exactly `basis`; the added
    rows come from the inverse column transform of the Smith decomposition.
    Raises ValueError if the rows are dependent or the lattice they span is
    not saturated (some invariant factor != 1).
    """
    k = len(basis)
    if k == 0:
        return identity_rows(n)
    d, _, q = smith_rows(basis, n)
    for i in range(k):
        if d[i][i] != 1:
            raise ValueError("basis rows must be independent and saturated")
    qinv = invert_unimodular_rows(q)
    return [list(r) for r in basis] + [list(qinv[i]) for i in range(k, n)]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix: a tuple of row tuples plus a column count.

    The column count is stored separately so matrices with no rows keep
    their shape through transposes and products.
    """

    entries: tuple
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")
            for x in row:
                _as_int(x)

    @classmethod
    def from_rows(cls, rows, cols=None):
        packed = tuple(tuple(r) for r in rows)
        if cols is None:
            if not packed:
                raise ValueError("an empty matrix needs an explicit column count")
            cols = len(packed[0])
        return cls(packed, cols)

    @property
    def nrows(self):
        return len(self.entries)

    def row_list(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return IntMatrix(
            tuple(tuple(col) for col in transpose_rows(self.entries, self.cols)),
            self.nrows,
        )

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        rows = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.nrows)
        )
        return IntMatrix(rows, other.cols)

    def __iter__(self):
        return iter(self.entries)


def hermite_normal_form(m):
    """Canonical row Hermite form: (h, u) with u unimodular, u * m == h."""
    h, u, _ = hnf_rows(m.entries, m.cols)
    return IntMatrix.from_rows(h, m.cols), IntMatrix.from_rows(u, m.nrows)


def smith_normal_form(m):
    """Smith form with transforms: (d, p, q) with p * m * q == d."""
    d, p, q = smith_rows(m.entries, m.cols)
    return (
        IntMatrix.from_rows(d, m.cols),
        IntMatrix.from_rows(p, m.nrows),
        IntMatrix.from_rows(q, m.cols),
    )


def invariant_factors(m):
    """Nonzero diagonal of the Smith form, each entry dividing the next."""
    d, _, _ = smith_rows(m.entries, m.cols)
    out = []
    for i in range(min(m.nrows, m.cols)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return tuple(out)


def kernel_basis(m):
    """Rows form the canonical basis of the left kernel {x : x * m == 0}."""
    return IntMatrix.from_rows(kernel_rows(m.entries, m.cols), m.nrows)


def saturate_sublattice(m):
    """Rows form the canonical basis of the saturation of the row lattice."""
    return IntMatrix.from_rows(saturate_rows(m.entries, m.cols), m.cols)
