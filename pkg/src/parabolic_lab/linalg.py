"""Dense exact linear algebra over Q and Q(i).

Matrices are lists of row lists.  Entries may be ``Fraction`` or
``GaussianRational``; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "column_space",
    "solve",
    "inverse",
    "matmul",
    "transpose",
    "conj_transpose",
    "intersect",
    "zeros",
]


def zeros(nrows: int, ncols: int):
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def transpose(m, ncols: int | None = None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def conj_transpose(m, ncols: int | None = None):
    return [[x.conjugate() for x in row] for row in transpose(m, ncols)]


def matmul(a, b):
    if not a:
        return []
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(i, x) for i, x in enumerate(row) if x]
        out.append([sum((x * col[i] for i, x in nz), Fraction(0)) for col in bt])
    return out


def rref(m, ncols: int | None = None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``.

    The input is not modified.
    """
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        inv = Fraction(1, p) if isinstance(p, int) else 1 / p
        pr = [x * inv for x in rows[r]]
        rows[r] = pr
        nz = [(j, x) for j, x in enumerate(pr) if x]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j, x in nz:
                        ri[j] = ri[j] - f * x
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m, ncols: int | None = None) -> int:
    if not m:
        return 0
    return len(rref(m, ncols)[1])


def nullspace(m, ncols: int):
    """Basis of ``{x : m x = 0}`` as a list of column vectors (lists)."""
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows, pivots = rref(m, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(rows, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def column_space(vectors, dim: int):
    """Reduced basis of the span of ``vectors`` (each of length ``dim``)."""
    if not vectors:
        return []
    rows, _ = rref(vectors, dim)
    return rows


def solve(m, rhs, ncols: int | None = None):
    """One solution of ``m x = rhs`` or ``None`` if inconsistent."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    rows, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[ncols]
    return x


def inverse(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows]


def intersect(a, b, dim: int):
    """Basis of span(a) ∩ span(b) for lists of vectors of length ``dim``."""
    if not a or not b:
        return []
    # solve sum x_i a_i = sum y_j b_j
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    m = transpose(cols)
    kernel = nullspace(m, len(cols))
    out = []
    for k in kernel:
        v = [Fraction(0)] * dim
        for coef, vec in zip(k[: len(a)], a):
            if coef:
                for i, x in enumerate(vec):
                    if x:
                        v[i] += coef * x
        out.append(v)
    return column_space(out, dim)
