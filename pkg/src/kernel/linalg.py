"""Exact linear algebra on list-of-rows matrices over a tower field.

Determinants use fraction-free Bareiss elimination, so the same routine works
for matrices whose entries are field elements, univariate polynomials or
multivariate polynomials (anything with exact division).
"""

import logging

from errors import NonSquare
from kernel.upoly import UPoly

logger = logging.getLogger("transfers.kernel.linalg")

Matrix = list[list]


def identity(field, n: int) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zeros(field, rows: int, cols: int) -> Matrix:
    return [[field.zero] * cols for _ in range(rows)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def _dot(row, col, zero):
    acc = zero
    for x, y in zip(row, col):
        if x and y:
            acc = acc + x * y
    return acc


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b or not a[0]:
        return [[] for _ in a]
    zero = a[0][0] * 0
    cols = list(zip(*b))
    return [[_dot(row, col, zero) for col in cols] for row in a]


def mat_vec(a: Matrix, v: list) -> list:
    if not v:
        return []
    zero = v[0] * 0
    return [_dot(row, v, zero) for row in a]


def matrix_polynomial(f: UPoly, m: Matrix) -> Matrix:
    """f(M) by Horner's rule."""
    field = f.field
    n = len(m)
    acc = zeros(field, n, n)
    for c in reversed(f.coeffs):
        acc = mat_mul(acc, m) if n else acc
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else (ncols or 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1]) if m else 0


def kernel(m: Matrix, ncols: int | None = None, field=None) -> list[list]:
    """Basis of {v : M v = 0}; ncols and field are needed for matrices with no rows."""
    if not m:
        return [[field.one if i == j else field.zero for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(m)
    ncols = len(m[0])
    field = field or m[0][0].field
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: list) -> list | None:
    """One solution of M x = b, or None when the system is inconsistent."""
    if not m:
        return None
    ncols = len(m[0])
    augmented = [list(row) + [bi] for row, bi in zip(m, b)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    field = m[0][0].field
    x = [field.zero] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare("inverse of a non-square matrix")
    field = m[0][0].field
    augmented = [list(row) + unit for row, unit in zip(m, identity(field, n))]
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in reduced]


def det(m: Matrix, one=None):
    """Bareiss determinant; `one` is returned for the 0×0 matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"determinant of a {n}×{len(m[0])} matrix")
    if n == 0:
        if one is None:
            raise ValueError("the 0×0 determinant needs an explicit one")
        return one
    a = [list(row) for row in m]
    sign = 1
    prev = a[0][0].one_like()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return a[0][0] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def charpoly(m: Matrix, field=None) -> UPoly:
    """det(t·I − M); the 0×0 matrix has characteristic polynomial 1."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare("characteristic polynomial of a non-square matrix")
    field = field or (m[0][0].field if n else None)
    if n == 0:
        return UPoly.one(field)
    t = UPoly.x(field)
    entries = [[(t if i == j else UPoly.zero(field)) - UPoly.constant(field, m[i][j])
                for j in range(n)] for i in range(n)]
    return det(entries)


def trace(m: Matrix):
    acc = m[0][0].field.zero
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc
