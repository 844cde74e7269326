"""Exact dense linear algebra over Q(i).

Matrices are lists of rows, vectors are lists, entries are GaussianRational
(ints are coerced on the way in).  Everything is Gauss-Jordan elimination
with exact pivots, so ranks, kernels, and solves are certain rather than
numerically approximate.
"""

from __future__ import annotations

from typing import Optional, Sequence

from orthopair.scalar import GaussianRational, ONE, ZERO, _coerce

Vector = list
Matrix = list


def _entry(x) -> GaussianRational:
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot use {x!r} as a scalar")
    return c


def vec(entries: Sequence) -> Vector:
    return [_entry(x) for x in entries]


def mat(rows: Sequence[Sequence]) -> Matrix:
    out = [vec(row) for row in rows]
    if len({len(row) for row in out}) > 1:
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def conj_transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [[a[i][j].conj() for i in range(len(a))] for j in range(len(a[0]))]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    cols = len(b[0]) if b else 0
    return [
        [sum((row[k] * b[k][j] for k in range(len(b))), ZERO) for j in range(cols)]
        for row in a
    ]


def scale_vec(c, v: Vector) -> Vector:
    c = _entry(c)
    return [c * x for x in v]


def add_vec(u: Vector, v: Vector) -> Vector:
    return [x + y for x, y in zip(u, v)]


def sub_vec(u: Vector, v: Vector) -> Vector:
    return [x - y for x, y in zip(u, v)]


def rref(m: Matrix):
    """Reduced row echelon form: returns (new matrix, pivot column list).
    Entries are coerced, so plain ints are accepted."""
    rows = [vec(row) for row in m]
    pivots = []
    lead = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(lead, len(rows)) if not rows[i][col].is_zero()), None
        )
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        inv = ONE / rows[lead][col]
        rows[lead] = [inv * x for x in rows[lead]]
        for i in range(len(rows)):
            if i != lead and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix, ncols: Optional[int] = None) -> list:
    """Basis of the right kernel {x : m x = 0}; pass ncols for empty m."""
    if not m:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs an explicit width")
        return [e for e in identity(ncols)]
    reduced, pivots = rref(m)
    n = len(m[0])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for i, p in enumerate(pivots):
            x[p] = -reduced[i][f]
        basis.append(x)
    return basis


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse needs a square matrix")
    if n == 0:
        return []
    augmented = [list(row) + list(e) for row, e in zip(m, identity(n))]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced[:n]]


def solve(a: Matrix, rhs: Vector) -> Optional[Vector]:
    """One exact solution of a x = rhs, or None if the system is
    inconsistent.  Free variables, if any, are set to zero."""
    if len(a) != len(rhs):
        raise ValueError("system shape mismatch")
    if not a:
        return []
    n = len(a[0])
    augmented = [list(row) + [b] for row, b in zip(a, rhs)]
    reduced, pivots = rref(augmented)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = reduced[i][n]
    return x


def in_row_span(rows: Matrix, v: Vector) -> bool:
    if not rows:
        return all(x.is_zero() for x in v)
    return rank(rows) == rank(rows + [list(v)])


def independent(rows: Matrix) -> bool:
    return rank(rows) == len(rows)
