"""Small dense linear algebra over either scalar backend.

Vectors are tuples, matrices tuples of row tuples. Dimensions here are
tiny (2 to 5), so everything is plain Gaussian elimination with exact
pivoting on the rational backend and max-magnitude pivoting on floats.
"""
from __future__ import annotations

from .errors import InputError, SingularMatrixError
from .scalars import Context


def dot(a, b):
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(a, s):
    return tuple(x * s for x in a)


def vneg(a):
    return tuple(-x for x in a)


def matvec(m, x):
    return tuple(dot(row, x) for row in m)


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity(d: int, ctx: Context):
    one, zero = ctx.coerce(1), ctx.coerce(0)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def _pivot_row(rows, col, start, ctx):
    """Index of the pivot row for `col`, or None if the column is (near) zero."""
    if ctx.exact:
        for i in range(start, len(rows)):
            if rows[i][col] != 0:
                return i
        return None
    best, best_mag = None, ctx.eps
    for i in range(start, len(rows)):
        mag = abs(rows[i][col])
        if mag > best_mag:
            best, best_mag = i, mag
    return best


def solve(a, b, ctx: Context):
    """Solve the square system a @ x = b.

    Raises SingularMatrixError when no pivot can be found for some column.
    """
    d = len(a)
    if any(len(row) != d for row in a) or len(b) != d:
        raise InputError("solve: matrix must be square and match the right-hand side")
    rows = [list(map(ctx.coerce, row)) + [ctx.coerce(rhs)] for row, rhs in zip(a, b)]
    for col in range(d):
        p = _pivot_row(rows, col, col, ctx)
        if p is None:
            raise SingularMatrixError(f"singular system (no pivot in column {col})")
        rows[col], rows[p] = rows[p], rows[col]
        piv = rows[col][col]
        rows[col] = [x / piv for x in rows[col]]
        for i in range(d):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[col])]
    return tuple(rows[i][d] for i in range(d))


def inverse(a, ctx: Context):
    d = len(a)
    cols = []
    for j in range(d):
        e = tuple(1 if i == j else 0 for i in range(d))
        cols.append(solve(a, e, ctx))
    return transpose(cols)


def rank(rows, ctx: Context) -> int:
    """Rank of a (not necessarily square) matrix given as an iterable of rows."""
    work = [list(map(ctx.coerce, row)) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        p = _pivot_row(work, col, r, ctx)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r][col]
        work[r] = [x / piv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r
