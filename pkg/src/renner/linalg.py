"""Small exact linear algebra helpers over the rationals.

Matrices are lists of lists of Fraction (or int); nothing here is sized for
more than a few dozen rows, so plain Gaussian elimination is used throughout.
"""

from __future__ import annotations

from fractions import Fraction


def mat_identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = Fraction(0)
            for t in range(k):
                if ai[t]:
                    acc += ai[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_eq(a, b):
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    return all(a[i][j] == b[i][j] for i in range(len(a)) for j in range(len(a[0])))


def mat_is_identity(a):
    n = len(a)
    return all(a[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def mat_inverse(a):
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(a)
    work = [[Fraction(x) for x in row] + ident
            for row, ident in zip(a, mat_identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Fraction(1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def rank(rows):
    """Rank of a list of rational row vectors."""
    work = [list(map(Fraction, r)) for r in rows]
    ncols = len(work[0]) if work else 0
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        inv = Fraction(1) / work[rk][col]
        work[rk] = [x * inv for x in work[rk]]
        for r in range(len(work)):
            if r != rk and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == len(work):
            break
    return rk


def affine_rank(points):
    """Dimension of the affine span of a list of rational points.

    The empty set has affine rank -1 by convention (empty polytope face).
    """
    if not points:
        return -1
    base = points[0]
    if len(points) == 1:
        return 0
    diffs = [[Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in points[1:]]
    return rank(diffs)


def kron(a, b):
    """Kronecker product of two rational matrices."""
    out = []
    for arow in a:
        for brow in b:
            row = []
            for x in arow:
                row.extend(x * y for y in brow)
            out.append(row)
    return out


def mat_trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))
