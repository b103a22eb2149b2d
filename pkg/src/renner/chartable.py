"""Character tables of finite subgroups by the modular class-algebra method.

The class sums act on the vector of central-character values through the
structure constants; over F_p with p = 1 mod exp(G) and p > 2 sqrt(|G|) the
common eigenspaces of these matrices are one-dimensional, eigenvalues are
found by scanning the prime field, degrees come from the orthogonality
relation mod p, and values lift to centered integers.  The lifted table is
validated against the exact integer orthogonality relations; groups whose
characters are not rational integers fail that check and are rejected.
"""

from __future__ import annotations

import math

from .errors import GroupTooLarge, NotIntegerValued
from .weyl import element_order


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def _dixon_prime(order, exponent):
    # p = 1 mod exp(G) makes F_p a splitting field; p > 2 sqrt(|G|) makes the
    # centered lift of any character value unambiguous.
    p = exponent + 1
    while True:
        if p * p > 4 * order and _is_prime(p):
            return p
        p += exponent


def _fp_rref(rows, p):
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col] % p
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def _fp_det(rows, p):
    mat = [list(r) for r in rows]
    n = len(mat)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det = det * mat[col][col] % p
        inv = pow(mat[col][col], p - 2, p)
        for r in range(col + 1, n):
            if mat[r][col] % p:
                f = mat[r][col] * inv % p
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[col])]
    return det % p


def _fp_nullspace(rows, p):
    """Basis of {c : rows . c = 0} over F_p."""
    n = len(rows[0])
    rref, pivots = _fp_rref(rows, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rref[r][fc]) % p
        basis.append(vec)
    return basis


def _fp_matmul(a, b, p):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                oi = out[i]
                for j in range(m):
                    oi[j] = (oi[j] + x * bt[j]) % p
    return out


class CharacterTable:
    """Integer character table with classes in the subgroup's class order and
    rows sorted by (degree, values)."""

    def __init__(self, handle, classes, rows, prime):
        self.handle = handle
        self.classes = classes
        self.rows = rows
        self.prime = prime

    @property
    def nclasses(self):
        return len(self.classes.classes)

    @property
    def degrees(self):
        return tuple(r[0] for r in self.rows)

    def value(self, row, class_idx):
        return self.rows[row][class_idx]

    def chi_elem(self, row, local_idx):
        return self.rows[row][self.classes.class_of[local_idx]]

    def class_of_element(self, w):
        return self.classes.class_of[self.handle.index[w]]


def character_table(handle, bound=10000):
    if handle.order > bound:
        raise GroupTooLarge(
            "character table for order %d exceeds the bound %d" % (handle.order, bound)
        )
    classes = handle.conjugacy_classes()
    r = len(classes.classes)
    order = handle.order
    exponent = 1
    for rep in classes.reps:
        exponent = math.lcm(exponent, element_order(rep))
    p = _dixon_prime(order, exponent)

    reps_idx = [cls[0] for cls in classes.classes]
    inv_class = [
        classes.class_of[handle.inv(ri)] for ri in reps_idx
    ]
    # a[j][k][l] = #{x in c_j : x^{-1} z_l in c_k} with z_l the fixed rep
    mats = [[[0] * r for _ in range(r)] for _ in range(r)]
    for j in range(r):
        for x in classes.classes[j]:
            xi = handle.inv(x)
            for l in range(r):
                k = classes.class_of[handle.mul(xi, reps_idx[l])]
                mats[j][k][l] += 1
    # rows act from the right: N_j[l][k] = a_jkl gives x . N_j = omega_j x
    nmats = [[[mats[j][k][l] % p for k in range(r)] for l in range(r)] for j in range(r)]

    spaces = [(_fp_rref([[1 if i == j else 0 for j in range(r)] for i in range(r)], p))]
    for j in range(1, r):
        if all(len(s[0]) == 1 for s in spaces):
            break
        refined = []
        for rows_s, pivots in spaces:
            k = len(rows_s)
            if k == 1:
                refined.append((rows_s, pivots))
                continue
            t = _fp_matmul(rows_s, nmats[j], p)
            b = [[t[i][c] for c in pivots] for i in range(k)]
            bt = [list(row) for row in zip(*b)]
            seen = 0
            for lam in range(p):
                shifted = [
                    [(bt[x][y] - (lam if x == y else 0)) % p for y in range(k)]
                    for x in range(k)
                ]
                if _fp_det(shifted, p):
                    continue
                null = _fp_nullspace(shifted, p)
                newrows = _fp_matmul(null, rows_s, p)
                refined.append(_fp_rref(newrows, p))
                seen += len(null)
                if seen == k:
                    break
        spaces = refined
    if any(len(s[0]) != 1 for s in spaces) or len(spaces) != r:
        raise NotIntegerValued("class matrices failed to split into lines")

    sizes = classes.sizes
    table = []
    half = (p - 1) // 2
    for rows_s, _ in spaces:
        x = rows_s[0]
        if x[0] % p == 0:
            raise NotIntegerValued("central character vanishes on the identity class")
        inv0 = pow(x[0], p - 2, p)
        omega = [xi * inv0 % p for xi in x]
        s = 0
        for l in range(r):
            s = (s + omega[l] * omega[inv_class[l]] * pow(sizes[l], p - 2, p)) % p
        if s == 0:
            raise NotIntegerValued("degree relation degenerate mod p")
        chi1sq = order * pow(s, p - 2, p) % p
        root = next((t for t in range(1, p) if t * t % p == chi1sq), None)
        if root is None:
            raise NotIntegerValued("degree is not a square mod p")
        deg = root if root <= half else p - root
        values = []
        for l in range(r):
            t = deg * omega[l] % p * pow(sizes[l], p - 2, p) % p
            v = t if t <= half else t - p
            if abs(v) > deg:
                raise NotIntegerValued("lifted value exceeds the degree bound")
            values.append(v)
        table.append(tuple(values))
    table.sort(key=lambda row: (row[0], row))

    _check_orthogonality(table, sizes, inv_class, order)
    return CharacterTable(handle, classes, tuple(table), p)


def _check_orthogonality(table, sizes, inv_class, order):
    r = len(table)
    if sum(row[0] ** 2 for row in table) != order:
        raise NotIntegerValued("degrees do not satisfy the sum of squares")
    for i in range(r):
        for j in range(r):
            s = sum(sizes[l] * table[i][l] * table[j][inv_class[l]] for l in range(r))
            if s != (order if i == j else 0):
                raise NotIntegerValued("row orthogonality failed at (%d, %d)" % (i, j))
    for k in range(r):
        for l in range(r):
            s = sum(table[i][k] * table[i][inv_class[l]] for i in range(r))
            if s != (order // sizes[k] if k == l else 0):
                raise NotIntegerValued("column orthogonality failed at (%d, %d)" % (k, l))
