"""Pure backend for the verification kernels.

Array-level contracts shared with the compiled backend:

- `maps` is (N, nvert) int8; entry -1 means "undefined at this vertex",
  otherwise a 0-based vertex index.  Element i composed with element j acts
  as "i first, then j".
- sparse algebra vectors are triples of int64 arrays (index, numerator,
  denominator) sorted by index with no zero coefficients.
- verification kernels return a witness (or -1 / None) instead of raising, so
  callers can build diagnostics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

BACKEND = "pure"


def _codes(maps, radix):
    return ((maps.astype(np.int64) + 1) * radix).sum(axis=1)


def compose_table(maps, nvert):
    """All pairwise compositions as an (N, N) int32 index table.

    Raises LookupError with the offending pair if a composite map is not one
    of the N given maps (closure failure).
    """
    n = maps.shape[0]
    radix = (nvert + 1) ** np.arange(nvert, dtype=np.int64)
    codes = _codes(maps, radix)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    table = np.empty((n, n), dtype=np.int32)
    for s in range(n):
        ms = maps[s]
        valid = ms >= 0
        safe = np.where(valid, ms, 0)
        comp = np.where(valid[None, :], maps[:, safe], -1)
        ccodes = _codes(comp, radix)
        pos = np.searchsorted(sorted_codes, ccodes)
        pos_c = np.clip(pos, 0, n - 1)
        bad = sorted_codes[pos_c] != ccodes
        if bad.any():
            raise LookupError((s, int(np.nonzero(bad)[0][0])))
        table[s] = order[pos_c].astype(np.int32)
    return table


def sparse_mul(table, ia, na, da, ib, nb, db):
    """Exact rational convolution of two sparse algebra vectors."""
    acc = {}
    rows = table
    for i, n1, d1 in zip(ia.tolist(), na.tolist(), da.tolist()):
        c1 = Fraction(n1, d1)
        row = rows[i]
        for j, n2, d2 in zip(ib.tolist(), nb.tolist(), db.tolist()):
            k = int(row[j])
            acc[k] = acc.get(k, 0) + c1 * Fraction(n2, d2)
    idx = sorted(k for k, v in acc.items() if v != 0)
    nums = [acc[k].numerator for k in idx]
    dens = [acc[k].denominator for k in idx]
    try:
        num = np.array(nums, dtype=np.int64)
        den = np.array(dens, dtype=np.int64)
    except OverflowError:
        # results past 64 bits stay exact as Python ints
        num = np.array(nums, dtype=object)
        den = np.array(dens, dtype=object)
    return np.array(idx, dtype=np.int64), num, den


def eta_orthogonality(table, etas, nelem):
    """Check eta_k * eta_j == delta_kj * eta_j for all face pairs.

    `etas` is a list of (index, value) int64 array pairs.  Returns None on
    success, else the first failing pair (k, j).
    """
    for j, (ij, nj) in enumerate(etas):
        dense_j = np.zeros(nelem, dtype=np.int64)
        dense_j[ij] = nj
        for k, (ik, nk) in enumerate(etas):
            sub = table[np.ix_(ik, ij)].ravel()
            w = np.multiply.outer(nk, nj).ravel()
            prod = np.zeros(nelem, dtype=np.int64)
            np.add.at(prod, sub, w)
            ok = np.array_equal(prod, dense_j) if k == j else not prod.any()
            if not ok:
                return (k, j)
    return None


def centrality(table, eta_idx, eta_num, nelem):
    """First monoid element that fails sigma*eta == eta*sigma, or -1."""
    for s in range(nelem):
        left = np.zeros(nelem, dtype=np.int64)
        np.add.at(left, table[s, eta_idx], eta_num)
        right = np.zeros(nelem, dtype=np.int64)
        np.add.at(right, table[eta_idx, s], eta_num)
        if not np.array_equal(left, right):
            return s
    return -1


def psi_multiplicative(table, indptr, indices, vals, row, col, pel,
                       wtab, lookup, member, class_elems, nelem):
    """Exhaustive multiplicativity sweep for one matrix-block summand.

    Row a of the CSR triple (indptr, indices, vals) is the product of class
    element a with the central idempotent.  For each ordered pair (a, b) the
    two rows are convolved and the class-coefficient pattern of the result is
    compared with the single expected matrix unit.  Returns (bad_count,
    first_witness).
    """
    c = len(row)
    nbad = 0
    first = None
    for a in range(c):
        ia = indices[indptr[a]:indptr[a + 1]]
        va = vals[indptr[a]:indptr[a + 1]]
        for b in range(c):
            ib = indices[indptr[b]:indptr[b + 1]]
            vb = vals[indptr[b]:indptr[b + 1]]
            sub = table[np.ix_(ia, ib)].ravel()
            w = np.multiply.outer(va, vb).ravel()
            acc = np.zeros(nelem, dtype=np.int64)
            np.add.at(acc, sub, w)
            got = acc[class_elems]
            expect = np.zeros(c, dtype=np.int64)
            if col[a] == row[b]:
                exp_elem = int(lookup[row[a], wtab[pel[a], pel[b]], col[b]])
                expect[member[exp_elem]] = 1
            if not np.array_equal(got, expect):
                nbad += 1
                if first is None:
                    first = (a, b)
    return nbad, first


def block_multiplicative(table, colmap, gelem, wtab):
    """Block-level product check of the induced matrix form over all pairs.

    colmap[s, K] is the column hit by block row K of element s (-1 when the
    row is empty) and gelem[s, K] the factor-group element carried by that
    block (0 when empty).  Returns (bad_count, first_witness).
    """
    n, d = colmap.shape
    nbad = 0
    first = None
    for s in range(n):
        cs = colmap[s].astype(np.intp)
        gs = gelem[s].astype(np.intp)
        valid = cs >= 0
        safe = np.where(valid, cs, 0)
        t_col = colmap[:, safe]
        t_g = gelem[:, safe].astype(np.intp)
        ccol = np.where(valid[None, :] & (t_col >= 0), t_col, -1)
        cg = np.where(ccol >= 0, wtab[gs, t_g], 0)
        st = table[s]
        exp_col = colmap[st]
        exp_g = np.where(exp_col >= 0, gelem[st], 0)
        mism = (ccol != exp_col).any(axis=1) | (cg != exp_g).any(axis=1)
        if mism.any():
            bad_t = np.nonzero(mism)[0]
            nbad += len(bad_t)
            if first is None:
                first = (s, int(bad_t[0]))
    return nbad, first
