# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the verification kernels.

Mirrors the array contracts of the pure backend exactly; see _kernels_py for
the documented semantics.  The rational convolution only handles integer
coefficients inside int64 range and raises OverflowError otherwise, which the
dispatch layer turns into a fallback to the pure implementation.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

DEF INT_GUARD = 2147483647  # operands above this would risk int64 overflow


cdef Py_ssize_t _bsearch(cnp.int64_t[::1] arr, cnp.int64_t x) nogil:
    cdef Py_ssize_t lo = 0, hi = arr.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def compose_table(maps_in, int nvert):
    cdef cnp.int8_t[:, ::1] maps = np.ascontiguousarray(maps_in, dtype=np.int8)
    cdef Py_ssize_t n = maps.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] radix_arr = \
        (nvert + 1) ** np.arange(nvert, dtype=np.int64)
    cdef cnp.int64_t[::1] radix = radix_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] codes_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] codes = codes_arr
    cdef Py_ssize_t s, t, v, pos
    cdef cnp.int64_t code
    cdef int img, mid_img
    for s in range(n):
        code = 0
        for v in range(nvert):
            code += (maps[s, v] + 1) * radix[v]
        codes[s] = code
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order_arr = np.argsort(codes_arr, kind="stable")
    cdef cnp.int64_t[::1] order = order_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sorted_arr = codes_arr[order_arr]
    cdef cnp.int64_t[::1] sorted_codes = sorted_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=2] table_arr = np.empty((n, n), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] table = table_arr
    for s in range(n):
        for t in range(n):
            code = 0
            for v in range(nvert):
                mid_img = maps[s, v]
                if mid_img >= 0:
                    img = maps[t, mid_img]
                else:
                    img = -1
                code += (img + 1) * radix[v]
            pos = _bsearch(sorted_codes, code)
            if pos >= n or sorted_codes[pos] != code:
                raise LookupError((s, t))
            table[s, t] = <cnp.int32_t> order[pos]
    return table_arr


cdef cnp.int64_t _igcd(cnp.int64_t a, cnp.int64_t b) nogil:
    cdef cnp.int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def sparse_mul(table_in, ia_in, na_in, da_in, ib_in, nb_in, db_in):
    cdef cnp.int32_t[:, ::1] table = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef cnp.int64_t[::1] ia = np.ascontiguousarray(ia_in, dtype=np.int64)
    cdef cnp.int64_t[::1] na = np.ascontiguousarray(na_in, dtype=np.int64)
    cdef cnp.int64_t[::1] da = np.ascontiguousarray(da_in, dtype=np.int64)
    cdef cnp.int64_t[::1] ib = np.ascontiguousarray(ib_in, dtype=np.int64)
    cdef cnp.int64_t[::1] nb = np.ascontiguousarray(nb_in, dtype=np.int64)
    cdef cnp.int64_t[::1] db = np.ascontiguousarray(db_in, dtype=np.int64)
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t p, q, k, ntouch = 0
    cdef cnp.int64_t coef, prod
    for p in range(da.shape[0]):
        if da[p] != 1 or na[p] > INT_GUARD or na[p] < -INT_GUARD:
            raise OverflowError("non-integer or oversized coefficients")
    for q in range(db.shape[0]):
        if db[q] != 1 or nb[q] > INT_GUARD or nb[q] < -INT_GUARD:
            raise OverflowError("non-integer or oversized coefficients")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] acc = acc_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = touched_arr
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr
    for p in range(ia.shape[0]):
        for q in range(ib.shape[0]):
            k = table[ia[p], ib[q]]
            prod = na[p] * nb[q]
            if acc[k] > 0 and prod > 0 and acc[k] + prod < 0:
                raise OverflowError("accumulator overflow")
            if acc[k] < 0 and prod < 0 and acc[k] + prod > 0:
                raise OverflowError("accumulator overflow")
            acc[k] += prod
            if not seen[k]:
                seen[k] = 1
                touched[ntouch] = k
                ntouch += 1
    out_idx = np.sort(touched_arr[:ntouch])
    out_idx = out_idx[acc_arr[out_idx] != 0]
    out_num = acc_arr[out_idx]
    out_den = np.ones(len(out_idx), dtype=np.int64)
    return out_idx, out_num, out_den


def eta_orthogonality(table_in, etas, Py_ssize_t nelem):
    cdef cnp.int32_t[:, ::1] table = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc_arr = np.zeros(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] acc = acc_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dense_arr = np.zeros(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] dense = dense_arr
    cdef cnp.int64_t[::1] ij, nj, ik, nk
    cdef Py_ssize_t nfaces = len(etas)
    cdef Py_ssize_t j, k, p, q, z, ntouch
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.empty(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = touched_arr
    # membership marker: acc[z] alone cannot flag first touch because
    # coefficient cancellation may bring it back to zero mid-sweep
    cdef cnp.ndarray[cnp.int8_t, ndim=1] seen_arr = np.zeros(nelem, dtype=np.int8)
    cdef cnp.int8_t[::1] seen = seen_arr
    cdef bint ok
    for j in range(nfaces):
        ij = np.ascontiguousarray(etas[j][0], dtype=np.int64)
        nj = np.ascontiguousarray(etas[j][1], dtype=np.int64)
        for p in range(ij.shape[0]):
            dense[ij[p]] = nj[p]
        for k in range(nfaces):
            ik = np.ascontiguousarray(etas[k][0], dtype=np.int64)
            nk = np.ascontiguousarray(etas[k][1], dtype=np.int64)
            ntouch = 0
            for p in range(ik.shape[0]):
                for q in range(ij.shape[0]):
                    z = table[ik[p], ij[q]]
                    if not seen[z]:
                        seen[z] = 1
                        touched[ntouch] = z
                        ntouch += 1
                    acc[z] += nk[p] * nj[q]
            ok = True
            if k == j:
                for p in range(ntouch):
                    z = touched[p]
                    if acc[z] != dense[z]:
                        ok = False
                for q in range(ij.shape[0]):
                    if acc[ij[q]] != nj[q]:
                        ok = False
            else:
                for p in range(ntouch):
                    if acc[touched[p]] != 0:
                        ok = False
            for p in range(ntouch):
                acc[touched[p]] = 0
                seen[touched[p]] = 0
            if not ok:
                for p in range(ij.shape[0]):
                    dense[ij[p]] = 0
                return (k, j)
        for p in range(ij.shape[0]):
            dense[ij[p]] = 0
    return None


def centrality(table_in, eta_idx_in, eta_num_in, Py_ssize_t nelem):
    cdef cnp.int32_t[:, ::1] table = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef cnp.int64_t[::1] idx = np.ascontiguousarray(eta_idx_in, dtype=np.int64)
    cdef cnp.int64_t[::1] num = np.ascontiguousarray(eta_num_in, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] left_arr = np.zeros(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] left = left_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] right_arr = np.zeros(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] right = right_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.empty(2 * nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = touched_arr
    cdef Py_ssize_t s, p, z, ntouch
    cdef bint ok
    for s in range(nelem):
        ntouch = 0
        for p in range(idx.shape[0]):
            z = table[s, idx[p]]
            if left[z] == 0 and right[z] == 0:
                touched[ntouch] = z
                ntouch += 1
            left[z] += num[p]
            z = table[idx[p], s]
            if left[z] == 0 and right[z] == 0:
                touched[ntouch] = z
                ntouch += 1
            right[z] += num[p]
        ok = True
        for p in range(ntouch):
            z = touched[p]
            if left[z] != right[z]:
                ok = False
            left[z] = 0
            right[z] = 0
        if not ok:
            return s
    return -1


def psi_multiplicative(table_in, indptr_in, indices_in, vals_in, row_in, col_in,
                       pel_in, wtab_in, lookup_in, member_in, class_elems_in,
                       Py_ssize_t nelem):
    cdef cnp.int32_t[:, ::1] table = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef cnp.int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef cnp.int64_t[::1] indices = np.ascontiguousarray(indices_in, dtype=np.int64)
    cdef cnp.int64_t[::1] vals = np.ascontiguousarray(vals_in, dtype=np.int64)
    cdef cnp.int16_t[::1] row = np.ascontiguousarray(row_in, dtype=np.int16)
    cdef cnp.int16_t[::1] col = np.ascontiguousarray(col_in, dtype=np.int16)
    cdef cnp.int16_t[::1] pel = np.ascontiguousarray(pel_in, dtype=np.int16)
    cdef cnp.int16_t[:, ::1] wtab = np.ascontiguousarray(wtab_in, dtype=np.int16)
    cdef cnp.int32_t[:, :, ::1] lookup = np.ascontiguousarray(lookup_in, dtype=np.int32)
    cdef cnp.int32_t[::1] member = np.ascontiguousarray(member_in, dtype=np.int32)
    cdef cnp.int64_t[::1] class_elems = np.ascontiguousarray(class_elems_in, dtype=np.int64)
    cdef Py_ssize_t c = row.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc_arr = np.zeros(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] acc = acc_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.empty(nelem, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = touched_arr
    # membership marker: acc[z] alone cannot flag first touch because
    # coefficient cancellation may bring it back to zero mid-sweep
    cdef cnp.ndarray[cnp.int8_t, ndim=1] seen_arr = np.zeros(nelem, dtype=np.int8)
    cdef cnp.int8_t[::1] seen = seen_arr
    cdef Py_ssize_t a, b, p, q, z, ntouch
    cdef cnp.int64_t exp_elem, nbad = 0
    cdef bint ok, exp_seen
    cdef object first = None
    for a in range(c):
        for b in range(c):
            ntouch = 0
            for p in range(indptr[a], indptr[a + 1]):
                for q in range(indptr[b], indptr[b + 1]):
                    z = table[indices[p], indices[q]]
                    if not seen[z]:
                        seen[z] = 1
                        touched[ntouch] = z
                        ntouch += 1
                    acc[z] += vals[p] * vals[q]
            if col[a] == row[b]:
                exp_elem = lookup[row[a], wtab[pel[a], pel[b]], col[b]]
            else:
                exp_elem = -1
            ok = True
            exp_seen = False
            for p in range(ntouch):
                z = touched[p]
                if member[z] >= 0 and acc[z] != 0:
                    if z == exp_elem:
                        exp_seen = True
                        if acc[z] != 1:
                            ok = False
                    else:
                        ok = False
            if exp_elem >= 0 and not exp_seen:
                ok = False
            for p in range(ntouch):
                acc[touched[p]] = 0
                seen[touched[p]] = 0
            if not ok:
                nbad += 1
                if first is None:
                    first = (a, b)
    return nbad, first


def block_multiplicative(table_in, colmap_in, gelem_in, wtab_in):
    cdef cnp.int32_t[:, ::1] table = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef cnp.int16_t[:, ::1] colmap = np.ascontiguousarray(colmap_in, dtype=np.int16)
    cdef cnp.int16_t[:, ::1] gelem = np.ascontiguousarray(gelem_in, dtype=np.int16)
    cdef cnp.int16_t[:, ::1] wtab = np.ascontiguousarray(wtab_in, dtype=np.int16)
    cdef Py_ssize_t n = colmap.shape[0]
    cdef Py_ssize_t d = colmap.shape[1]
    cdef Py_ssize_t s, t, k
    cdef int c1, c2, g, st
    cdef cnp.int64_t nbad = 0
    cdef object first = None
    cdef bint ok
    for s in range(n):
        for t in range(n):
            st = table[s, t]
            ok = True
            for k in range(d):
                c1 = colmap[s, k]
                if c1 >= 0:
                    c2 = colmap[t, c1]
                else:
                    c2 = -1
                if c2 != colmap[st, k]:
                    ok = False
                    break
                if c2 >= 0:
                    g = wtab[gelem[s, k], gelem[t, c1]]
                    if g != gelem[st, k]:
                        ok = False
                        break
            if not ok:
                nbad += 1
                if first is None:
                    first = (s, t)
    return nbad, first
