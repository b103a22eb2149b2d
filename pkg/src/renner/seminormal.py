"""Exact rational matrix models for the factor groups of the entries.

Symmetric groups: Young's seminormal form on standard tableaux, with the
rational 2x2 involution blocks driven by axial distances.  Signed-permutation
groups: the induced basis (A, P, Q) where A marks the coordinates carrying
the trivial sign character, P runs over tableaux of the first partition and Q
over the second; transpositions act through the seminormal matrices of the
marked or unmarked block and the last-coordinate flip acts diagonally.
All matrices are over Fraction and follow the column convention
rho(g*h) = rho(g) * rho(h).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import GroupTooLarge


def partitions(n):
    """Partitions of n in descending lexicographic order."""
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def bipartitions(n):
    """Pairs of partitions with total size n, first block size descending."""
    out = []
    for a in range(n, -1, -1):
        for lam in partitions(a):
            for mu in partitions(n - a):
                out.append((lam, mu))
    return out


def standard_tableaux(shape):
    """All standard tableaux of the shape, as tuples of row tuples."""
    n = sum(shape)
    if n == 0:
        return [()]
    out = []
    for i in range(len(shape)):
        is_corner = shape[i] > 0 and (i == len(shape) - 1 or shape[i + 1] < shape[i])
        if not is_corner:
            continue
        sub = list(shape)
        sub[i] -= 1
        if sub[i] == 0:
            sub = sub[:i]
        for t in standard_tableaux(tuple(sub)):
            rows = [list(r) for r in t]
            while len(rows) <= i:
                rows.append([])
            rows[i].append(n)
            out.append(tuple(tuple(r) for r in rows))
    return out


def _swap_entries(t, a, b):
    return tuple(
        tuple(b if x == a else a if x == b else x for x in row) for row in t
    )


def symmetric_group_irrep(shape, bound=7):
    """Seminormal matrices (f, [g_1..g_{n-1}]) for the irreducible of the shape;
    generator g_i is the transposition of the letters i, i+1."""
    n = sum(shape)
    if n > bound:
        raise GroupTooLarge(
            "seminormal model for %d letters exceeds the bound %d" % (n, bound)
        )
    tabs = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    f = len(tabs)
    pos = []
    for t in tabs:
        d = {}
        for r, row in enumerate(t):
            for c, e in enumerate(row):
                d[e] = (r, c)
        pos.append(d)
    gens = []
    for i in range(1, n):
        mat = [[Fraction(0)] * f for _ in range(f)]
        for ti, t in enumerate(tabs):
            r1, c1 = pos[ti][i]
            r2, c2 = pos[ti][i + 1]
            if r1 == r2:
                mat[ti][ti] = Fraction(1)
            elif c1 == c2:
                mat[ti][ti] = Fraction(-1)
            else:
                dist = (c2 - r2) - (c1 - r1)
                if dist > 0:
                    tj = index[_swap_entries(t, i, i + 1)]
                    inv = Fraction(1, dist)
                    mat[ti][ti] = inv
                    mat[tj][ti] = Fraction(1)
                    mat[ti][tj] = 1 - inv * inv
                    mat[tj][tj] = -inv
        gens.append(mat)
    return f, gens


def hyperoctahedral_irrep(lam, mu, k, bound=5):
    """Induced-basis matrices (f, [s_1..s_{k-1}, t]) for the bipartition;
    s_j swaps coordinates j, j+1 and t flips the last coordinate."""
    if k > bound:
        raise GroupTooLarge(
            "signed-permutation model for %d coordinates exceeds the bound %d"
            % (k, bound)
        )
    if sum(lam) + sum(mu) != k:
        raise ValueError("bipartition sizes must add up to %d" % k)
    a = sum(lam)
    fl, gens_l = symmetric_group_irrep(lam, bound=bound)
    fm, gens_m = symmetric_group_irrep(mu, bound=bound)
    subsets = list(itertools.combinations(range(1, k + 1), a))
    sub_index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets) * fl * fm

    def idx(ai, pi, qi):
        return (ai * fl + pi) * fm + qi

    gens = []
    for j in range(1, k):
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for ai, sub in enumerate(subsets):
            in1, in2 = j in sub, (j + 1) in sub
            if in1 and in2:
                r = sub.index(j) + 1
                g = gens_l[r - 1]
                for pi in range(fl):
                    for ppi in range(fl):
                        c = g[ppi][pi]
                        if c:
                            for qi in range(fm):
                                mat[idx(ai, ppi, qi)][idx(ai, pi, qi)] += c
            elif not in1 and not in2:
                comp = [x for x in range(1, k + 1) if x not in sub]
                r = comp.index(j) + 1
                g = gens_m[r - 1]
                for qi in range(fm):
                    for qqi in range(fm):
                        c = g[qqi][qi]
                        if c:
                            for pi in range(fl):
                                mat[idx(ai, pi, qqi)][idx(ai, pi, qi)] += c
            else:
                other = tuple(sorted(set(sub) ^ {j, j + 1}))
                oi = sub_index[other]
                for pi in range(fl):
                    for qi in range(fm):
                        mat[idx(oi, pi, qi)][idx(ai, pi, qi)] = Fraction(1)
        gens.append(mat)
    flip = [[Fraction(0)] * dim for _ in range(dim)]
    for ai, sub in enumerate(subsets):
        val = Fraction(1) if k in sub else Fraction(-1)
        for pi in range(fl):
            for qi in range(fm):
                b = idx(ai, pi, qi)
                flip[b][b] = val
    gens.append(flip)
    return dim, gens
