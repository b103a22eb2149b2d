"""Irreducible representations and characters of the monoid.

Every nonzero entry e of the cross-section contributes one irreducible per
irreducible of its factor group W*(e).  The factor-group matrices are induced
to block rook matrices indexed by the orbit faces of the entry: the block in
row K is the factor-group matrix of the projection of e_K * sigma, placed in
the column of the image face, and rows with K not inside the domain stay
zero.  Characters take the same shape, summing factor-group character values
over the faces that sigma fixes.  The zero entry contributes the trivial
representation sending every element, including zero, to 1.

Matrix models exist when every connected component of the diagram on
lambda*(e) is a path: plain paths give symmetric groups in seminormal form,
paths ending in a double bond give signed-permutation groups in the induced
basis.  Branching components fall back to characters only, which need nothing
beyond the factor group's character table.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from .chartable import character_table
from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    PropertyViolation,
    UnsupportedComponent,
    WrongClass,
)
from . import kernels
from .linalg import kron, mat_eq, mat_identity, mat_mul, mat_trace
from .seminormal import (
    bipartitions,
    hyperoctahedral_irrep,
    partitions,
    symmetric_group_irrep,
)
from .weyl import simple_reflection


def _cache(ctx, name):
    d = getattr(ctx, name, None)
    if d is None:
        d = {}
        setattr(ctx, name, d)
    return d


def char_table_of(ctx, entry):
    """Character table of the factor group W*(e), cached per entry."""
    cache = _cache(ctx, "_chartables")
    if entry.eid not in cache:
        cache[entry.eid] = character_table(entry.wstar)
    return cache[entry.eid]


def _is_flip(w):
    n = len(w.perm)
    if w.perm != tuple(range(n)):
        return False
    return sum(1 for s in w.signs if s == -1) == 1


def _component_paths(datum, X):
    """Connected components of the diagram on X as oriented paths.

    Returns (kind, path) per component, ordered by smallest vertex.  Kind "A"
    is a simply laced path read from its smaller endpoint; kind "BC" is a path
    whose single double bond sits at the far end, next to the reflection that
    flips one coordinate.  Anything else has no matrix model here.
    """
    adj = {v: [] for v in X}
    double = []
    for a in X:
        for b in X:
            if a < b and datum.cartan[a - 1][b - 1] != 0:
                adj[a].append(b)
                adj[b].append(a)
                if datum.cartan[a - 1][b - 1] * datum.cartan[b - 1][a - 1] == 2:
                    double.append((a, b))
    comps = []
    seen = set()
    for v in sorted(X):
        if v in seen:
            continue
        comp = set()
        stack = [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u])
        seen |= comp
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        if any(len(adj[v]) > 2 for v in comp):
            raise UnsupportedComponent(
                "component %s branches; only path components have matrix models"
                % comp
            )
        dbl = [e for e in double if e[0] in comp]
        if len(dbl) > 1:
            raise UnsupportedComponent(
                "component %s has several double bonds" % comp
            )
        if len(comp) == 1:
            out.append(("A", tuple(comp)))
            continue
        ends = [v for v in comp if len(adj[v]) == 1]
        if len(ends) != 2:
            raise UnsupportedComponent("component %s is not a path" % comp)
        if dbl:
            flips = [
                v
                for v in dbl[0]
                if _is_flip(simple_reflection(datum, v))
            ]
            if len(flips) != 1 or len(adj[flips[0]]) != 1:
                raise UnsupportedComponent(
                    "double bond in %s does not end at a coordinate flip" % comp
                )
            last = flips[0]
            start = ends[0] if ends[1] == last else ends[1]
            kind = "BC"
        else:
            start = min(ends)
            kind = "A"
        path = [start]
        prev = None
        while len(path) < len(comp):
            cur = path[-1]
            nxt = [u for u in adj[cur] if u != prev]
            prev = cur
            path.append(nxt[0])
        out.append((kind, tuple(path)))
    return out


class MatrixRep:
    """Exact matrix model of one irreducible of a factor group W*(e).

    `genmap` sends each vertex of lambda*(e) to a rational matrix; all group
    elements are evaluated through the subgroup's word tree, and the whole
    table (or, for larger groups, the defining relations plus a random
    sample) is checked multiplicative at construction.
    """

    def __init__(self, entry, label, degree, genmap, seed=0):
        self.entry = entry
        self.label = label
        self.degree = degree
        self.genmap = genmap
        self.chi_row = None
        handle = entry.wstar
        mats = [mat_identity(degree)]
        for i in range(1, handle.order):
            g = handle.words[i][-1]
            # generators are involutions, so parent = element * generator
            parent = handle.index[handle.elements[i] * handle.gen_elements[g]]
            mats.append(mat_mul(mats[parent], genmap[handle.gen_labels[g]]))
        self._mats = mats
        self._pos = handle.index
        self._verify(seed)

    def evaluate(self, w):
        """Matrix of a factor-group element (a group element in W*(e))."""
        return self._mats[self._pos[w]]

    def evaluate_local(self, i):
        return self._mats[i]

    def trace_vector(self):
        """Integer traces over the conjugacy classes of the factor group."""
        cc = self.entry.wstar.conjugacy_classes()
        out = []
        for w in cc.reps:
            t = mat_trace(self.evaluate(w))
            if t.denominator != 1:
                raise PropertyViolation(
                    "non-integer trace in a matrix model", witness=self.label
                )
            out.append(int(t))
        return tuple(out)

    def _verify(self, seed):
        handle = self.entry.wstar
        n = handle.order
        if n <= 60:
            pairs = ((a, b) for a in range(n) for b in range(n))
        else:
            datum = handle.ambient.datum
            ident = mat_identity(self.degree)
            for a in handle.gen_labels:
                ga = self.genmap[a]
                if not mat_eq(mat_mul(ga, ga), ident):
                    raise PropertyViolation(
                        "generator matrix is not an involution",
                        witness=(self.label, a),
                    )
                for b in handle.gen_labels:
                    if b <= a:
                        continue
                    m = datum.coxeter[a - 1][b - 1]
                    prod = mat_mul(ga, self.genmap[b])
                    acc = mat_identity(self.degree)
                    for _ in range(m):
                        acc = mat_mul(acc, prod)
                    if not mat_eq(acc, ident):
                        raise PropertyViolation(
                            "generator matrices break a braid relation",
                            witness=(self.label, a, b),
                        )
            rng = random.Random(seed or 0x5eed)
            pairs = (
                (rng.randrange(n), rng.randrange(n)) for _ in range(300)
            )
        for a, b in pairs:
            left = mat_mul(self._mats[a], self._mats[b])
            if not mat_eq(left, self._mats[handle.mul(a, b)]):
                raise PropertyViolation(
                    "matrix model is not multiplicative on the factor group",
                    witness=(self.label, a, b),
                )


def irreps_of_parabolic(ctx, entry, sym_bound=7, hyp_bound=5):
    """All irreducible matrix models of W*(e), one per character row.

    Labels are tuples with one partition (path component) or partition pair
    (double-bond component) per connected component; the list is sorted by
    the matching row of the factor group's character table.
    """
    if entry.is_zero:
        raise WrongClass("the zero entry carries the trivial representation only")
    comps = _component_paths(ctx.datum, entry.X)
    menus = []
    for kind, path in comps:
        k = len(path)
        menu = []
        if kind == "A":
            for shape in partitions(k + 1):
                f, gens = symmetric_group_irrep(shape, bound=sym_bound)
                menu.append((shape, f, dict(zip(path, gens))))
        else:
            for lam, mu in bipartitions(k):
                f, gens = hyperoctahedral_irrep(lam, mu, k, bound=hyp_bound)
                menu.append(((lam, mu), f, dict(zip(path, gens))))
        menus.append(menu)
    reps = []
    for combo in itertools.product(*menus):
        label = tuple(c[0] for c in combo)
        degree = 1
        for c in combo:
            degree *= c[1]
        genmap = {}
        for v in entry.X:
            pieces = [c[2][v] if v in c[2] else mat_identity(c[1]) for c in combo]
            m = pieces[0]
            for p in pieces[1:]:
                m = kron(m, p)
            genmap[v] = m
        reps.append(MatrixRep(entry, label, degree, genmap))
    table = char_table_of(ctx, entry)
    if len(reps) != table.nclasses:
        raise DimensionMismatch(
            "%d matrix models against %d character rows for entry %d"
            % (len(reps), table.nclasses, entry.eid)
        )
    used = {}
    for rep in reps:
        tv = rep.trace_vector()
        row = next((ri for ri, r in enumerate(table.rows) if r == tv), None)
        if row is None:
            raise PropertyViolation(
                "matrix model matches no character row", witness=rep.label
            )
        if row in used:
            raise PropertyViolation(
                "two matrix models share a character row",
                witness=(used[row], rep.label),
            )
        used[row] = rep.label
        rep.chi_row = row
    reps.sort(key=lambda r: r.chi_row)
    return reps


def _decoration(ctx, entry):
    """Per-element face bookkeeping for one entry, from the full table.

    For every monoid element s and orbit face position i, `colmap[s, i]` is
    the position of the image face when the face lies inside the domain of s
    (else -1), and `gelem[s, i]` is the position in the sorted factor group
    of the projection of e_K * s.  `wclass` maps factor-group positions to
    conjugacy classes.
    """
    cache = _cache(ctx, "_decorations")
    if entry.eid in cache:
        return cache[entry.eid]
    monoid = ctx.monoid
    if monoid is None:
        raise DimensionMismatch("enumerate the monoid before building representations")
    if monoid.table is None:
        raise DimensionMismatch("representations need the full multiplication table")
    data = monoid.class_data[entry.eid]
    start, stop = monoid.class_range(entry.eid)
    n = monoid.order
    d = len(data.faces)
    colmap = np.full((n, d), -1, dtype=np.int16)
    gelem = np.zeros((n, d), dtype=np.int32)
    for i, face in enumerate(data.faces):
        ek = monoid.idx(ctx.idempotent(face))
        grow = monoid.table[ek].astype(np.int64)
        valid = (grow >= start) & (grow < stop)
        posc = np.clip(grow - start, 0, stop - start - 1)
        if not (data.row[posc][valid] == i).all():
            raise PropertyViolation(
                "left idempotent product lands in the wrong row",
                witness=(entry.eid, i),
            )
        colmap[valid, i] = data.col[posc][valid]
        gelem[valid, i] = data.pel[posc][valid]
    table = char_table_of(ctx, entry)
    wclass = np.array(
        [table.class_of_element(w) for w in data.wstar_elems], dtype=np.int16
    )
    cache[entry.eid] = (colmap, gelem, wclass)
    return cache[entry.eid]


def chi_star(ctx, entry, chi_row, sigma):
    """Character of the induced irreducible at a monoid element.

    Sums the factor-group character over the orbit faces sigma fixes; the
    zero entry's character is 1 everywhere.
    """
    if entry.is_zero:
        return 1
    monoid = ctx.monoid
    s = monoid.idx(sigma)
    colmap, gelem, wclass = _decoration(ctx, entry)
    table = char_table_of(ctx, entry)
    total = 0
    for i in range(colmap.shape[1]):
        if colmap[s, i] == i:
            total += table.value(chi_row, int(wclass[gelem[s, i]]))
    return total


def rho_star(ctx, entry, rep, sigma):
    """Full matrix of the induced irreducible at a monoid element.

    A block rook matrix: at most one nonzero block per block row and per
    block column, each an invertible factor-group matrix.
    """
    if entry.is_zero:
        return [[Fraction(1)]]
    monoid = ctx.monoid
    data = monoid.class_data[entry.eid]
    colmap, gelem, _ = _decoration(ctx, entry)
    s = monoid.idx(sigma)
    d = len(data.faces)
    m = rep.degree
    size = d * m
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(d):
        c = int(colmap[s, i])
        if c < 0:
            continue
        block = rep.evaluate(data.wstar_elems[int(gelem[s, i])])
        for a in range(m):
            row = out[i * m + a]
            brow = block[a]
            for b in range(m):
                if brow[b]:
                    row[c * m + b] = brow[b]
    return out


def verify_block_form(ctx, entry):
    """Exhaustive block-level product check of the induced form.

    Confirms for every ordered pair (sigma, tau) that the face bookkeeping of
    sigma tau is the composition of the individual bookkeepings: matched
    columns and rows chain, carried factor-group elements multiply.  Together
    with the multiplicativity of the factor-group matrices this gives
    rho*(sigma tau) = rho*(sigma) rho*(tau) on all pairs.  Returns the number
    of pairs checked.
    """
    n = ctx.monoid.order
    if entry.is_zero:
        return n * n
    colmap, gelem, _ = _decoration(ctx, entry)
    data = ctx.monoid.class_data[entry.eid]
    nbad, first = kernels.block_multiplicative(
        ctx.monoid.table, colmap, gelem, data.wtab
    )
    if nbad:
        raise PropertyViolation(
            "induced block form of entry %d breaks on %d pairs"
            % (entry.eid, nbad),
            witness=first,
        )
    return n * n


class InducedRep:
    """One irreducible of the monoid.

    Pairs an entry with a character row of its factor group; carries the
    induced matrix model when the entry's diagram is a union of paths, and
    characters only otherwise.
    """

    def __init__(self, ctx, entry, chi_row, label, matrix_rep=None):
        self.ctx = ctx
        self.entry = entry
        self.chi_row = chi_row
        self.label = label
        self.matrix_rep = matrix_rep
        if entry.is_zero:
            self.degree = 1
        else:
            table = char_table_of(ctx, entry)
            self.degree = entry.d_e * table.degrees[chi_row]

    @property
    def has_matrices(self):
        return self.entry.is_zero or self.matrix_rep is not None

    def character(self, sigma):
        return chi_star(self.ctx, self.entry, self.chi_row, sigma)

    def evaluate(self, sigma):
        if self.entry.is_zero:
            return [[Fraction(1)]]
        if self.matrix_rep is None:
            raise UnsupportedComponent(
                "entry %d has no matrix model; characters only" % self.entry.eid
            )
        return rho_star(self.ctx, self.entry, self.matrix_rep, sigma)

    def character_vector(self):
        """Character values over every monoid element, in monoid order."""
        return tuple(self.character(s) for s in self.ctx.monoid.elements)


def all_irreducibles(ctx, sym_bound=7, hyp_bound=5):
    """The complete list of irreducibles, entries ascending.

    The squared degrees add up to the monoid order.  Entries with a branching
    diagram component, or with components past the seminormal bounds, get
    character-only items.
    """
    if ctx.monoid is None:
        raise DimensionMismatch("enumerate the monoid before building representations")
    out = []
    for entry in ctx.cs.entries:
        if entry.is_zero:
            out.append(InducedRep(ctx, entry, 0, "trivial"))
            continue
        table = char_table_of(ctx, entry)
        try:
            mreps = irreps_of_parabolic(ctx, entry, sym_bound, hyp_bound)
        except (UnsupportedComponent, GroupTooLarge):
            mreps = None
        if mreps is None:
            for row in range(len(table.rows)):
                out.append(InducedRep(ctx, entry, row, ("chi", entry.eid, row)))
        else:
            for rep in mreps:
                out.append(
                    InducedRep(ctx, entry, rep.chi_row, rep.label, matrix_rep=rep)
                )
    total = sum(r.degree * r.degree for r in out)
    if total != ctx.monoid.order:
        raise DimensionMismatch(
            "squared degrees add to %d but the monoid has order %d"
            % (total, ctx.monoid.order)
        )
    return out
