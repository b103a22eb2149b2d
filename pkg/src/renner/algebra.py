"""Rational monoid algebra: idempotent system, ideal filtration, and the
matrix isomorphism on each central summand.

Vectors are sparse rational combinations of monoid elements, indexed by the
fixed element order of the enumerated monoid.  The face idempotents eta_K are
Moebius-signed sums of face idempotents e_J over subfaces (the empty face
contributing the zero element); summing over one orbit gives the central
idempotent eta_e of an entry.  On the summand A eta_e, reading off the
class coefficients gives a matrix over the group algebra of the factor group,
because sigma eta_e equals sigma plus terms in strictly lower classes.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import kernels
from .errors import DimensionMismatch, PropertyViolation, WrongClass


class AlgebraElement:
    __slots__ = ("alg", "vec")

    def __init__(self, alg, vec):
        self.alg = alg
        self.vec = {k: v for k, v in vec.items() if v != 0}

    def __add__(self, other):
        out = dict(self.vec)
        for k, v in other.vec.items():
            out[k] = out.get(k, Fraction(0)) + v
        return AlgebraElement(self.alg, out)

    def __sub__(self, other):
        out = dict(self.vec)
        for k, v in other.vec.items():
            out[k] = out.get(k, Fraction(0)) - v
        return AlgebraElement(self.alg, out)

    def scale(self, c):
        c = Fraction(c)
        return AlgebraElement(self.alg, {k: c * v for k, v in self.vec.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.alg.mul(self, other)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.vec == other.vec

    def __hash__(self):
        return hash(frozenset(self.vec.items()))

    def is_zero(self):
        return not self.vec

    def support(self):
        return sorted(self.vec)

    def terms(self):
        return [(k, self.vec[k]) for k in sorted(self.vec)]

    def coefficient(self, idx):
        return self.vec.get(idx, Fraction(0))

    def to_json(self):
        from .monoid import format_element

        return {
            "terms": [
                {
                    "element": format_element(self.alg.monoid.elements[k]),
                    "numerator": v.numerator,
                    "denominator": v.denominator,
                }
                for k, v in self.terms()
            ]
        }

    def __repr__(self):
        return "AlgebraElement(%d terms)" % len(self.vec)


class MonoidAlgebra:
    """Algebra layer over an enumerated monoid with a multiplication table."""

    def __init__(self, monoid):
        if monoid.table is None:
            raise DimensionMismatch(
                "algebra layer needs the multiplication table; monoid too large"
            )
        self.monoid = monoid
        self.ctx = monoid.ctx
        self._eta_face = {}
        self._eta_class = {}
        self._summands = {}

    # -- construction -------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def basis(self, sigma_or_idx):
        idx = (
            sigma_or_idx
            if isinstance(sigma_or_idx, int)
            else self.monoid.idx(sigma_or_idx)
        )
        return AlgebraElement(self, {idx: Fraction(1)})

    def one(self):
        return self.basis(self.ctx.unit)

    def from_json(self, payload):
        from .monoid import parse_element

        vec = {}
        for term in payload["terms"]:
            idx = self.monoid.idx(parse_element(self.ctx, term["element"]))
            vec[idx] = vec.get(idx, Fraction(0)) + Fraction(
                term["numerator"], term["denominator"]
            )
        return AlgebraElement(self, vec)

    def mul(self, a, b):
        ia, na, da = _to_arrays(a.vec)
        ib, nb, db = _to_arrays(b.vec)
        ic, nc, dc = kernels.sparse_mul(self.monoid.table, ia, na, da, ib, nb, db)
        return AlgebraElement(
            self,
            {int(k): Fraction(int(n), int(d)) for k, n, d in zip(ic, nc, dc)},
        )

    # -- idempotent system --------------------------------------------

    def eta_face(self, face):
        """Moebius-signed idempotent of one face."""
        if face.fid not in self._eta_face:
            from .polytope import subfaces

            vec = {}
            for sub in subfaces(self.ctx.lattice, face):
                idx = self.monoid.idx(self.ctx.idempotent(sub))
                sign = (-1) ** (face.dim - sub.dim)
                vec[idx] = vec.get(idx, 0) + Fraction(sign)
            self._eta_face[face.fid] = AlgebraElement(self, vec)
        return self._eta_face[face.fid]

    def eta_class(self, entry):
        """Central idempotent of one entry: sum of eta_K over the face orbit."""
        if entry.eid not in self._eta_class:
            if entry.is_zero:
                out = self.basis(self.ctx.zero)
            else:
                out = self.zero()
                for f in self.ctx.lattice.orbits[entry.eid]:
                    out = out + self.eta_face(f)
            self._eta_class[entry.eid] = out
        return self._eta_class[entry.eid]

    def verify_idempotent_system(self):
        """Exhaustive checks of the idempotent system; raises PropertyViolation
        with a witness on the first failure, else returns a count report."""
        lattice = self.ctx.lattice
        n = self.monoid.order
        etas = []
        for f in lattice.faces:
            v = self.eta_face(f)
            idx, num, _ = _to_arrays(v.vec)
            etas.append((idx, num))
        witness = kernels.eta_orthogonality(self.monoid.table, etas, n)
        if witness is not None:
            k, j = witness
            raise PropertyViolation(
                "face idempotents not orthogonal",
                witness=(lattice.faces[k], lattice.faces[j]),
            )
        from .polytope import subfaces

        for f in lattice.faces:
            acc = self.zero()
            for sub in subfaces(lattice, f):
                acc = acc + self.eta_face(sub)
            if acc != self.basis(self.ctx.idempotent(f)):
                raise PropertyViolation("Moebius inversion failed", witness=f)
        entries = self.ctx.cs.entries
        for e in entries:
            he = self.eta_class(e)
            if he * he != he:
                raise PropertyViolation("class idempotent not idempotent", witness=e)
            idx, num, _ = _to_arrays(he.vec)
            bad = kernels.centrality(self.monoid.table, idx, num, n)
            if bad >= 0:
                raise PropertyViolation(
                    "class idempotent not central",
                    witness=(e, self.monoid.elements[bad]),
                )
        for e in entries:
            for f in entries:
                if e.eid < f.eid:
                    prod = self.eta_class(e) * self.eta_class(f)
                    if not prod.is_zero():
                        raise PropertyViolation(
                            "class idempotents not orthogonal", witness=(e, f)
                        )
        total = self.zero()
        for e in entries:
            total = total + self.eta_class(e)
        if total != self.one():
            raise PropertyViolation("class idempotents do not sum to the identity")
        return {
            "face_idempotents": len(lattice.faces),
            "class_idempotents": len(entries),
            "orthogonality_pairs": len(lattice.faces) ** 2,
            "centrality_elements": n * len(entries),
        }

    # -- ideal filtration ---------------------------------------------

    def ideal_filter(self, entry):
        """Two-sided ideal of all classes at or below the entry; verifies the
        ideal law exhaustively and the dimension bookkeeping."""
        cs = self.ctx.cs
        below = [f for f in cs.entries if cs.leq(f.eid, entry.eid)]
        member = np.zeros(self.monoid.order, dtype=bool)
        for f in below:
            lo, hi = self.monoid.class_range(f.eid)
            member[lo:hi] = True
        ideal_idx = np.nonzero(member)[0]
        table = self.monoid.table
        if not member[table[ideal_idx, :]].all() or not member[table[:, ideal_idx]].all():
            raise PropertyViolation("filtration set is not a two-sided ideal",
                                    witness=entry)
        expected = sum(f.class_size for f in below)
        if len(ideal_idx) != expected:
            raise DimensionMismatch(
                "ideal has %d basis elements, expected %d" % (len(ideal_idx), expected)
            )
        return {
            "entry": entry.eid,
            "elements": [self.monoid.elements[int(i)] for i in ideal_idx],
            "dimension": int(len(ideal_idx)),
            "summands": [f.eid for f in below],
        }

    # -- matrix isomorphism -------------------------------------------

    def summand(self, entry):
        """Cached layout of A eta_e: the row sigma*eta_e for every class
        element, plus lookup arrays shared with the verification kernels."""
        if entry.eid in self._summands:
            return self._summands[entry.eid]
        if entry.is_zero:
            raise WrongClass("the zero summand is one-dimensional; no layout needed")
        data = self.monoid.class_data[entry.eid]
        he = self.eta_class(entry)
        ie, ne, de = _to_arrays(he.vec)
        table = self.monoid.table
        indptr = [0]
        indices = []
        vals = []
        start = data.start
        csize = len(data.elements)
        for a in range(csize):
            gidx = start + a
            one = np.array([gidx], dtype=np.int64)
            unit = np.array([1], dtype=np.int64)
            ic, nc, dc = kernels.sparse_mul(table, one, unit, unit, ie, ne, de)
            if not (dc == 1).all():
                raise PropertyViolation("summand rows must have integer coefficients")
            indices.extend(int(x) for x in ic)
            vals.extend(int(x) for x in nc)
            indptr.append(len(indices))
        d = len(data.faces)
        k = len(data.wstar_elems)
        lookup = np.arange(csize, dtype=np.int32).reshape(d, k, d) + start
        member = np.full(self.monoid.order, -1, dtype=np.int32)
        member[start:start + csize] = np.arange(csize, dtype=np.int32)
        class_elems = np.arange(start, start + csize, dtype=np.int64)
        summand = {
            "entry": entry,
            "data": data,
            "indptr": np.array(indptr, dtype=np.int64),
            "indices": np.array(indices, dtype=np.int64),
            "vals": np.array(vals, dtype=np.int64),
            "lookup": lookup,
            "member": member,
            "class_elems": class_elems,
        }
        self._summands[entry.eid] = summand
        return summand

    def verify_summand_multiplicative(self, entry):
        """Exhaustive product check of one summand in matrix-unit form.

        For every ordered pair of class elements sigma, tau the product
        (sigma eta_e)(tau eta_e) must match the matrix-unit rule: zero unless
        the column face of sigma is the row face of tau, and otherwise the
        class element carrying the composed factor-group element.  Returns
        the number of pairs checked.
        """
        if entry.is_zero:
            return 1
        s = self.summand(entry)
        data = s["data"]
        nbad, first = kernels.psi_multiplicative(
            self.monoid.table,
            s["indptr"],
            s["indices"],
            s["vals"],
            data.row,
            data.col,
            data.pel,
            data.wtab,
            s["lookup"],
            s["member"],
            s["class_elems"],
            self.monoid.order,
        )
        if nbad:
            raise PropertyViolation(
                "summand of entry %d breaks matrix-unit multiplication on "
                "%d pairs" % (entry.eid, nbad),
                witness=first,
            )
        return len(data.row) ** 2

    def summand_triangular(self, entry):
        """Verify that the class coefficients of sigma*eta_e form the identity
        pattern over the class, which pins dim A eta_e = |class|."""
        s = self.summand(entry)
        member = s["member"]
        csize = len(s["class_elems"])
        for a in range(csize):
            lo, hi = s["indptr"][a], s["indptr"][a + 1]
            for pos, val in zip(s["indices"][lo:hi], s["vals"][lo:hi]):
                p = member[int(pos)]
                if p >= 0 and not (p == a and val == 1):
                    return False
            if member[int(s["class_elems"][a])] < 0:
                return False
        return True

    def psi(self, entry, x):
        """Matrix image of x in A eta_e: class coefficients arranged by
        (row face, column face) with group-algebra entries."""
        if entry.is_zero:
            he = self.eta_class(entry)
            if x * he != x:
                raise WrongClass("element is not in the zero summand")
            return MatrixOverGroupAlgebra.scalar(entry, x.coefficient(0))
        he = self.eta_class(entry)
        if x * he != x:
            raise WrongClass("element is not in the summand of entry %d" % entry.eid)
        s = self.summand(entry)
        data = s["data"]
        d = len(data.faces)
        mat = MatrixOverGroupAlgebra.zero(entry, d)
        member = s["member"]
        for idx, c in x.vec.items():
            p = int(member[idx])
            if p < 0:
                continue
            i, u, j = int(data.row[p]), int(data.pel[p]), int(data.col[p])
            cell = mat.data[i][j]
            cell[u] = cell.get(u, Fraction(0)) + c
        mat.prune()
        return mat

    def psi_inverse(self, entry, mat):
        """Preimage in A eta_e of a matrix over the factor-group algebra."""
        if entry.is_zero:
            return self.basis(self.ctx.zero).scale(mat.data[0][0].get(0, Fraction(0)))
        s = self.summand(entry)
        he = self.eta_class(entry)
        out = self.zero()
        for i, rowcells in enumerate(mat.data):
            for j, cell in enumerate(rowcells):
                for u, c in cell.items():
                    gidx = int(s["lookup"][i, u, j])
                    out = out + (self.basis(gidx) * he).scale(c)
        return out


class MatrixOverGroupAlgebra:
    """Dense d x d matrix whose entries are vectors over a finite group,
    stored as dicts keyed by the group's sorted element positions."""

    def __init__(self, entry, data):
        self.entry = entry
        self.data = data

    @classmethod
    def zero(cls, entry, d):
        return cls(entry, [[{} for _ in range(d)] for _ in range(d)])

    @classmethod
    def scalar(cls, entry, c):
        out = cls.zero(entry, 1)
        if c:
            out.data[0][0][0] = Fraction(c)
        return out

    @property
    def size(self):
        return len(self.data)

    def prune(self):
        for row in self.data:
            for cell in row:
                for key in [k for k, v in cell.items() if v == 0]:
                    del cell[key]

    def __eq__(self, other):
        if not isinstance(other, MatrixOverGroupAlgebra) or self.size != other.size:
            return False
        for r1, r2 in zip(self.data, other.data):
            for c1, c2 in zip(r1, r2):
                if {k: v for k, v in c1.items() if v} != {k: v for k, v in c2.items() if v}:
                    return False
        return True

    def mul(self, other, wtab):
        d = self.size
        out = MatrixOverGroupAlgebra.zero(self.entry, d)
        for i in range(d):
            for t in range(d):
                cell_a = self.data[i][t]
                if not cell_a:
                    continue
                for j in range(d):
                    cell_b = other.data[t][j]
                    if not cell_b:
                        continue
                    target = out.data[i][j]
                    for u, cu in cell_a.items():
                        for v, cv in cell_b.items():
                            w = int(wtab[u, v])
                            target[w] = target.get(w, Fraction(0)) + cu * cv
        out.prune()
        return out


def _to_arrays(vec):
    idx = sorted(vec)
    nums = [vec[k].numerator for k in idx]
    dens = [vec[k].denominator for k in idx]
    try:
        num = np.array(nums, dtype=np.int64)
        den = np.array(dens, dtype=np.int64)
    except OverflowError:
        # coefficients past 64 bits stay exact as Python ints
        num = np.array(nums, dtype=object)
        den = np.array(dens, dtype=object)
    return np.array(idx, dtype=np.int64), num, den
