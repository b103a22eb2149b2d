"""Cross-section lattice: the poset of idempotent classes of the monoid.

A nonzero entry is determined by a subset X of the simple-root indices with no
connected Dynkin component lying inside J.  The entry carries two commuting
parabolic factors: the group generated by X (acting faithfully on the standard
face) and the part of J orthogonal to X (fixing the standard face pointwise).
The adjoined zero entry owns the empty face and a trivial factor group.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadJ, NotInWe, PropertyViolation


class CrossSectionEntry:
    def __init__(self, eid, X, lambda_substar, lam, wstar, wsub, we, d_e, class_size,
                 is_zero=False):
        self.eid = eid
        self.X = X
        self.lambda_substar = lambda_substar
        self.lam = lam
        self.wstar = wstar
        self.wsub = wsub
        self.we = we
        self.d_e = d_e
        self.class_size = class_size
        self.is_zero = is_zero
        self.standard_vertices = None
        self._factorization = None

    def __repr__(self):
        if self.is_zero:
            return "CrossSectionEntry(zero)"
        return "CrossSectionEntry(%d, X=%s)" % (self.eid, sorted(self.X))

    def factorization(self):
        """Unique factorization map w -> (u, v) over W(e) = W*(e) x W_*(e)."""
        if self._factorization is None:
            table = {}
            for u in self.wstar.elements:
                for v in self.wsub.elements:
                    w = u * v
                    if w in table:
                        raise PropertyViolation(
                            "factor decomposition not unique in entry %d" % self.eid,
                            witness=w,
                        )
                    table[w] = (u, v)
            self._factorization = table
        return self._factorization


class CrossSectionLattice:
    def __init__(self, datum, J, entries, mu):
        self.datum = datum
        self.J = J
        self.entries = entries
        self.mu = mu
        self.zero_entry = entries[0]
        self.unit_entry = entries[-1]
        self.by_X = {e.X: e for e in entries if not e.is_zero}
        self.by_eid = {e.eid: e for e in entries}

    def leq(self, eid, fid):
        e, f = self.by_eid[eid], self.by_eid[fid]
        if e.is_zero:
            return True
        if f.is_zero:
            return e.is_zero
        return e.X <= f.X

    def nonzero_entries(self):
        return [e for e in self.entries if not e.is_zero]


def _components(datum, X):
    """Connected components of the induced Dynkin subdiagram on X."""
    remaining = set(X)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(remaining - comp):
                if datum.cartan[i - 1][j - 1] != 0:
                    comp.add(j)
                    frontier.append(j)
        comps.append(frozenset(comp))
        remaining -= comp
    return comps


def lambda_star_sets(datum, J):
    """All X subsets of the simple roots with no connected component inside J,
    sorted by (size, vertex list)."""
    J = validate_J(datum, J)
    n = datum.rank
    out = []
    for mask in range(1 << n):
        X = frozenset(i + 1 for i in range(n) if mask >> i & 1)
        if all(not comp <= J for comp in _components(datum, X)):
            out.append(X)
    out.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return out


def validate_J(datum, J):
    J = frozenset(int(j) for j in J)
    full = frozenset(range(1, datum.rank + 1))
    if not J <= full:
        raise BadJ("J=%s is not a subset of 1..%d" % (sorted(J), datum.rank))
    if J == full:
        raise BadJ("J must be a proper subset of the simple roots")
    return J


def complete_entry(datum, group, J, X, eid=None):
    """Populate one nonzero entry from its defining subset X."""
    J = validate_J(datum, J)
    X = frozenset(X)
    if any(comp <= J for comp in _components(datum, X)):
        raise PropertyViolation("X=%s has a component inside J" % sorted(X))
    sub = frozenset(
        a for a in J - X
        if all(datum.cartan[a - 1][b - 1] == 0 for b in X)
    )
    lam = X | sub
    wstar = group.subgroup(X)
    wsub = group.subgroup(sub)
    we = group.subgroup(lam)
    if wstar.order * wsub.order != we.order:
        raise PropertyViolation(
            "W(e) does not factor as W*(e) x W_*(e) for X=%s" % sorted(X)
        )
    d_e = group.order // we.order
    return CrossSectionEntry(
        eid, X, sub, lam, wstar, wsub, we, d_e, d_e * d_e * wstar.order
    )


def build_cross_section(datum, J, group):
    """All entries in ascending order: zero first, then by (|X|, vertex list)."""
    J = validate_J(datum, J)
    trivial = group.subgroup(())
    zero = CrossSectionEntry(
        0, frozenset(), None, None, trivial, None, None, 1, 1, is_zero=True
    )
    entries = [zero]
    for k, X in enumerate(lambda_star_sets(datum, J)):
        entries.append(complete_entry(datum, group, J, X, eid=k + 1))
    mu = _weight_from_J(datum, J)
    return CrossSectionLattice(datum, J, entries, mu)


def _weight_from_J(datum, J):
    mu = [Fraction(0)] * datum.dim
    for i in range(1, datum.rank + 1):
        if i not in J:
            w = datum.fundamental_weights[i - 1]
            for k in range(datum.dim):
                mu[k] += w[k]
    return tuple(mu)


def projection_components(entry, w):
    """Split w in W(e) into its (W*, W_*) components."""
    table = entry.factorization()
    if w not in table:
        raise NotInWe("element is not in the stabilizer group of entry %d" % entry.eid)
    return table[w]
