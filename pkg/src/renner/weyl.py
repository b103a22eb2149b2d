"""Weyl groups of the classical families as exact signed-permutation groups.

A root datum fixes a rational realization of the simple roots: family A lives
in rank+1 coordinates (permutation action on the sum-zero hyperplane), B, C
and D in rank coordinates (signed permutations).  Group elements act on row
vectors from the right; they are stored as signed permutations of the
coordinates, so composition and comparison are exact integer work, and the
full rational matrix is reconstructed on demand.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import GroupTooLarge, UnsupportedType

FAMILIES = ("A", "B", "C", "D")


class RootDatum:
    """Immutable bundle of family, rank, simple roots and derived pairings."""

    def __init__(self, family, rank, dim, simple_roots, cartan, fundamental_weights):
        self.family = family
        self.rank = rank
        self.dim = dim
        self.simple_roots = simple_roots
        self.cartan = cartan
        self.fundamental_weights = fundamental_weights
        self.coxeter = tuple(
            tuple(_coxeter_entry(cartan[i][j] * cartan[j][i]) if i != j else 1
                  for j in range(rank))
            for i in range(rank)
        )

    def __repr__(self):
        return "RootDatum(%s, %d)" % (self.family, self.rank)

    def pairing(self, v, i):
        """Evaluate <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i)."""
        alpha = self.simple_roots[i - 1]
        return 2 * _dot(v, alpha) / _dot(alpha, alpha)


def _dot(u, v):
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def _coxeter_entry(prod):
    # order of s_i s_j from the off-diagonal Cartan product
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    if prod not in table:
        raise UnsupportedType("Cartan product %r outside the crystallographic range" % (prod,))
    return table[prod]


def group_order(family, rank):
    """Order of the Weyl group, from the classical product formulas."""
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * math.factorial(rank)
    return 2 ** (rank - 1) * math.factorial(rank)


def _simple_root_vectors(family, rank):
    if family == "A":
        dim = rank + 1
        roots = []
        for i in range(rank):
            v = [Fraction(0)] * dim
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
        return dim, roots
    dim = rank
    roots = []
    for i in range(rank - 1):
        v = [Fraction(0)] * dim
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        roots.append(tuple(v))
    last = [Fraction(0)] * dim
    if family == "B":
        last[rank - 1] = Fraction(1)
    elif family == "C":
        last[rank - 1] = Fraction(2)
    else:  # D
        last[rank - 2], last[rank - 1] = Fraction(1), Fraction(1)
    roots.append(tuple(last))
    return dim, roots


def build_root_datum(family, rank):
    if family not in FAMILIES:
        raise UnsupportedType("unknown family %r; expected one of %s" % (family, "/".join(FAMILIES)))
    if not isinstance(rank, int) or rank < 1:
        raise UnsupportedType("rank must be a positive integer, got %r" % (rank,))
    if family == "D" and rank < 4:
        raise UnsupportedType(
            "D_%d rejected: use the isomorphic A-series datum instead (D_2 = A_1 x A_1, D_3 = A_3)"
            % rank
        )
    dim, roots = _simple_root_vectors(family, rank)
    cartan = tuple(
        tuple(int(2 * _dot(roots[i], roots[j]) / _dot(roots[j], roots[j]))
              for j in range(rank))
        for i in range(rank)
    )
    _check_connected(cartan, rank)
    weights = _fundamental_weights(roots, cartan)
    return RootDatum(family, rank, dim, tuple(roots), cartan, weights)


def _check_connected(cartan, rank):
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(rank):
            if j not in seen and cartan[i][j] != 0:
                seen.add(j)
                frontier.append(j)
    if len(seen) != rank:
        raise UnsupportedType("Dynkin diagram is not connected")


def _fundamental_weights(roots, cartan):
    # omega_i = sum_j c_ij alpha_j where c is the inverse Cartan matrix,
    # so that <omega_i, alpha_k^vee> = delta_ik inside the root span.
    from .linalg import mat_inverse

    inv = mat_inverse([list(map(Fraction, row)) for row in cartan])
    dim = len(roots[0])
    weights = []
    for i in range(len(roots)):
        w = [Fraction(0)] * dim
        for j, alpha in enumerate(roots):
            if inv[i][j]:
                for k in range(dim):
                    w[k] += inv[i][j] * alpha[k]
        weights.append(tuple(w))
    return tuple(weights)


class WeylElement:
    """Signed permutation acting on row vectors: (v . w)_j = signs[j] * v[perm[j]]."""

    __slots__ = ("perm", "signs", "_key", "_hash")

    def __init__(self, perm, signs):
        self.perm = perm
        self.signs = signs
        self._key = None
        self._hash = hash((perm, signs))

    @classmethod
    def identity(cls, dim):
        return cls(tuple(range(dim)), (1,) * dim)

    @property
    def dim(self):
        return len(self.perm)

    def is_identity(self):
        return self.signs == (1,) * len(self.perm) and self.perm == tuple(range(len(self.perm)))

    def __mul__(self, other):
        # right-action composition: v . (self*other) = (v . self) . other
        sp, ss = self.perm, self.signs
        op, os = other.perm, other.signs
        perm = tuple(sp[op[j]] for j in range(len(sp)))
        signs = tuple(os[j] * ss[op[j]] for j in range(len(sp)))
        return WeylElement(perm, signs)

    def inverse(self):
        n = len(self.perm)
        ip = [0] * n
        for a in range(n):
            ip[self.perm[a]] = a
        return WeylElement(tuple(ip), tuple(self.signs[ip[j]] for j in range(n)))

    def apply(self, v):
        """Image of the row vector v under this element."""
        return tuple(self.signs[j] * v[self.perm[j]] for j in range(len(self.perm)))

    @property
    def matrix(self):
        n = len(self.perm)
        return tuple(
            tuple(self.signs[c] if self.perm[c] == r else 0 for c in range(n))
            for r in range(n)
        )

    def sort_key(self):
        """Flattened row-major matrix; the group's total order is lex on this."""
        if self._key is None:
            n = len(self.perm)
            key = [0] * (n * n)
            for c in range(n):
                key[self.perm[c] * n + c] = self.signs[c]
            self._key = tuple(key)
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.perm == other.perm
            and self.signs == other.signs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "WeylElement(perm=%r, signs=%r)" % (self.perm, self.signs)


def simple_reflection(datum, i):
    """The i-th simple reflection (1-based), validated as a signed permutation."""
    if not 1 <= i <= datum.rank:
        raise IndexError("simple reflection index %r out of range 1..%d" % (i, datum.rank))
    alpha = datum.simple_roots[i - 1]
    norm = _dot(alpha, alpha)
    covec = tuple(2 * a / norm for a in alpha)
    n = datum.dim
    perm = [None] * n
    signs = [0] * n
    for c in range(n):
        nonzero = []
        for r in range(n):
            entry = (1 if r == c else 0) - covec[r] * alpha[c]
            if entry:
                nonzero.append((r, entry))
        if len(nonzero) != 1 or nonzero[0][1] not in (1, -1):
            raise UnsupportedType("reflection is not a signed permutation in this realization")
        perm[c], signs[c] = nonzero[0][0], int(nonzero[0][1])
    return WeylElement(tuple(perm), tuple(signs))


class WeylGroup:
    """Fully enumerated Weyl group with index lookups and a fixed total order."""

    def __init__(self, datum, elements, generators):
        self.datum = datum
        self.elements = elements
        self.generators = generators
        self.index = {w: i for i, w in enumerate(elements)}
        self.order = len(elements)
        self._rank_of = None
        self._sorted = None
        self._inv_idx = None
        self._subgroups = {}

    def idx(self, w):
        return self.index[w]

    def mul(self, i, j):
        return self.index[self.elements[i] * self.elements[j]]

    def inv(self, i):
        if self._inv_idx is None:
            self._inv_idx = [self.index[w.inverse()] for w in self.elements]
        return self._inv_idx[i]

    def sorted_indices(self):
        """Element indices listed in the fixed total order on the group."""
        if self._sorted is None:
            self._sorted = sorted(
                range(self.order), key=lambda k: self.elements[k].sort_key()
            )
        return self._sorted

    def rank_of(self, i):
        """Position of element i in the total order on the group."""
        if self._rank_of is None:
            self._rank_of = [0] * self.order
            for pos, k in enumerate(self.sorted_indices()):
                self._rank_of[k] = pos
        return self._rank_of[i]

    def subgroup(self, gens):
        key = frozenset(gens)
        if key not in self._subgroups:
            self._subgroups[key] = _enumerate_subgroup(self, key)
        return self._subgroups[key]


def enumerate_group(datum, max_order=100000):
    expected = group_order(datum.family, datum.rank)
    if expected > max_order:
        raise GroupTooLarge(
            "group of order %d exceeds the bound %d" % (expected, max_order)
        )
    gens = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
    identity = WeylElement.identity(datum.dim)
    elements = [identity]
    seen = {identity}
    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for g in gens:
            nxt = cur * g
            if nxt not in seen:
                seen.add(nxt)
                elements.append(nxt)
    if len(elements) != expected:
        raise GroupTooLarge(
            "enumeration produced %d elements, expected %d" % (len(elements), expected)
        )
    return WeylGroup(datum, elements, gens)


class SubgroupHandle:
    """Subgroup generated by a subset of simple reflections (or explicit elements).

    Elements are listed in breadth-first order from the identity; `words` holds
    for each element one word over the local generator list, for transporting
    matrix representations defined on generators.
    """

    def __init__(self, ambient, gen_labels, gen_elements, elements, words):
        self.ambient = ambient
        self.gen_labels = gen_labels
        self.gen_elements = gen_elements
        self.elements = elements
        self.words = words
        self.index = {w: i for i, w in enumerate(elements)}
        self.order = len(elements)
        self._classes = None

    def mul(self, a, b):
        return self.index[self.elements[a] * self.elements[b]]

    def inv(self, a):
        return self.index[self.elements[a].inverse()]

    def conjugacy_classes(self):
        if self._classes is None:
            self._classes = _conjugacy_classes(self)
        return self._classes


def _enumerate_subgroup(group, gen_labels):
    labels = tuple(sorted(gen_labels))
    gens = [simple_reflection(group.datum, i) for i in labels]
    identity = WeylElement.identity(group.datum.dim)
    elements = [identity]
    words = [()]
    seen = {identity: 0}
    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for gpos, g in enumerate(gens):
            nxt = cur * g
            if nxt not in seen:
                seen[nxt] = len(elements)
                words.append(words[head - 1] + (gpos,))
                elements.append(nxt)
    for w in elements:
        if w not in group.index:
            raise GroupTooLarge("subgroup element missing from ambient enumeration")
    return SubgroupHandle(group, labels, gens, elements, words)


class ConjClasses:
    """Conjugacy classes of a subgroup, as lists of local element indices."""

    def __init__(self, classes, reps, sizes, class_of):
        self.classes = classes
        self.reps = reps
        self.sizes = sizes
        self.class_of = class_of

    def __len__(self):
        return len(self.classes)


def _conjugacy_classes(handle):
    n = handle.order
    assigned = [-1] * n
    raw = []
    for seed in range(n):
        if assigned[seed] >= 0:
            continue
        members = set()
        x = handle.elements[seed]
        for g in handle.elements:
            members.add(handle.index[g.inverse() * x * g])
        cls = sorted(members)
        for m in cls:
            assigned[m] = len(raw)
        raw.append(cls)

    def class_key(cls):
        minkey = min(handle.elements[m].sort_key() for m in cls)
        return (0 if 0 in cls else 1, len(cls), minkey)

    ordered = sorted(raw, key=class_key)
    class_of = [0] * n
    for ci, cls in enumerate(ordered):
        for m in cls:
            class_of[m] = ci
    reps = [handle.elements[cls[0]] for cls in ordered]
    sizes = [len(cls) for cls in ordered]
    return ConjClasses(ordered, reps, sizes, class_of)


def conjugacy_classes(handle):
    """Conjugacy classes of a subgroup by brute-force conjugation, identity
    class first, then ascending (size, minimal member)."""
    return handle.conjugacy_classes()


def min_coset_rep(members, w):
    """Minimum of {h*w : h in members} under the fixed total order.

    `members` is any iterable of WeylElement forming a subgroup; the result is
    the canonical representative of that left coset.
    """
    best = None
    best_key = None
    for h in members:
        cand = h * w
        key = cand.sort_key()
        if best_key is None or key < best_key:
            best, best_key = cand, key
    return best


def element_order(w):
    n = len(w.perm)
    acc = w
    k = 1
    identity = WeylElement.identity(n)
    while acc != identity:
        acc = acc * w
        k += 1
    return k
