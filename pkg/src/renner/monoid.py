"""The Renner monoid: elements, products, enumeration, transporter maps.

An element is a canonical pair (domain face, group element), where the group
element is the minimum of its coset modulo the pointwise stabilizer of the
domain; the zero element has the empty face as domain.  Elements act on the
polytope vertices as partial injections, domain face to range face, and that
partial-map picture drives the fast multiplication table.
"""

from __future__ import annotations

import random
import re
import warnings

import numpy as np

from . import kernels
from .cross_section import build_cross_section, projection_components
from .errors import (
    BadElement,
    ClosureViolation,
    FaceNotInOrbit,
    GroupTooLarge,
    LatticeInconsistent,
    NotProjective,
    WrongClass,
)
from .polytope import build_face_lattice, face_action, orbit_vertices
from .weyl import build_root_datum, enumerate_group, min_coset_rep


class RennerElement:
    __slots__ = ("ctx", "domain", "weyl", "rng", "_vmap", "_hash")

    def __init__(self, ctx, domain, weyl, rng):
        self.ctx = ctx
        self.domain = domain
        self.weyl = weyl
        self.rng = rng
        self._vmap = None
        self._hash = hash((domain.vertices, weyl))

    @property
    def is_zero(self):
        return self.weyl is None

    def vertex_map(self):
        """Tuple of image vertex ids (1-based), 0 where undefined."""
        if self._vmap is None:
            m = len(self.ctx.vertices)
            vm = [0] * m
            if self.weyl is not None:
                vp = self.ctx.lattice.vertex_perms[self.ctx.group.index[self.weyl]]
                for v in self.domain.vertices:
                    vm[v - 1] = int(vp[v - 1]) + 1
            self._vmap = tuple(vm)
        return self._vmap

    def __mul__(self, other):
        return multiply(self, other)

    def inv(self):
        return inverse(self)

    def __eq__(self, other):
        return (
            isinstance(other, RennerElement)
            and self.domain.vertices == other.domain.vertices
            and self.weyl == other.weyl
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return format_element(self)


class MonoidContext:
    """Everything needed to work inside one monoid: datum, group, cross-section
    lattice, polytope and caches for class-level data."""

    def __init__(self, datum, group, cs, vertices, lattice):
        self.datum = datum
        self.group = group
        self.cs = cs
        self.vertices = vertices
        self.lattice = lattice
        self.zero = RennerElement(self, lattice.empty_face, None, lattice.empty_face)
        self._stab_elements = {}
        self._transporters = {}
        self._class_cache = {}
        self.monoid = None

    @property
    def J(self):
        return self.cs.J

    def stab_elements(self, face):
        """Pointwise stabilizer of a face, as group elements."""
        if face.fid not in self._stab_elements:
            idxs = self.lattice.pointwise_stabilizer(face)
            self._stab_elements[face.fid] = [self.group.elements[i] for i in idxs]
        return self._stab_elements[face.fid]

    def entry_of(self, sigma):
        return self.cs.by_eid[sigma.domain.entry]

    def idempotent(self, face):
        if not face.vertices:
            return self.zero
        from .weyl import WeylElement

        return make_element(self, face, WeylElement.identity(self.datum.dim))

    @property
    def unit(self):
        return self.idempotent(self.lattice.full_face)

    def standard_face(self, entry):
        from .polytope import standard_face

        return standard_face(self.lattice, entry)


def build_context(family, rank, J, max_order=100000):
    datum = build_root_datum(family, rank)
    group = enumerate_group(datum, max_order=max_order)
    cs = build_cross_section(datum, J, group)
    vertices = orbit_vertices(group, cs.mu)
    wj = group.subgroup(cs.J)
    if len(vertices) * wj.order != group.order:
        raise LatticeInconsistent(
            "orbit size %d disagrees with the stabilizer index %d"
            % (len(vertices), group.order // wj.order)
        )
    lattice = build_face_lattice(group, vertices, cs)
    return MonoidContext(datum, group, cs, vertices, lattice)


def make_element(ctx, face, w):
    """Canonical element with the given domain face and group part."""
    if not hasattr(face, "vertices"):
        face = ctx.lattice.face(frozenset(face))
    if not face.vertices:
        return ctx.zero
    canon = min_coset_rep(ctx.stab_elements(face), w)
    rng = face_action(ctx.lattice, w, face)
    return RennerElement(ctx, face, canon, rng)


def multiply(a, b):
    ctx = a.ctx
    if a.is_zero or b.is_zero:
        return ctx.zero
    bdom = b.domain.vertices
    avm = a.vertex_map()
    dom = frozenset(v for v in a.domain.vertices if avm[v - 1] in bdom)
    if not dom:
        return ctx.zero
    return make_element(ctx, ctx.lattice.face(dom), a.weyl * b.weyl)


def inverse(a):
    if a.is_zero:
        return a
    return make_element(a.ctx, a.rng, a.weyl.inverse())


def transporter(ctx, entry, face):
    """(mu_K, mu_K inverse): the canonical unit translating the standard face
    L of the entry onto the face K; identity when K is L itself."""
    cache = ctx._transporters.setdefault(entry.eid, {})
    if face.fid in cache:
        return cache[face.fid]
    if face.entry != entry.eid:
        raise FaceNotInOrbit(
            "face %s is not in the orbit of entry %d" % (sorted(face.vertices), entry.eid)
        )
    L = ctx.standard_face(entry)
    from .weyl import WeylElement

    if face.fid == L.fid:
        w = WeylElement.identity(ctx.datum.dim)
    else:
        w = None
        target = face.vertices
        for widx in ctx.group.sorted_indices():
            if ctx.lattice.act_set(widx, L.vertices) == target:
                w = ctx.group.elements[widx]
                break
        if w is None:
            raise FaceNotInOrbit(
                "no unit carries the standard face onto %s" % sorted(face.vertices)
            )
    mu = make_element(ctx, L, w)
    mu_inv = make_element(ctx, face, w.inverse())
    cache[face.fid] = (mu, mu_inv)
    return cache[face.fid]


def p_projection(ctx, entry, sigma):
    """Projection of a class element onto the standard face: mu_I sigma mu_J^-."""
    if sigma.is_zero or sigma.domain.entry != entry.eid:
        raise WrongClass("element does not lie in the class of entry %d" % entry.eid)
    mu_i, _ = transporter(ctx, entry, sigma.domain)
    _, mu_j_inv = transporter(ctx, entry, sigma.rng)
    return multiply(multiply(mu_i, sigma), mu_j_inv)


def group_element_of(ctx, entry, pi):
    """The W*(e) element restricting to the partial map pi on the standard face."""
    L = ctx.standard_face(entry)
    if pi.is_zero or pi.domain.fid != L.fid or pi.rng.fid != L.fid:
        raise NotProjective("element is not a self-map of the standard face")
    try:
        u, _ = projection_components(entry, pi.weyl)
    except Exception as exc:
        raise NotProjective(str(exc)) from exc
    uvm = make_element(ctx, L, u).vertex_map()
    if uvm != pi.vertex_map():
        raise NotProjective("no factor-group element restricts to the given map")
    return u


class ClassData:
    """Per-entry layout of one two-sided class: faces of the orbit, the sorted
    factor group with its multiplication table, transporters, and the (row,
    group element, column) coordinates of every class element."""

    def __init__(self, entry, faces, wstar_elems, wtab, elements, row, col, pel):
        self.entry = entry
        self.faces = faces
        self.face_pos = {f.fid: i for i, f in enumerate(faces)}
        self.wstar_elems = wstar_elems
        self.wstar_pos = {w: i for i, w in enumerate(wstar_elems)}
        self.wtab = wtab
        self.elements = elements
        self.row = row
        self.col = col
        self.pel = pel
        self.start = None


def class_elements(ctx, entry):
    """All elements of the two-sided class of the entry, in (row, group
    element, column) order, together with the class layout."""
    if entry.is_zero:
        raise WrongClass("the zero class is the singleton {zero}")
    if entry.eid in ctx._class_cache:
        return ctx._class_cache[entry.eid]
    faces = ctx.lattice.orbits[entry.eid]
    L = ctx.standard_face(entry)
    wstar = sorted(entry.wstar.elements, key=lambda w: w.sort_key())
    k = len(wstar)
    wpos = {w: i for i, w in enumerate(wstar)}
    wtab = np.empty((k, k), dtype=np.int16)
    for i, u in enumerate(wstar):
        for j, v in enumerate(wstar):
            wtab[i, j] = wpos[u * v]
    trans = [transporter(ctx, entry, f) for f in faces]
    d = len(faces)
    elements = []
    row = np.empty(d * k * d, dtype=np.int16)
    col = np.empty(d * k * d, dtype=np.int16)
    pel = np.empty(d * k * d, dtype=np.int16)
    pos = 0
    for i, fi in enumerate(faces):
        w_i_inv = trans[i][0].weyl.inverse()
        for p, u in enumerate(wstar):
            left = w_i_inv * u
            for j, fj in enumerate(faces):
                sigma = make_element(ctx, fi, left * trans[j][0].weyl)
                elements.append(sigma)
                row[pos], pel[pos], col[pos] = i, p, j
                pos += 1
    if len(set(elements)) != entry.class_size:
        raise LatticeInconsistent(
            "class of entry %d has %d distinct elements, expected %d"
            % (entry.eid, len(set(elements)), entry.class_size)
        )
    data = ClassData(entry, faces, wstar, wtab, elements, row, col, pel)
    ctx._class_cache[entry.eid] = data
    return data


class RennerMonoid:
    def __init__(self, ctx, elements, class_data, table, faithful):
        self.ctx = ctx
        self.elements = elements
        self.index = {s: i for i, s in enumerate(elements)}
        self.class_data = class_data
        self.table = table
        self.faithful = faithful
        self.order = len(elements)

    def idx(self, sigma):
        return self.index[sigma]

    def mul_idx(self, i, j):
        if self.table is not None:
            return int(self.table[i, j])
        return self.index[multiply(self.elements[i], self.elements[j])]

    def class_range(self, eid):
        if eid == self.ctx.cs.zero_entry.eid:
            return (0, 1)
        data = self.class_data[eid]
        return (data.start, data.start + len(data.elements))


def enumerate_monoid(ctx, max_monoid=100000, table_bound=2000):
    """Enumerate the full monoid, assign the fixed element order, build the
    multiplication table, and verify closure and faithfulness."""
    if ctx.monoid is not None:
        return ctx.monoid
    total = 1 + sum(e.class_size for e in ctx.cs.nonzero_entries())
    if total > max_monoid:
        raise GroupTooLarge("monoid of order %d exceeds the bound %d" % (total, max_monoid))
    elements = [ctx.zero]
    class_data = {}
    for entry in ctx.cs.nonzero_entries():
        data = class_elements(ctx, entry)
        data.start = len(elements)
        elements.extend(data.elements)
        class_data[entry.eid] = data
    if len(set(elements)) != total:
        raise LatticeInconsistent("two-sided classes overlap")

    m = len(ctx.vertices)
    maps = np.empty((total, m), dtype=np.int8)
    for i, s in enumerate(elements):
        maps[i] = np.array(s.vertex_map(), dtype=np.int8) - 1
    vmap_index = {}
    faithful = True
    for i in range(total):
        key = maps[i].tobytes()
        if key in vmap_index:
            faithful = False
        else:
            vmap_index[key] = i
    if not faithful:
        warnings.warn(
            "vertex action is not faithful; falling back to structural products",
            RuntimeWarning,
        )

    table = None
    if total <= table_bound:
        if faithful:
            try:
                table = kernels.compose_table(maps, m)
            except LookupError as exc:
                raise ClosureViolation(
                    "composite map missing from the enumeration at pair %s" % (exc.args[0],)
                ) from exc
        else:
            table = np.empty((total, total), dtype=np.int32)
            index = {s: i for i, s in enumerate(elements)}
            for i in range(total):
                for j in range(total):
                    prod = multiply(elements[i], elements[j])
                    if prod not in index:
                        raise ClosureViolation("product left the enumerated set")
                    table[i, j] = index[prod]

    monoid = RennerMonoid(ctx, elements, class_data, table, faithful)
    if table is not None:
        _spot_check_table(monoid)
    ctx.monoid = monoid
    return monoid


def _spot_check_table(monoid):
    """Compare the vertex-composition table against structural products, on all
    pairs for small monoids and on a fixed random sample otherwise."""
    n = monoid.order
    if n <= 120:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        rng = random.Random(7001)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(300)]
    for i, j in pairs:
        direct = multiply(monoid.elements[i], monoid.elements[j])
        if monoid.elements[int(monoid.table[i, j])] != direct:
            raise ClosureViolation(
                "table disagrees with structural product at (%d, %d)" % (i, j)
            )


_ELEMENT_RE = re.compile(r"^face=\[([0-9,\s]*)\]\s*;\s*images=\[([0-9,\s]*)\]$")


def format_element(sigma):
    if sigma.is_zero:
        return "zero"
    dom = sorted(sigma.domain.vertices)
    vm = sigma.vertex_map()
    imgs = [vm[v - 1] for v in dom]
    return "face=[%s];images=[%s]" % (
        ",".join(map(str, dom)),
        ",".join(map(str, imgs)),
    )


def parse_element(ctx, text):
    """Parse the element literal syntax: `zero` or `face=[..];images=[..]`."""
    s = text.strip()
    if s == "zero":
        return ctx.zero
    match = _ELEMENT_RE.match(s)
    if not match:
        raise BadElement("cannot parse element literal %r" % text)

    def ints(part):
        part = part.strip()
        if not part:
            return []
        try:
            return [int(x) for x in part.split(",")]
        except ValueError as exc:
            raise BadElement("bad integer list in %r" % text) from exc

    dom = ints(match.group(1))
    imgs = ints(match.group(2))
    if len(dom) != len(imgs):
        raise BadElement("face and image lists have different lengths")
    if len(set(dom)) != len(dom) or len(set(imgs)) != len(imgs):
        raise BadElement("vertices repeat in the face or image list")
    m = len(ctx.vertices)
    for v in dom + imgs:
        if not 1 <= v <= m:
            raise BadElement("vertex id %d out of range 1..%d" % (v, m))
    if not dom:
        return ctx.zero
    try:
        face = ctx.lattice.face(frozenset(dom))
    except FaceNotInOrbit as exc:
        raise BadElement(str(exc)) from exc
    want = {v: w for v, w in zip(dom, imgs)}
    cols = np.array([v - 1 for v in dom])
    targets = np.array([want[v] - 1 for v in dom])
    hits = np.nonzero((ctx.lattice.vertex_perms[:, cols] == targets).all(axis=1))[0]
    if len(hits) == 0:
        raise BadElement("no unit-group element induces the requested map")
    return make_element(ctx, face, ctx.group.elements[int(hits[0])])
