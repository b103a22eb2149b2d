"""Weight polytope of a dominant weight: vertex orbit and face lattice.

Faces are modelled as vertex subsets.  Every nonempty face is the W-image of
one standard face (the orbit of the basepoint under a standard parabolic
subgroup attached to a cross-section entry), the empty set is the unique
bottom face, and the full vertex set is the unique top face.  The builder
verifies the structural laws this model relies on: orbit sizes, disjointness
of orbits, closure under intersection, the Euler relation, and compatibility
of the entry order with face inclusion.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import FaceNotInOrbit, LatticeInconsistent, NotAFacePair, ZeroWeight
from .linalg import affine_rank


class VertexSet:
    """Vertices of the orbit polytope, numbered 1..m in decreasing
    lexicographic order of their coordinate tuples."""

    def __init__(self, coords, basepoint):
        self.coords = coords
        self.basepoint = basepoint
        self.index = {c: i + 1 for i, c in enumerate(coords)}

    def __len__(self):
        return len(self.coords)

    def coord(self, vid):
        return self.coords[vid - 1]


def orbit_vertices(group, mu):
    """Full W-orbit of the weight mu, sorted into the fixed vertex order."""
    mu = tuple(Fraction(x) for x in mu)
    if all(x == 0 for x in mu):
        raise ZeroWeight("weight is zero; no orbit polytope")
    seen = {mu}
    frontier = [mu]
    while frontier:
        v = frontier.pop()
        for g in group.generators:
            img = g.apply(v)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    coords = tuple(sorted(seen, reverse=True))
    basepoint = coords.index(mu) + 1
    return VertexSet(coords, basepoint)


class Face:
    """A face as a frozen vertex set with its dimension and owning entry."""

    __slots__ = ("vertices", "dim", "entry", "fid")

    def __init__(self, vertices, dim, entry, fid):
        self.vertices = vertices
        self.dim = dim
        self.entry = entry
        self.fid = fid

    def sorted_vertices(self):
        return tuple(sorted(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "Face(%s, dim=%d)" % (sorted(self.vertices), self.dim)


class FaceLattice:
    def __init__(self, group, vertices, faces, by_vertices, orbits, vertex_perms):
        self.group = group
        self.vertices = vertices
        self.faces = faces
        self.by_vertices = by_vertices
        self.orbits = orbits
        self.vertex_perms = vertex_perms
        self.empty_face = by_vertices[frozenset()]
        self.full_face = by_vertices[frozenset(range(1, len(vertices) + 1))]
        self._stabs = {}

    def face(self, vs):
        key = frozenset(vs)
        if key not in self.by_vertices:
            raise FaceNotInOrbit("%s is not a face of the polytope" % (sorted(key),))
        return self.by_vertices[key]

    def act_set(self, widx, vs):
        vp = self.vertex_perms[widx]
        return frozenset(int(vp[v - 1]) + 1 for v in vs)

    def pointwise_stabilizer(self, face):
        """Indices of all group elements fixing the face vertexwise."""
        if face.fid not in self._stabs:
            if face.vertices:
                cols = np.array(sorted(v - 1 for v in face.vertices))
                mask = (self.vertex_perms[:, cols] == cols).all(axis=1)
                stab = np.nonzero(mask)[0].tolist()
            else:
                stab = list(range(self.group.order))
            self._stabs[face.fid] = stab
        return self._stabs[face.fid]

    @property
    def f_vector(self):
        counts = [0] * self.full_face.dim
        for f in self.faces:
            if 0 <= f.dim < self.full_face.dim:
                counts[f.dim] += 1
        return tuple(counts)


def _vertex_perms(group, vertices):
    m = len(vertices)
    perms = np.empty((group.order, m), dtype=np.int16)
    for wi, w in enumerate(group.elements):
        for v0 in range(m):
            perms[wi, v0] = vertices.index[w.apply(vertices.coords[v0])] - 1
    return perms


def standard_face(lattice, entry):
    """The standard face of a cross-section entry (basepoint orbit under W_lambda)."""
    if entry.is_zero:
        return lattice.empty_face
    return lattice.face(entry.standard_vertices)


def build_face_lattice(group, vertices, cross_section):
    """Assemble all faces from the W-orbits of the standard faces and verify
    the structural laws of the model."""
    vertex_perms = _vertex_perms(group, vertices)
    owner = {}
    standard = {}
    for entry in cross_section.entries:
        if entry.is_zero:
            continue
        base = frozenset(
            _subgroup_orbit(group, vertex_perms, entry.we, vertices.basepoint)
        )
        standard[entry.eid] = base
        entry.standard_vertices = base
        orbit = set()
        for wi in range(group.order):
            vp = vertex_perms[wi]
            img = frozenset(int(vp[v - 1]) + 1 for v in base)
            orbit.add(img)
        if len(orbit) != entry.d_e:
            raise LatticeInconsistent(
                "entry %s: orbit has %d faces, expected index %d"
                % (entry.eid, len(orbit), entry.d_e)
            )
        for f in orbit:
            if f in owner:
                raise LatticeInconsistent(
                    "face %s lies in two orbits (%s, %s)"
                    % (sorted(f), owner[f], entry.eid)
                )
            owner[f] = entry.eid
    zero_eid = cross_section.zero_entry.eid
    owner[frozenset()] = zero_eid

    ordered = sorted(owner, key=lambda f: (len(f), tuple(sorted(f))))
    faces = []
    by_vertices = {}
    for fid, vs in enumerate(ordered):
        dim = affine_rank([vertices.coord(v) for v in sorted(vs)])
        face = Face(vs, dim, owner[vs], fid)
        faces.append(face)
        by_vertices[vs] = face

    orbits = {}
    for face in faces:
        orbits.setdefault(face.entry, []).append(face)
    for eid in orbits:
        orbits[eid].sort(key=lambda f: f.sorted_vertices())

    lattice = FaceLattice(group, vertices, faces, by_vertices, orbits, vertex_perms)
    _verify_lattice(lattice, cross_section, standard)
    return lattice


def _subgroup_orbit(group, vertex_perms, handle, basepoint):
    orbit = {basepoint}
    frontier = [basepoint]
    gen_idx = [group.index[g] for g in handle.gen_elements]
    while frontier:
        v = frontier.pop()
        for gi in gen_idx:
            img = int(vertex_perms[gi][v - 1]) + 1
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    return orbit


def _verify_lattice(lattice, cross_section, standard):
    faces = lattice.faces
    by_vertices = lattice.by_vertices
    for f in faces:
        for g in faces:
            if f.vertices & g.vertices not in by_vertices:
                raise LatticeInconsistent(
                    "intersection of %s and %s is not a face"
                    % (sorted(f.vertices), sorted(g.vertices))
                )
    euler = sum((-1) ** f.dim for f in faces)
    if euler != 0:
        raise LatticeInconsistent("Euler relation failed: alternating sum %d" % euler)
    entries = [e for e in cross_section.entries if not e.is_zero]
    for e in entries:
        for f in entries:
            if cross_section.leq(e.eid, f.eid) != (standard[e.eid] <= standard[f.eid]):
                raise LatticeInconsistent(
                    "entry order disagrees with standard-face inclusion at (%s, %s)"
                    % (e.eid, f.eid)
                )


def face_action(lattice, w, face):
    """Right action of a group element on a face; returns the image face."""
    widx = w if isinstance(w, (int, np.integer)) else lattice.group.index[w]
    img = lattice.act_set(widx, face.vertices)
    return lattice.by_vertices[img]


def mobius(face_j, face_k):
    """Moebius function of the face lattice on a comparable pair J <= K."""
    if not face_j.vertices <= face_k.vertices:
        raise NotAFacePair(
            "%s is not contained in %s" % (sorted(face_j.vertices), sorted(face_k.vertices))
        )
    return (-1) ** (face_k.dim - face_j.dim)


def subfaces(lattice, face):
    """All faces contained in the given face, bottom first."""
    return [f for f in lattice.faces if f.vertices <= face.vertices]
