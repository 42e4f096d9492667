"""Finite simplicial complexes with a fixed global vertex order.

Faces are stored as sorted tuples of vertex indices; the index order is the
global vertex order and fixes every orientation sign in the package.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import combinations

from ..arith.fields import DomainError


class SimplicialComplex:
    """A complex given by its facets.

    `facets=[]` is the void complex (no faces at all); `facets=[()]` is the
    empty complex {∅}.
    """

    def __init__(self, facets, vertices=None):
        facet_sets = [tuple(f) for f in facets]
        seen = []
        for f in facet_sets:
            for v in f:
                if v not in seen:
                    seen.append(v)
        if vertices is None:
            vertices = seen
        else:
            vertices = list(vertices)
            if len(set(vertices)) != len(vertices):
                raise DomainError("duplicate vertex labels")
            missing = [v for v in seen if v not in vertices]
            if missing:
                raise DomainError(f"facets use unknown vertices {missing}")
            unused = [v for v in vertices if v not in seen]
            if unused:
                raise DomainError(f"vertices {unused} lie in no facet")
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        idx = set()
        for f in facet_sets:
            t = tuple(sorted(self.index[v] for v in f))
            if len(set(t)) != len(t):
                raise DomainError(f"facet {f} repeats a vertex")
            idx.add(t)
        maximal = [f for f in idx if not any(set(f) < set(g) for g in idx)]
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), f)))
        self._faces = None

    # ------------------------------------------------------------ basics
    @property
    def n(self):
        return len(self.vertices)

    @property
    def is_void(self):
        return not self.facets

    @property
    def dim(self):
        return max((len(f) for f in self.facets), default=-1) - 1 if self.facets else -2

    @property
    def d(self):
        """Cardinality of the largest faces (dim + 1)."""
        return self.dim + 1

    def _all_faces(self):
        if self._faces is None:
            faces = set()
            for f in self.facets:
                for k in range(len(f) + 1):
                    faces.update(combinations(f, k))
            self._faces = faces
        return self._faces

    def faces(self, size=None):
        fs = self._all_faces()
        if size is None:
            return sorted(fs, key=lambda f: (len(f), f))
        return sorted(f for f in fs if len(f) == size)

    def is_face(self, face) -> bool:
        return tuple(sorted(face)) in self._all_faces()

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def f_vector(self):
        return [len(self.faces(k + 1)) for k in range(self.dim + 1)]

    def top_faces(self):
        return [f for f in self.facets if len(f) == self.d]

    def face_of(self, labels):
        try:
            return tuple(sorted(self.index[v] for v in labels))
        except KeyError as e:
            raise DomainError(f"unknown vertex {e.args[0]!r}") from None

    def labels(self, face):
        return [self.vertices[i] for i in face]

    def facet_labels(self):
        return [self.labels(f) for f in self.facets]

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(json.dumps(self.canonical(), default=str))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, dim={self.dim}, facets={len(self.facets)})"

    def canonical(self):
        return sorted(sorted(map(str, self.labels(f))) for f in self.facets)

    def fingerprint(self) -> str:
        payload = json.dumps({"vertices": [str(v) for v in self.vertices], "facets": self.canonical()})
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    # ------------------------------------------------------------ sub-objects
    def subcomplex(self, faces_idx):
        """Complex generated by the given index faces, keeping the global order."""
        faces_idx = [tuple(sorted(f)) for f in faces_idx]
        used = sorted({v for f in faces_idx for v in f})
        return SimplicialComplex(
            [self.labels(f) for f in faces_idx], vertices=[self.vertices[i] for i in used]
        )

    def contains(self, other: "SimplicialComplex") -> bool:
        for f in other.facets:
            labels = other.labels(f)
            if any(v not in self.index for v in labels):
                return False
            if not self.is_face(self.face_of(labels)):
                return False
        return True

    def deletion(self, removed):
        """Induced subcomplex on the remaining vertices."""
        removed = {self.index[v] if v in self.index else v for v in removed}
        keep = set()
        for f in self._all_faces():
            if not removed.intersection(f):
                keep.add(f)
        maximal = [f for f in keep if not any(set(f) < set(g) for g in keep)]
        return self.subcomplex(maximal)

    def reindexed_faces(self, other: "SimplicialComplex"):
        """Faces of `other` (a subcomplex) expressed in this complex's indices."""
        return {self.face_of(other.labels(f)) for f in other._all_faces()}


@dataclass(frozen=True)
class RelativeComplex:
    ambient: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if not self.ambient.contains(self.sub):
            raise DomainError("sub is not a subcomplex of ambient")


def _require_face(c: SimplicialComplex, face):
    t = c.face_of(face)
    if not c.is_face(t):
        raise DomainError(f"{list(face)} is not a face")
    return t


def _star_faces(c: SimplicialComplex, t):
    ts = set(t)
    return [f for f in c._all_faces() if tuple(sorted(ts.union(f))) in c._all_faces()]


def _link_faces(c: SimplicialComplex, t):
    ts = set(t)
    return [
        f for f in c._all_faces() if not ts.intersection(f) and tuple(sorted(ts.union(f))) in c._all_faces()
    ]


def _from_faces(c: SimplicialComplex, faces):
    fs = set(faces)
    if not fs:
        return SimplicialComplex([])
    maximal = [f for f in fs if not any(set(f) < set(g) for g in fs)]
    return c.subcomplex(maximal)


def star(c, face):
    """Closed star: faces whose union with `face` is a face."""
    if isinstance(c, RelativeComplex):
        amb = star(c.ambient, face)
        try:
            sub_t = c.sub.face_of(face)
            sub = star(c.sub, face) if c.sub.is_face(sub_t) else SimplicialComplex([])
        except DomainError:
            sub = SimplicialComplex([])
        return RelativeComplex(amb, sub)
    t = _require_face(c, face)
    return _from_faces(c, _star_faces(c, t))


def link(c, face):
    """Faces disjoint from `face` whose disjoint union with it is a face."""
    if isinstance(c, RelativeComplex):
        amb = link(c.ambient, face)
        try:
            sub_t = c.sub.face_of(face)
            sub = link(c.sub, face) if c.sub.is_face(sub_t) else SimplicialComplex([])
        except DomainError:
            sub = SimplicialComplex([])
        return RelativeComplex(amb, sub)
    t = _require_face(c, face)
    return _from_faces(c, _link_faces(c, t))


def star_link(c, face, which: str = "link"):
    if which == "star":
        return star(c, face)
    if which == "link":
        return link(c, face)
    raise DomainError("which must be 'star' or 'link'")


def _fresh_label(taken, base):
    label = base
    i = 1
    while label in taken:
        label = f"{base}{i}"
        i += 1
    return label


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Free join; labels must be disjoint."""
    if set(a.vertices) & set(b.vertices):
        raise DomainError("join needs disjoint vertex labels")
    facets = [a.labels(f) + b.labels(g) for f in a.facets for g in b.facets]
    return SimplicialComplex(facets, vertices=list(a.vertices) + list(b.vertices))


def suspension(c: SimplicialComplex, north="n", south="s"):
    """Join with two points.  Colliding labels get a numeric suffix; returns
    (complex, north_label, south_label)."""
    taken = set(map(str, c.vertices)) | set(c.vertices)
    north = _fresh_label(taken, north)
    south = _fresh_label(taken | {north}, south)
    two = SimplicialComplex([[north], [south]], vertices=[north, south])
    return join(c, two), north, south


def cone(c: SimplicialComplex, apex="a"):
    apex = _fresh_label(set(c.vertices), apex)
    return join(c, SimplicialComplex([[apex]])), apex


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if set(a.vertices) & set(b.vertices):
        raise DomainError("disjoint union needs disjoint vertex labels")
    return SimplicialComplex(a.facet_labels() + b.facet_labels(), vertices=list(a.vertices) + list(b.vertices))


# ------------------------------------------------------------ standard examples

def simplex_boundary(d: int, labels=None) -> SimplicialComplex:
    """∂Δ^d: boundary of the d-simplex, d+1 vertices, facets of cardinality d."""
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(d + 1)]
    return SimplicialComplex([list(f) for f in combinations(labels, d)], vertices=labels)


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope (2d vertices ±e_i)."""
    pairs = [(f"{i + 1}+", f"{i + 1}-") for i in range(d)]
    facets = []
    for mask in range(1 << d):
        facets.append([pairs[i][(mask >> i) & 1] for i in range(d)])
    return SimplicialComplex(facets, vertices=[v for p in pairs for v in p])


def polygon(m: int, labels=None) -> SimplicialComplex:
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(m)]
    return SimplicialComplex([[labels[i], labels[(i + 1) % m]] for i in range(m)], vertices=labels)


def rp2_six() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    facets = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ]
    return SimplicialComplex([[str(v) for v in f] for f in facets], vertices=[str(i) for i in range(1, 7)])


def path_graph(m: int) -> SimplicialComplex:
    """Path with m vertices."""
    labels = [str(i + 1) for i in range(m)]
    return SimplicialComplex([[labels[i], labels[i + 1]] for i in range(m - 1)], vertices=labels)


def bipyramid(m: int) -> SimplicialComplex:
    base = polygon(m)
    return suspension(base)[0]
