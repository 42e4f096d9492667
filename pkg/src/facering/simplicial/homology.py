"""Chains, boundary maps and homology ranks over a field."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import linalg
from ..arith.fields import DomainError
from ..arith.linalg import ExactMatrix
from .complex import SimplicialComplex


@dataclass
class Chain:
    """Field chain on oriented faces of `complex`.

    Keys are sorted index tuples; the orientation is the one induced by the
    global vertex order.
    """

    complex: SimplicialComplex
    dimension: int
    coefficients: dict
    domain: object = field(repr=False, default=None)

    def __post_init__(self):
        dom = self.domain
        clean = {}
        for f, c in self.coefficients.items():
            f = tuple(sorted(f))
            if len(f) != self.dimension + 1:
                raise DomainError("chain face of the wrong dimension")
            if not self.complex.is_face(f):
                raise DomainError(f"{f} is not a face of the complex")
            if dom is None or not dom.is_zero(c):
                clean[f] = c
        self.coefficients = clean

    def coefficient(self, face):
        return self.coefficients.get(tuple(sorted(face)), self.domain.zero)

    def is_zero(self):
        return not self.coefficients

    def scaled(self, c):
        dom = self.domain
        return Chain(self.complex, self.dimension, {f: dom.mul(c, v) for f, v in self.coefficients.items()}, dom)

    def boundary(self):
        dom = self.domain
        out = {}
        for f, c in self.coefficients.items():
            for i in range(len(f)):
                g = f[:i] + f[i + 1:]
                term = c if i % 2 == 0 else dom.neg(c)
                out[g] = dom.add(out.get(g, dom.zero), term)
        if self.dimension == 0:
            return _empty_boundary(self, out)
        return Chain(self.complex, self.dimension - 1, out, dom)

    def to_labels(self):
        return {",".join(map(str, self.complex.labels(f))): self.domain.to_json(c) for f, c in sorted(self.coefficients.items())}


def _empty_boundary(chain, out):
    dom = chain.domain
    total = out.get((), dom.zero)
    return Chain(chain.complex, -1, {(): total} if not dom.is_zero(total) else {}, dom)


def boundary_matrix(c: SimplicialComplex, k: int, domain, reduced: bool = False) -> ExactMatrix:
    """Matrix of ∂_k : C_k -> C_{k-1} (k = face dimension) in sorted-face bases.

    With reduced=True, ∂_0 is the augmentation onto the empty face.
    """
    if k < 0 or k > c.dim:
        raise DomainError("k out of range")
    cols = c.faces(k + 1)
    if k == 0:
        if reduced:
            return ExactMatrix(domain, (tuple(domain.one for _ in cols),))
        return ExactMatrix(domain, ())
    rows = c.faces(k)
    pos = {f: i for i, f in enumerate(rows)}
    M = [[domain.zero] * len(cols) for _ in rows]
    minus = domain.neg(domain.one)
    for j, f in enumerate(cols):
        for i in range(len(f)):
            g = f[:i] + f[i + 1:]
            M[pos[g]][j] = domain.one if i % 2 == 0 else minus
    return ExactMatrix(domain, tuple(map(tuple, M)))


def _rank(m: ExactMatrix):
    if m.rows == 0 or m.cols == 0:
        return 0
    return linalg.rank(m.domain, [list(r) for r in m.entries])


def betti_numbers(c: SimplicialComplex, domain, reduced: bool = True):
    """Ranks of (reduced) homology H_0..H_dim over `domain`.

    The empty complex {∅} has reduced H_{-1} = 1; that value is returned
    under key -1 when reduced=True.
    """
    if c.is_void:
        return {}
    if c.dim == -1:
        return {-1: 1} if reduced else {}
    ranks = {k: _rank(boundary_matrix(c, k, domain, reduced=reduced)) for k in range(c.dim + 1)}
    out = {}
    if reduced:
        out[-1] = 0
    for k in range(c.dim + 1):
        nk = len(c.faces(k + 1))
        out[k] = nk - ranks[k] - ranks.get(k + 1, 0)
    return out


def cycle_space(c: SimplicialComplex, domain):
    """Basis of the top-dimensional cycles (kernel of ∂_{d-1}).

    In dimension 0 the boundary is the augmentation, so cycles are the
    reduced 0-cycles (coefficient sum zero), matching the degree map of a
    one-dimensional Artinian reduction.
    """
    top = c.faces(c.d)
    if c.dim < 0:
        return []
    m = boundary_matrix(c, c.dim, domain, reduced=True)
    basis = linalg.kernel(domain, [list(r) for r in m.entries], len(top))
    return [Chain(c, c.dim, dict(zip(top, v)), domain) for v in basis]


def _normalize_sign(chain: Chain):
    dom = chain.domain
    if not chain.coefficients:
        return chain
    first = min(chain.coefficients)
    return chain.scaled(dom.inv(chain.coefficients[first]))


def pseudomanifold_check(c: SimplicialComplex, domain):
    """Ridge-degree-2 test, orientability over the field, uniqueness of the class."""
    result = {"is_pseudomanifold": False, "orientable": False, "connected_fundamental": False, "fundamental_class": None}
    if c.is_void or c.dim < 0 or not c.is_pure():
        return result
    top = c.faces(c.d)
    degree = {}
    for f in top:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            degree[r] = degree.get(r, 0) + 1
    ridges = c.faces(c.d - 1)
    result["is_pseudomanifold"] = all(degree.get(r, 0) == 2 for r in ridges)
    basis = cycle_space(c, domain)
    result["connected_fundamental"] = len(basis) == 1
    support = set()
    for z in basis:
        support.update(z.coefficients)
    if support == set(top):
        # kernel vectors of a pseudomanifold have disjoint supports (one per
        # strongly connected component), so their sum has full support
        total = {}
        for z in basis:
            for f, v in z.coefficients.items():
                total[f] = domain.add(total.get(f, domain.zero), v)
        fc = Chain(c, c.dim, total, domain)
        if len(fc.coefficients) == len(top) and fc.boundary().is_zero():
            result["orientable"] = True
            result["fundamental_class"] = _normalize_sign(fc)
    return result


def fundamental_class(c: SimplicialComplex, domain) -> Chain:
    info = pseudomanifold_check(c, domain)
    if info["fundamental_class"] is None:
        basis = cycle_space(c, domain)
        if len(basis) == 1:
            return _normalize_sign(basis[0])
        raise DomainError("complex has no unique full-support top cycle over this field")
    return info["fundamental_class"]


def support_of_cycle(mu: Chain) -> SimplicialComplex:
    if mu.is_zero():
        raise DomainError("support of the zero chain")
    return mu.complex.subcomplex(list(mu.coefficients))


def chain_from_labels(c: SimplicialComplex, coefficients: dict, domain, dimension=None) -> Chain:
    """Chain from {label-tuple or 'a,b,c' string: int coefficient}."""
    coeffs = {}
    for key, v in coefficients.items():
        labels = key.split(",") if isinstance(key, str) else list(key)
        labels = [lab if lab in c.index else type(c.vertices[0])(lab) for lab in labels]
        face = c.face_of(labels)
        coeffs[face] = domain.from_int(int(v)) if isinstance(v, int) else v
    if dimension is None:
        dimension = len(next(iter(coeffs))) - 1 if coeffs else c.dim
    return Chain(c, dimension, coeffs, domain)
