"""Gorenstein quotients B = A / ann(deg) and monomial ideals inside them."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import linalg
from ..arith.fields import DomainError
from ..errors import FatalInconsistency
from ..simplicial.complex import SimplicialComplex
from ..simplicial.homology import Chain
from .artinian import ArtinianAlgebra, face_monomials, support
from .degree import DegreeFunctional, degree_functional


@dataclass
class _Piece:
    rows: list  # indices into the A^k basis spanning B^k
    proj: list  # dim A^k x dim B^k projection matrix


class GorensteinAlgebra:
    """Quotient of A by the annihilator of one or more degree functionals.

    B^k is realised as A^k modulo the left kernel of the pairing
    A^k x A^{d-k} -> F^m, a -> (deg_i(a*b))_{i,b}.  Elements of B are
    coordinate vectors in a basis made of A-basis monomials.
    """

    def __init__(self, algebra: ArtinianAlgebra, functionals):
        if not functionals:
            raise DomainError("need at least one degree functional")
        self.algebra = algebra
        self.functionals = list(functionals)
        self.dom = algebra.dom
        self.d = algebra.d
        self.n = algebra.n
        self._pairing = {}
        self._pieces = {}

    # ------------------------------------------------------------ structure
    def pairing_A(self, k):
        """Rows: A^k basis.  Columns: (functional, A^{d-k} basis) pairs."""
        if k in self._pairing:
            return self._pairing[k]
        A = self.algebra
        Bk, Bl = A.basis(k), A.basis(self.d - k)
        P = []
        for a in Bk:
            row = []
            for phi in self.functionals:
                for b in Bl:
                    row.append(phi.evaluate(A.rewrite(a + b)))
            P.append(row)
        self._pairing[k] = P
        return P

    def _piece(self, k):
        if k in self._pieces:
            return self._pieces[k]
        dom = self.dom
        if k < 0 or k > self.d:
            piece = _Piece([], [])
        else:
            P = self.pairing_A(k)
            if not P or not P[0]:
                piece = _Piece([], [[] for _ in P])
            else:
                rows = linalg.independent_rows(dom, P)
                sub = [P[i] for i in rows]
                _, piv = linalg.rref(dom, sub)
                cols = [c for _, c in piv]
                G = [[r[c] for c in cols] for r in sub]
                Ginv = linalg.inverse(dom, G) if G else []
                PJ = [[r[c] for c in cols] for r in P]
                proj = linalg.matmul(dom, PJ, Ginv) if rows else [[] for _ in P]
                piece = _Piece(rows, proj)
        self._pieces[k] = piece
        return piece

    def dim(self, k):
        return len(self._piece(k).rows)

    def dims(self):
        return [self.dim(k) for k in range(self.d + 1)]

    def basis(self, k):
        A = self.algebra
        return [A.basis(k)[i] for i in self._piece(k).rows]

    def zero(self, k):
        return [self.dom.zero] * self.dim(k)

    # ------------------------------------------------------------ maps A <-> B
    def project(self, k, a_vec):
        if self.dim(k) == 0:
            return []
        return linalg.vecmat(self.dom, a_vec, self._piece(k).proj)

    def lift(self, k, b_vec):
        out = self.algebra.zero(k)
        for i, x in zip(self._piece(k).rows, b_vec):
            out[i] = x
        return out

    def monomial(self, m):
        return self.project(len(m), self.algebra.rewrite(m))

    def element(self, poly, k=None):
        if k is None:
            k = len(next(iter(poly))) if poly else 0
        return self.project(k, self.algebra.element(poly, k))

    def product(self, k1, a, k2, b):
        if k1 + k2 > self.d:
            return []
        A = self.algebra
        return self.project(k1 + k2, A.product(k1, self.lift(k1, a), k2, self.lift(k2, b)))

    def degree(self, b_vec, which=0):
        """deg of an element of B^d under functional `which`."""
        return self.functionals[which].evaluate(self.lift(self.d, b_vec))

    def pair(self, k, a, b, which=0):
        """deg(a*b) for a in B^k, b in B^{d-k}, through the Gram matrix."""
        P = self.pairing_matrix(k, which)
        if not P or not b:
            return self.dom.zero
        return _dot(self.dom, a, linalg.matvec(self.dom, P, b))

    def pairing_matrix(self, k, which=0):
        """Gram matrix deg(b_i b'_j) on the bases of B^k and B^{d-k}."""
        P = self.pairing_A(k)
        nl = self.algebra.dim(self.d - k)
        off = which * nl
        cols = self._piece(self.d - k).rows
        return [[P[i][off + j] for j in cols] for i in self._piece(k).rows]

    def mul_vertex_matrix(self, k, v):
        cols = [self.project(k + 1, self.algebra.rewrite(m + (v,))) for m in self.basis(k)]
        return [[col[i] for col in cols] for i in range(self.dim(k + 1))]

    def mul_linear_matrix(self, k, ell):
        dom = self.dom
        M = [[dom.zero] * self.dim(k) for _ in range(self.dim(k + 1))]
        for v, c in enumerate(ell):
            if dom.is_zero(c):
                continue
            for i, row in enumerate(self.mul_vertex_matrix(k, v)):
                for j, x in enumerate(row):
                    if not dom.is_zero(x):
                        M[i][j] = dom.add(M[i][j], dom.mul(c, x))
        return M

    def power_map(self, k, ell, e):
        """Matrix of multiplication by ℓ^e from B^k to B^{k+e}."""
        dom = self.dom
        ncols = self.dim(k)
        M = linalg.identity(dom, ncols)
        for j in range(e):
            L = self.mul_linear_matrix(k + j, ell)
            M = [
                [_dot(dom, Lrow, [M[t][c] for t in range(len(M))]) for c in range(ncols)]
                for Lrow in L
            ]
        return M


def _dot(dom, a, b):
    acc = dom.zero
    for x, y in zip(a, b):
        if not dom.is_zero(x) and not dom.is_zero(y):
            acc = dom.add(acc, dom.mul(x, y))
    return acc


def gorensteinify(alg: ArtinianAlgebra, deg) -> GorensteinAlgebra:
    """B = A / ann(deg).  `deg` is a DegreeFunctional or the cycle itself."""
    if isinstance(deg, Chain):
        deg = degree_functional(alg, deg)
    g = GorensteinAlgebra(alg, [deg])
    top = g.dim(alg.d)
    if deg.is_zero():
        if top != 0:
            raise FatalInconsistency("zero degree map with nonzero top degree")
    elif top != 1:
        raise FatalInconsistency(f"dim B^d = {top}, expected 1")
    return g


def subspace_gorensteinify(alg: ArtinianAlgebra, cycles) -> GorensteinAlgebra:
    """B(M) = A / (ideal annihilated by every degree map of the cycles in M)."""
    fs = [c if isinstance(c, DegreeFunctional) else degree_functional(alg, c) for c in cycles]
    return GorensteinAlgebra(alg, fs)


@dataclass
class MonomialIdealBasis:
    """Basis of K^k = image in B^k of the monomials supported outside Γ."""

    algebra: GorensteinAlgebra
    gamma: SimplicialComplex | None
    vectors: dict = field(default_factory=dict)
    generators: dict = field(default_factory=dict)

    def dim(self, k):
        return len(self.vectors.get(k, []))

    def dims(self):
        return [self.dim(k) for k in range(self.algebra.d + 1)]

    def basis(self, k):
        return list(self.vectors.get(k, []))


def _gamma_faces(ambient: SimplicialComplex, gamma: SimplicialComplex | None):
    if gamma is None or gamma.is_void:
        return set()
    faces = set()
    for f in gamma.faces():
        labels = gamma.labels(f)
        if any(v not in ambient.index for v in labels):
            raise DomainError(f"Γ uses vertex outside the complex: {labels}")
        faces.add(ambient.face_of(labels))
    return faces


def monomial_ideal(g: GorensteinAlgebra, gamma: SimplicialComplex | None, degrees=None) -> MonomialIdealBasis:
    """K = ideal of B spanned by monomials whose support is not a face of Γ.

    gamma=None or a void complex gives K = B; the empty complex {∅} gives the
    maximal ideal.
    """
    A = g.algebra
    dom = g.dom
    gfaces = _gamma_faces(A.complex, gamma)
    if degrees is None:
        degrees = range(g.d + 1)
    out = MonomialIdealBasis(g, gamma)
    for k in degrees:
        vecs, gens = [], []
        if g.dim(k):
            cand = [m for m in face_monomials(A.complex, k) if support(m) not in gfaces]
            images = [g.monomial(m) for m in cand]
            keep = linalg.independent_rows(dom, images) if images else []
            vecs = [images[i] for i in keep]
            gens = [cand[i] for i in keep]
        out.vectors[k] = vecs
        out.generators[k] = gens
    return out
