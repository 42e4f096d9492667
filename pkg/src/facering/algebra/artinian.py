"""Artinian reductions A = F[Δ] / (θ_1, ..., θ_d) as explicit graded vector spaces.

A degree-k monomial is a sorted tuple of vertex indices with repetition,
e.g. (0, 0, 2) is x_0^2 x_2.  Monomials whose support is not a face are zero
in the face ring and are never stored.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from ..arith import linalg
from ..arith.fields import DomainError
from ..errors import DegenerateCoordinates
from ..simplicial.complex import SimplicialComplex
from .coords import CoordMatrix


def support(m):
    return tuple(sorted(set(m)))


def is_squarefree(m):
    return len(set(m)) == len(m)


def face_monomials(c: SimplicialComplex, k: int):
    """All degree-k monomials whose support is a face of c, sorted."""
    if k == 0:
        return [()] if not c.is_void else []
    out = []
    for s in range(1, min(k, c.d) + 1):
        for face in c.faces(s):
            for extra in combinations_with_replacement(face, k - s):
                out.append(tuple(sorted(face + extra)))
    return sorted(out)


class ArtinianAlgebra:
    """Graded quotient of the face ring by a linear system of parameters.

    method="local" first rewrites every monomial into squarefree ones using
    the facet-local inverse of V (x_i m = -sum over w outside a facet G of
    (λ·V_w) x_w m) and then eliminates the linear relations among squarefree
    monomials.  method="full" eliminates the linear relations among all
    degree-k monomials at once and is kept as an independent oracle.
    """

    def __init__(self, complex: SimplicialComplex, coords: CoordMatrix, method: str = "local"):
        if complex.is_void or complex.dim < 0:
            raise DomainError("the Artinian reduction needs a complex with at least one vertex")
        if coords.n != complex.n:
            raise DomainError(f"coordinate matrix has {coords.n} columns for {complex.n} vertices")
        if coords.d != complex.d:
            raise DomainError(f"coordinate matrix has {coords.d} rows, complex has dimension {complex.dim}")
        if method not in ("local", "full"):
            raise DomainError(f"unknown build method {method!r}")
        self.complex = complex
        self.coords = coords
        self.dom = coords.domain
        self.d = complex.d
        self.n = complex.n
        self.method = method
        self._facets_by_size = sorted(complex.facets, key=lambda f: -len(f))
        self._lambda_cache = {}
        self._sqfree = {}
        self._degree = {}
        self._rewrite = {}

    # ------------------------------------------------------------ local reduction
    def _facet_over(self, s):
        ss = set(s)
        for g in self._facets_by_size:
            if ss.issubset(g):
                return g
        raise DomainError(f"{s} is not a face")

    def _lambda(self, g, i):
        key = (g, i)
        if key not in self._lambda_cache:
            dom = self.dom
            rows = [list(self.coords.columns[j]) for j in g]
            rhs = [dom.one if j == i else dom.zero for j in g]
            lam = linalg.solve(dom, rows, rhs)
            if lam is None:
                raise DegenerateCoordinates(f"columns of face {g} are dependent")
            self._lambda_cache[key] = lam
        return self._lambda_cache[key]

    def _coefficient(self, g, i, w):
        dom = self.dom
        lam = self._lambda(g, i)
        col = self.coords.columns[w]
        acc = dom.zero
        for a, b in zip(lam, col):
            if not dom.is_zero(a) and not dom.is_zero(b):
                acc = dom.add(acc, dom.mul(a, b))
        return acc

    def to_squarefree(self, m):
        """Express a monomial as a combination {face: coeff} of squarefree monomials
        of the same degree, modulo the ideal generated by the θ's."""
        m = tuple(sorted(m))
        if m in self._sqfree:
            return self._sqfree[m]
        dom = self.dom
        s = support(m)
        if s and not self.complex.is_face(s):
            out = {}
        elif len(s) == len(m):
            out = {m: dom.one}
        else:
            i = next(v for v in s if m.count(v) > 1)
            g = self._facet_over(s)
            pos = m.index(i)
            rest = m[:pos] + m[pos + 1:]
            out = {}
            sset = set(s)
            for w in range(self.n):
                if w in g:
                    continue
                if not self.complex.is_face(tuple(sorted(sset | {w}))):
                    continue
                c = self._coefficient(g, i, w)
                if dom.is_zero(c):
                    continue
                for f, a in self.to_squarefree(rest + (w,)).items():
                    out[f] = dom.sub(out.get(f, dom.zero), dom.mul(c, a))
            out = {f: a for f, a in out.items() if not dom.is_zero(a)}
        self._sqfree[m] = out
        return out

    # ------------------------------------------------------------ graded pieces
    def _relation_rows_local(self, k):
        dom = self.dom
        faces = self.complex.faces(k)
        pos = {f: j for j, f in enumerate(faces)}
        rows = []
        for mp in face_monomials(self.complex, k - 1):
            for r in range(self.d):
                row = [dom.zero] * len(faces)
                for v in range(self.n):
                    a = self.coords.columns[v][r]
                    if dom.is_zero(a):
                        continue
                    for f, b in self.to_squarefree(mp + (v,)).items():
                        row[pos[f]] = dom.add(row[pos[f]], dom.mul(a, b))
                if any(not dom.is_zero(x) for x in row):
                    rows.append(row)
        return faces, rows

    def _relation_rows_full(self, k):
        dom = self.dom
        monos = face_monomials(self.complex, k)
        pos = {m: j for j, m in enumerate(monos)}
        rows = []
        for mp in face_monomials(self.complex, k - 1):
            for r in range(self.d):
                row = [dom.zero] * len(monos)
                for v in range(self.n):
                    a = self.coords.columns[v][r]
                    m = tuple(sorted(mp + (v,)))
                    if dom.is_zero(a) or m not in pos:
                        continue
                    row[pos[m]] = dom.add(row[pos[m]], a)
                if any(not dom.is_zero(x) for x in row):
                    rows.append(row)
        return monos, rows

    def _build(self, k):
        """Basis monomials of A^k and the rewrite table for the columns."""
        if k in self._degree:
            return self._degree[k]
        dom = self.dom
        if k < 0 or k > self.d:
            data = {"basis": [], "columns": [], "table": {}, "relations": 0}
            self._degree[k] = data
            return data
        if k == 0:
            data = {"basis": [()], "columns": [()], "table": {(): [dom.one]}, "relations": 0}
            self._degree[k] = data
            return data
        if self.method == "local":
            cols, rows = self._relation_rows_local(k)
            order = range(len(cols))
        else:
            cols, rows = self._relation_rows_full(k)
            nonsq = [j for j, m in enumerate(cols) if not is_squarefree(m)]
            sq = [j for j, m in enumerate(cols) if is_squarefree(m)]
            order = nonsq + sq
        if rows:
            R, pivots = linalg.rref(dom, rows, len(cols), column_order=order)
        else:
            R, pivots = [], []
        pivot_of = {c: r for r, c in pivots}
        free = [j for j in range(len(cols)) if j not in pivot_of]
        basis = [cols[j] for j in free]
        table = {}
        for j, m in enumerate(cols):
            vec = [dom.zero] * len(free)
            if j in pivot_of:
                row = R[pivot_of[j]]
                for t, fj in enumerate(free):
                    if not dom.is_zero(row[fj]):
                        vec[t] = dom.neg(row[fj])
            else:
                vec[free.index(j)] = dom.one
            table[m] = vec
        data = {"basis": basis, "columns": cols, "table": table, "relations": len(pivots)}
        self._degree[k] = data
        return data

    def dim(self, k):
        return len(self._build(k)["basis"])

    def dims(self):
        return [self.dim(k) for k in range(self.d + 1)]

    def basis(self, k):
        return list(self._build(k)["basis"])

    def relation_rank(self, k):
        return self._build(k)["relations"]

    def squarefree_spans(self, k):
        """True when the chosen basis of A^k consists of squarefree monomials."""
        return all(is_squarefree(m) for m in self.basis(k))

    def zero(self, k):
        return [self.dom.zero] * self.dim(k)

    # ------------------------------------------------------------ arithmetic
    def rewrite(self, m):
        """Coordinates of the monomial m in the basis of A^{deg m}."""
        m = tuple(sorted(m))
        if m in self._rewrite:
            return self._rewrite[m]
        k = len(m)
        data = self._build(k)
        dom = self.dom
        if k > self.d:
            vec = []
        elif self.method == "full" or k == 0:
            vec = data["table"].get(m)
            if vec is None:
                vec = [dom.zero] * len(data["basis"])
        else:
            vec = [dom.zero] * len(data["basis"])
            for f, a in self.to_squarefree(m).items():
                for t, b in enumerate(data["table"][f]):
                    if not dom.is_zero(b):
                        vec[t] = dom.add(vec[t], dom.mul(a, b))
        self._rewrite[m] = vec
        return vec

    def element(self, poly, k=None):
        """Coordinates of sum coeff * monomial given as {monomial: coeff}."""
        dom = self.dom
        if k is None:
            k = len(next(iter(poly))) if poly else 0
        vec = self.zero(k)
        for m, a in poly.items():
            if len(m) != k:
                raise DomainError("inhomogeneous element")
            a = dom.from_int(a) if isinstance(a, int) else a
            for t, b in enumerate(self.rewrite(m)):
                if not dom.is_zero(b):
                    vec[t] = dom.add(vec[t], dom.mul(a, b))
        return vec

    def product(self, k1, a, k2, b):
        dom = self.dom
        out = self.zero(k1 + k2)
        if k1 + k2 > self.d:
            return out
        B1, B2 = self.basis(k1), self.basis(k2)
        for i, x in enumerate(a):
            if dom.is_zero(x):
                continue
            for j, y in enumerate(b):
                if dom.is_zero(y):
                    continue
                c = dom.mul(x, y)
                for t, z in enumerate(self.rewrite(B1[i] + B2[j])):
                    if not dom.is_zero(z):
                        out[t] = dom.add(out[t], dom.mul(c, z))
        return out

    def mul_vertex_matrix(self, k, v):
        """Matrix (rows = A^{k+1} coordinates) of multiplication by x_v on A^k."""
        cols = [self.rewrite(m + (v,)) if k + 1 <= self.d else [] for m in self.basis(k)]
        return [[col[i] for col in cols] for i in range(self.dim(k + 1))]

    def mul_linear_matrix(self, k, ell):
        """Multiplication by sum_v ell[v] x_v as a dim(k+1) x dim(k) matrix."""
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

    def socle_and_level(self):
        """Socle dimensions per degree and whether the socle sits in degree d only."""
        dom = self.dom
        socle = {}
        for k in range(self.d + 1):
            if self.dim(k) == 0:
                socle[k] = 0
                continue
            if k == self.d:
                socle[k] = self.dim(k)
                continue
            stacked = []
            for v in range(self.n):
                stacked.extend(self.mul_vertex_matrix(k, v))
            stacked = [r for r in stacked if any(not dom.is_zero(x) for x in r)]
            socle[k] = self.dim(k) - (linalg.rank(dom, stacked) if stacked else 0)
        level = all(socle[k] == 0 for k in range(self.d))
        return {"socle_dims": socle, "is_level": level}


def build_artinian(complex: SimplicialComplex, coords: CoordMatrix, method: str = "local") -> ArtinianAlgebra:
    return ArtinianAlgebra(complex, coords, method=method)
