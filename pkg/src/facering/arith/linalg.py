"""Exact linear algebra over the coefficient domains in `fields` and `poly`.

Over finite fields and jet rings this is ordinary Gauss-Jordan elimination.
Over rational function fields ranks, kernels and determinants go through
fraction-free (Bareiss) elimination on denominator-cleared polynomial rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import DomainError, UnluckySpecialization
from .poly import MultiPoly, RatFunc, RationalFunctionField


@dataclass(frozen=True)
class ExactMatrix:
    domain: object
    entries: tuple  # tuple of row tuples

    @classmethod
    def from_rows(cls, domain, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DomainError("ragged matrix")
        return cls(domain, rows) if ncols is None or rows else cls(domain, ())

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return [r[j] for r in self.entries]

    def transpose(self):
        return ExactMatrix(self.domain, tuple(zip(*self.entries)))

    def __matmul__(self, other):
        return ExactMatrix(self.domain, tuple(map(tuple, matmul(self.domain, self.entries, other.entries))))

    def apply(self, vec):
        return matvec(self.domain, self.entries, vec)


# ---------------------------------------------------------------- basics

def matvec(dom, rows, vec):
    out = []
    for r in rows:
        acc = dom.zero
        for a, b in zip(r, vec):
            if not dom.is_zero(a) and not dom.is_zero(b):
                acc = dom.add(acc, dom.mul(a, b))
        out.append(acc)
    return out


def vecmat(dom, vec, rows):
    ncols = len(rows[0]) if rows else 0
    out = [dom.zero] * ncols
    for a, r in zip(vec, rows):
        if dom.is_zero(a):
            continue
        for j, b in enumerate(r):
            if not dom.is_zero(b):
                out[j] = dom.add(out[j], dom.mul(a, b))
    return out


def matmul(dom, A, B):
    if not A:
        return []
    Bt = list(zip(*B)) if B else []
    return [[_dot(dom, r, c) for c in Bt] for r in A]


def _dot(dom, a, b):
    acc = dom.zero
    for x, y in zip(a, b):
        if not dom.is_zero(x) and not dom.is_zero(y):
            acc = dom.add(acc, dom.mul(x, y))
    return acc


def identity(dom, n):
    return [[dom.one if i == j else dom.zero for j in range(n)] for i in range(n)]


def zeros(dom, r, c):
    return [[dom.zero] * c for _ in range(r)]


# ---------------------------------------------------------------- elimination

def rref(dom, rows, ncols=None, column_order=None):
    """Reduced row echelon form.

    Returns (reduced_rows, pivots) where pivots is a list of (row, col) and
    reduced_rows has the nonzero rows first, pivot entries normalised to 1.
    `column_order` fixes which columns are tried as pivots first.
    """
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    order = list(column_order) if column_order is not None else list(range(ncols))
    complexity = getattr(dom, "complexity", None)
    pivots = []
    r = 0
    nrows = len(M)
    for c in order:
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            a = M[i][c]
            if dom.is_zero(a):
                continue
            if not dom.is_unit(a):
                raise UnluckySpecialization("non-unit pivot candidate in jet elimination")
            if complexity is None:
                best = i
                break
            score = complexity(a)
            if best is None or score < best[1]:
                best = (i, score)
        if best is None:
            continue
        bi = best if complexity is None else best[0]
        M[r], M[bi] = M[bi], M[r]
        piv = M[r]
        inv = dom.inv(piv[c])
        if not dom.eq(inv, dom.one):
            piv = [dom.mul(inv, x) if not dom.is_zero(x) else x for x in piv]
            M[r] = piv
        nz = [j for j in range(ncols) if not dom.is_zero(piv[j])]
        for i in range(nrows):
            if i == r:
                continue
            f = M[i][c]
            if dom.is_zero(f):
                continue
            row = M[i]
            for j in nz:
                row[j] = dom.sub(row[j], dom.mul(f, piv[j]))
        pivots.append((r, c))
        r += 1
    return M, pivots


def rank(dom, rows):
    if isinstance(dom, RationalFunctionField):
        return len(fraction_free_echelon(dom, rows)[1])
    return len(rref(dom, rows)[1])


def kernel(dom, rows, ncols=None):
    """Basis of the right kernel {x : rows @ x = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[dom.one if i == j else dom.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(dom, rows, ncols)
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [dom.zero] * ncols
        v[f] = dom.one
        for r, c in pivots:
            a = R[r][f]
            if not dom.is_zero(a):
                v[c] = dom.neg(a)
        basis.append(v)
    return basis


def left_kernel(dom, rows):
    if not rows:
        return []
    return kernel(dom, transpose(rows), len(rows))


def transpose(rows):
    return [list(c) for c in zip(*rows)] if rows else []


def solve(dom, rows, rhs):
    """One solution x of rows @ x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(dom, aug, ncols + 1, column_order=range(ncols))
    used = {r for r, _ in pivots}
    for i, row in enumerate(R):
        if i not in used and not dom.is_zero(row[ncols]):
            return None
    x = [dom.zero] * ncols
    for r, c in pivots:
        x[c] = R[r][ncols]
    return x


def independent_rows(dom, rows):
    """Indices of a maximal linearly independent subset of rows (greedy, in order)."""
    if not rows:
        return []
    _, pivots = rref(dom, transpose(rows))
    return [c for _, c in pivots]


def inverse(dom, rows):
    n = len(rows)
    aug = [list(r) + [dom.one if i == j else dom.zero for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(dom, aug, 2 * n, column_order=range(n))
    if len(pivots) < n or any(c >= n for _, c in pivots):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


def span_dim(dom, vectors):
    return len(rref(dom, vectors)[1]) if vectors else 0


# ---------------------------------------------------------------- fraction-free

def _clear_row(dom: RationalFunctionField, row):
    """Scale a RatFunc row to polynomials: multiply by the product of its
    distinct denominators."""
    dens = []
    for a in row:
        if not a.den.is_constant() and all(a.den != d for d in dens):
            dens.append(a.den)
    scale = dom.ring.one()
    for d in dens:
        scale = scale * d
    out = []
    for a in row:
        if a.is_zero():
            out.append(dom.ring.zero())
            continue
        q = (a.num * scale).divexact(a.den)
        if q is None:  # pragma: no cover - product of denominators is divisible
            raise ArithmeticError("denominator clearing failed")
        out.append(q)
    return out


def fraction_free_echelon(dom: RationalFunctionField, rows):
    """Bareiss row echelon form of a matrix over GF(p)(x).

    Returns (echelon polynomial rows, pivot list of (row, col)).  Every entry
    stays a polynomial; each elimination step divides exactly by the previous
    pivot.
    """
    M = [_clear_row(dom, r) for r in rows]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    prev = dom.ring.one()
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        cand = [i for i in range(r, nrows) if not M[i][c].is_zero()]
        if not cand:
            continue
        bi = min(cand, key=lambda i: M[i][c].nterms())
        M[r], M[bi] = M[bi], M[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            for j in range(c + 1, ncols):
                t = p * M[i][j] - a * M[r][j]
                if not prev.is_constant() or prev.constant_value() != 1:
                    q = t.divexact(prev)
                    if q is None:  # pragma: no cover - Bareiss division is exact
                        raise ArithmeticError("inexact Bareiss division")
                    t = q
                M[i][j] = t
            M[i][c] = dom.ring.zero()
        # rows without the pivot column still need the common scaling
        prev = p
        pivots.append((r, c))
        r += 1
    return M, pivots


def det_polynomial(polyrows) -> MultiPoly:
    """Bareiss determinant of a square matrix of MultiPoly entries."""
    n = len(polyrows)
    if n == 0:
        raise DomainError("empty matrix")
    ring = polyrows[0][0].ring
    M = [list(r) for r in polyrows]
    prev = ring.one()
    sign = 1
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return ring.zero()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        p = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = p * M[i][j] - M[i][k] * M[k][j]
                if not (prev.is_constant() and prev.constant_value() == 1):
                    t = t.divexact(prev)
                M[i][j] = t
        prev = p
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def det(dom, rows):
    """Exact determinant over any domain (Bareiss over symbolic entries)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return dom.one
    if isinstance(dom, RationalFunctionField):
        scales = []
        polyrows = []
        for r in rows:
            dens = []
            for a in r:
                if not a.den.is_constant() and all(a.den != d for d in dens):
                    dens.append(a.den)
            s = dom.ring.one()
            for d in dens:
                s = s * d
            scales.append(s)
            polyrows.append([(a.num * s).divexact(a.den) if not a.is_zero() else dom.ring.zero() for a in r])
        num = det_polynomial(polyrows)
        den = dom.ring.one()
        for s in scales:
            den = den * s
        return RatFunc(num, den)
    if n <= 3:
        return _small_det(dom, rows)
    M = [list(r) for r in rows]
    result = dom.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not dom.is_zero(M[i][k])), None)
        if piv is None:
            return dom.zero
        if not dom.is_unit(M[piv][k]):
            raise UnluckySpecialization("non-unit pivot in jet determinant")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            result = dom.neg(result)
        p = M[k][k]
        result = dom.mul(result, p)
        ip = dom.inv(p)
        for i in range(k + 1, n):
            f = M[i][k]
            if dom.is_zero(f):
                continue
            f = dom.mul(f, ip)
            for j in range(k + 1, n):
                M[i][j] = dom.sub(M[i][j], dom.mul(f, M[k][j]))
    return result


def _small_det(dom, m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return dom.sub(dom.mul(m[0][0], m[1][1]), dom.mul(m[0][1], m[1][0]))
    a, b, c = m[0]
    t1 = dom.sub(dom.mul(m[1][1], m[2][2]), dom.mul(m[1][2], m[2][1]))
    t2 = dom.sub(dom.mul(m[1][0], m[2][2]), dom.mul(m[1][2], m[2][0]))
    t3 = dom.sub(dom.mul(m[1][0], m[2][1]), dom.mul(m[1][1], m[2][0]))
    return dom.add(dom.sub(dom.mul(a, t1), dom.mul(b, t2)), dom.mul(c, t3))


def det_cofactor(dom, rows):
    """Laplace expansion along the first row; an independent oracle for small n."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = dom.zero
    for j in range(n):
        a = rows[0][j]
        if dom.is_zero(a):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = dom.mul(a, det_cofactor(dom, minor))
        total = dom.add(total, term) if j % 2 == 0 else dom.sub(total, term)
    return total


def rank_kernel(m: ExactMatrix):
    """(rank, right-kernel basis) of an ExactMatrix.

    Symbolic matrices: the rank comes from fraction-free elimination; kernel
    vectors are obtained by back substitution and scaled to polynomials.
    """
    dom = m.domain
    rows = [list(r) for r in m.entries]
    ncols = m.cols
    if not isinstance(dom, RationalFunctionField):
        basis = kernel(dom, rows, ncols)
        return ncols - len(basis), basis
    if not rows:
        return 0, kernel(dom, rows, ncols)
    E, pivots = fraction_free_echelon(dom, rows)
    r = len(pivots)
    pivot_cols = [c for _, c in pivots]
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free:
        x = [dom.zero] * ncols
        x[f] = dom.one
        for pr in range(r - 1, -1, -1):
            c = pivot_cols[pr]
            acc = dom.zero
            for j in range(c + 1, ncols):
                if not E[pr][j].is_zero() and not x[j].is_zero():
                    acc = acc + RatFunc(E[pr][j]) * x[j]
            x[c] = -(acc / RatFunc(E[pr][c]))
        # scale to a polynomial vector
        scale = dom.ring.one()
        for a in x:
            if not a.den.is_constant():
                scale = scale * a.den
        s = RatFunc(scale)
        basis.append([a * s for a in x])
    return r, basis
