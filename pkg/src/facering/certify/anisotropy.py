"""Anisotropy in characteristic 2: no nonzero u in B^k with u^2 = 0
(below the middle degree) or deg(u^2) = 0 (at the middle degree)."""

from __future__ import annotations

import random

from ..algebra.gorenstein import GorensteinAlgebra
from ..arith import linalg
from ..arith.fields import DomainError
from ..arith.poly import MultiPoly, RatFunc, RationalFunctionField
from ..errors import ModeError
from . import bounds
from .certificate import FAIL, PASS, Certificate, algebra_fingerprint, timed


def squaring_matrix(g: GorensteinAlgebra, k: int):
    """Columns: B^{2k}-coordinates of m_i^2 for the B^k basis monomials m_i."""
    cols = [g.monomial(m + m) for m in g.basis(k)]
    return [[c[i] for c in cols] for i in range(g.dim(2 * k))]


def square_root_expansion(p: MultiPoly):
    """Write p = sum_s Q_s^2 x^s over GF(2), s a 0/1 exponent pattern.

    Returns {s: Q_s} with Q_s in the same polynomial ring (Frobenius is the
    identity on GF(2) coefficients).
    """
    out = {}
    for e, c in p.terms.items():
        s = tuple(x & 1 for x in e)
        half = tuple(x >> 1 for x in e)
        out.setdefault(s, {})[half] = c
    return {s: MultiPoly(p.ring, terms) for s, terms in out.items()}


def middle_anisotropy_matrix(values):
    """Rows Q_i of the square-subfield expansion of each N_i * D_i, where the
    i-th value is N_i / D_i.

    sum_i c_i^2 N_i/D_i = 0 has a nonzero solution iff the rows are dependent
    over GF(2)(V): divide by squares D_i^2, expand in the basis x^s of
    GF(2)(V) over GF(2)(V^2) and take square roots coordinatewise.
    """
    expansions = [square_root_expansion(v.num * v.den) for v in values]
    patterns = sorted({s for e in expansions for s in e})
    rows = []
    for e in expansions:
        rows.append([e.get(s) for s in patterns])
    return patterns, rows


def _is_symbolic_char2(dom):
    return isinstance(dom, RationalFunctionField) and dom.characteristic == 2


def certify_char2_anisotropy(g: GorensteinAlgebra, k: int, seed: int = 0, samples: int = 4) -> Certificate:
    dom = g.dom
    if dom.characteristic != 2:
        raise ModeError("anisotropy in this form needs characteristic 2")
    if k < 0 or 2 * k > g.d:
        raise DomainError("need 0 <= k <= d/2")
    middle = 2 * k == g.d
    if middle and not _is_symbolic_char2(dom):
        raise ModeError(
            "anisotropy at the middle degree is not decidable over a perfect field: "
            "there deg(u^2) is the square of a linear form in u; use symbolic coordinates over GF(2)(V)"
        )
    with timed() as t:
        witness = {"k": k, "dim_B_k": g.dim(k), "middle_degree": middle}
        witness["semilinearity"] = _semilinearity(g, k, seed, samples)
        if not middle:
            S = squaring_matrix(g, k)
            r = linalg.rank(dom, S) if S and S[0] else 0
            witness["squaring_matrix_shape"] = [g.dim(2 * k), g.dim(k)]
            witness["rank"] = r
            ok = r == g.dim(k)
            bound = bounds.probability(bounds.rank_check_bound(g.algebra, max(g.dim(k), 1)), dom)
        else:
            values = [g.degree(g.monomial(m + m)) for m in g.basis(k)]
            patterns, rows = middle_anisotropy_matrix(values)
            M = [[dom.zero if q is None else RatFunc(q) for q in row] for row in rows]
            r = linalg.rank(dom, M) if M and M[0] else 0
            witness["square_basis_size"] = len(patterns)
            witness["rank_over_squares"] = r
            ok = r == g.dim(k)
            bound = 0
        ok = ok and witness["semilinearity"]
    return Certificate(
        "char2_anisotropy", PASS if ok else FAIL, witness, algebra_fingerprint(g.algebra, seed, {"k": k}), bound, seed, t["ms"]
    )


def _semilinearity(g, k, seed, samples):
    """(u+v)^2 = u^2 + v^2 and (λu)^2 = λ^2 u^2 in B on random pairs."""
    dom = g.dom
    if 2 * k > g.d or g.dim(k) == 0:
        return True
    rng = random.Random(seed)
    n = g.dim(k)
    for _ in range(samples):
        u = [dom.random(rng) for _ in range(n)]
        v = [dom.random(rng) for _ in range(n)]
        lam = dom.random(rng)
        uv = [dom.add(a, b) for a, b in zip(u, v)]
        sq = lambda x: g.product(k, x, k, x)  # noqa: E731
        lhs, a, b = sq(uv), sq(u), sq(v)
        if any(not dom.eq(x, dom.add(y, z)) for x, y, z in zip(lhs, a, b)):
            return False
        lu = [dom.mul(lam, x) for x in u]
        l2 = dom.mul(lam, lam)
        if any(not dom.eq(x, dom.mul(l2, y)) for x, y in zip(sq(lu), a)):
            return False
    return True
