"""Both sides of the suspension trick for Hall-Laman relations."""

from __future__ import annotations

import random

from ..algebra.artinian import ArtinianAlgebra
from ..algebra.coords import CoordMatrix
from ..algebra.gorenstein import gorensteinify, monomial_ideal
from ..arith import linalg
from ..arith.fields import DomainError
from ..simplicial.complex import SimplicialComplex, suspension
from ..simplicial.homology import Chain
from . import bounds
from .certificate import FAIL, PASS, Certificate, fingerprint, timed


def _hall_laman_rank(g, basis, k, ell, e):
    dom = g.dom
    if e:
        P = g.power_map(k, ell, e)
        basis_up = [linalg.matvec(dom, P, a) for a in basis]
    else:
        basis_up = basis
    G = [[g.pair(k + e, a, b) for b in basis] for a in basis_up]
    n = len(basis)
    r = linalg.rank(dom, G) if n else 0
    return n, r


def suspended_cycle(mu: Chain, susp: SimplicialComplex, north, south):
    """Σμ: F ∪ n gets μ_F and F ∪ s gets -μ_F (n, s last in the vertex order)."""
    dom = mu.domain
    coeffs = {}
    for f, c in mu.coefficients.items():
        labels = list(mu.complex.labels(f))
        coeffs[susp.face_of(labels + [north])] = c
        coeffs[susp.face_of(labels + [south])] = dom.neg(c)
    return Chain(susp, mu.dimension + 1, coeffs, dom)


def _lift_faces(gamma: SimplicialComplex | None, susp, cone_base: SimplicialComplex, north, south):
    """Facets (as labels) of ΣΓ ∪ s * |μ|."""
    facets = []
    if gamma is not None and not gamma.is_void:
        for f in gamma.facets:
            lab = list(gamma.labels(f))
            facets.append(lab + [north])
            facets.append(lab + [south])
    for f in cone_base.facets:
        facets.append(list(cone_base.labels(f)) + [south])
    return facets


def suspension_equivalence(mu_prime: Chain, gamma_prime: SimplicialComplex | None, k: int, seed: int = 0, domain=None) -> Certificate:
    """Hall-Laman for K^{k+1}(Σμ, ΣΓ ∪ s*|μ|) with respect to x_n versus
    Hall-Laman for K^k(πμ, πΓ) with respect to ϑ.

    The lift puts base vertex v at (p_v, h_v) with random heights h_v,
    north at +e_{d+1} and south at -e_{d+1}.  Projecting along n recovers
    the base coordinates p_v, and ϑ = x_n - x_s acts on the star of n as
    -sum_v h_v x_v.  Passes when the two verdicts agree.
    """
    base = mu_prime.complex
    d = base.d
    if not (0 <= k and 2 * k < d):
        raise DomainError("the suspension trick needs 0 <= k < d/2")
    dom = domain or mu_prime.domain
    with timed() as t:
        rng = random.Random(seed)
        draw = getattr(dom, "random_nonzero", dom.random)
        p = [[draw(rng) for _ in range(d)] for _ in range(base.n)]
        h = [draw(rng) for _ in range(base.n)]
        ref = [draw(rng) for _ in range(d)]
        ref_up = [draw(rng) for _ in range(d + 1)]
        # side 2: projected cycle with height element
        base_coords = CoordMatrix(dom, p, mode="random", seed=seed, reference=ref)
        A2 = ArtinianAlgebra(base, base_coords)
        g2 = gorensteinify(A2, mu_prime)
        K2 = monomial_ideal(g2, gamma_prime, degrees=[k])
        theta = [dom.neg(x) for x in h]
        n2, r2 = _hall_laman_rank(g2, K2.basis(k), k, theta, d - 2 * k)
        # side 1: suspension, lifted
        susp, north, south = suspension(base)
        cols = []
        for v in susp.vertices:
            if v == north:
                cols.append([dom.zero] * d + [dom.one])
            elif v == south:
                cols.append([dom.zero] * d + [dom.neg(dom.one)])
            else:
                i = base.index[v]
                cols.append(list(p[i]) + [h[i]])
        up_coords = CoordMatrix(dom, cols, mode="random", seed=seed, reference=ref_up)
        A1 = ArtinianAlgebra(susp, up_coords)
        smu = suspended_cycle(mu_prime, susp, north, south)
        g1 = gorensteinify(A1, smu)
        support = base.subcomplex(list(mu_prime.coefficients))
        gamma_up = SimplicialComplex(_lift_faces(gamma_prime, susp, support, north, south))
        K1 = monomial_ideal(g1, gamma_up, degrees=[k + 1])
        xn = [dom.one if v == north else dom.zero for v in susp.vertices]
        n1, r1 = _hall_laman_rank(g1, K1.basis(k + 1), k + 1, xn, d - 2 * k - 1)
        side1 = r1 == n1
        side2 = r2 == n2
        witness = {
            "suspension_side": {"degree": k + 1, "power_of_x_n": d - 2 * k - 1, "dim_ideal": n1, "gram_rank": r1, "verdict": PASS if side1 else FAIL},
            "projected_side": {"degree": k, "power_of_theta": d - 2 * k, "dim_ideal": n2, "gram_rank": r2, "verdict": PASS if side2 else FAIL},
            "dims_match": n1 == n2,
            "lift": "north +e_{d+1}, south -e_{d+1}, base coordinates kept, random heights",
        }
        verdict = PASS if side1 == side2 and n1 == n2 else FAIL
        D = bounds.rank_check_bound(A1, max(n1, 1), d) + bounds.rank_check_bound(A2, max(n2, 1), d)
        bound = bounds.probability(D, dom)
    fp = fingerprint(base, base_coords, seed=seed, extra={"k": k, "gamma": None if gamma_prime is None else gamma_prime.fingerprint()})
    return Certificate("suspension_equivalence", verdict, witness, fp, bound, seed, t["ms"])
