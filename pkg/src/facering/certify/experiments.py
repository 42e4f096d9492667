"""Probes without a theorem behind them.  They only ever emit report-only
certificates, so their outcome never changes a suite's exit code."""

from __future__ import annotations

import random
from dataclasses import replace

from ..algebra.artinian import ArtinianAlgebra
from ..algebra.coords import CoordMatrix, moment_curve
from ..algebra.gorenstein import gorensteinify
from ..arith.fields import DomainError
from ..errors import FatalInconsistency
from ..simplicial.complex import SimplicialComplex
from ..simplicial.homology import Chain
from .certificate import REPORT, Certificate
from .checks import LefschetzQuery, certify_hard_lefschetz, check_poincare_duality


def _as_report(cert: Certificate, extra: dict) -> Certificate:
    witness = dict(cert.witness)
    witness.setdefault("computed_verdict", cert.verdict)
    witness.update(extra)
    return replace(cert, verdict=REPORT, witness=witness)


def moment_curve_probe(complex_: SimplicialComplex, mu: Chain, params, domain, seed: int = 0):
    """Θ from points (t, t^2, ..., t^d) on the moment curve; duality and
    Lefschetz for ℓ = (t_v^{d+1})_v, the next moment coordinate, and for a
    generic ℓ.  Returns report-only certificates."""
    if len(params) != complex_.n:
        raise DomainError(f"need one parameter per vertex ({complex_.n}), got {len(params)}")
    d = complex_.d
    coords = moment_curve(params, d, domain, seed)
    alg = ArtinianAlgebra(complex_, coords)
    g = gorensteinify(alg, mu)
    info = {"params": [str(t) for t in params], "probe": "moment curve"}
    out = [_as_report(check_poincare_duality(g, seed), info)]
    vals = [domain.from_int(int(t)) if isinstance(t, int) else t for t in params]
    ell = []
    for t in vals:
        p = domain.one
        for _ in range(d + 1):
            p = domain.mul(p, t)
        ell.append(p)
    q = LefschetzQuery(g, mode="explicit", coefficients=ell, seed=seed, extra={"report_only": True})
    out.append(_as_report(certify_hard_lefschetz(q), dict(info, ell="next moment coordinate t^(d+1)")))
    q = LefschetzQuery(g, mode="generic", seed=seed, extra={"report_only": True})
    out.append(_as_report(certify_hard_lefschetz(q), dict(info, ell="generic")))
    return out


def isotropic_vertex_search(complex_: SimplicialComplex, mu: Chain, vertex: int, domain, tries: int = 2000, seed: int = 0):
    """Random numeric coordinates over a small field with deg(x_v^2) = 0
    while x_v survives in B.  Used to build a biased-pairing failure for
    Γ = the deletion of v, where K^k is spanned by x_v.

    Returns (coords, gorenstein algebra) or None when the search runs dry.
    """
    rng = random.Random(seed)
    d = complex_.d
    for _ in range(tries):
        cols = [[domain.random(rng) for _ in range(d)] for _ in range(complex_.n)]
        ref = [domain.random(rng) for _ in range(d)]
        try:
            coords = CoordMatrix(domain, cols, mode="numeric", seed=seed, reference=ref)
            g = gorensteinify(ArtinianAlgebra(complex_, coords), mu)
        except (DomainError, FatalInconsistency, ZeroDivisionError):
            # tiny fields often give singular minors or a collapsed B^d
            continue
        x = g.monomial((vertex,))
        if all(domain.is_zero(a) for a in x):
            continue
        if domain.is_zero(g.degree(g.monomial((vertex, vertex)))):
            return coords, g
    return None
