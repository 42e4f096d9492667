"""Schwartz-Zippel degree bounds for checks run at a random point.

Every degree value deg(m), m a degree-d monomial, is a rational function of
the coordinate entries V.  Rewriting m into facet monomials uses at most
d reduction steps, each multiplying by a ratio of two d x d minors, and
ends with a facet value mu_F / |V_F|.  So all degree values share the
common denominator  prod_F |V_F|^(d+1)  and their numerators have total degree
at most  D0 = f * d * (d + 1) + d^2  (f = number of facets).

A rank check on an r x r pairing block, possibly twisted by a generic
linear form to the power e, vanishes identically or on a hypersurface of
degree at most  r * (D0 + e)  in (V, coefficients of the linear form); that
number is the recorded degree bound.
"""

from __future__ import annotations

from fractions import Fraction


def field_size(domain):
    size = getattr(domain, "size", None)
    if callable(size):
        size = size()
    if size is None:
        p = getattr(domain, "p", None)
        m = getattr(domain, "m", None)
        if p is not None:
            size = p
        elif m is not None:
            size = 2**m
    return size


def degree_value_bound(alg):
    f = len(alg.complex.faces(alg.d))
    d = alg.d
    return f * d * (d + 1) + d * d


def rank_check_bound(alg, r, twist=0):
    """Degree bound for an r x r pairing-type minor."""
    return max(1, r) * (degree_value_bound(alg) + twist)


def probability(degree_bound, domain):
    q = field_size(domain)
    if not q:
        return Fraction(0)
    return Fraction(degree_bound, q)


def lee_identity_bound(alg, tau):
    """Degree of N_L D_M - N_M D_L for Lee's formula against the rewrite path.

    Lee's side has t = #facets containing tau summands, each with denominator
    |V_F| * prod_{i in F\\tau} [F-i] of degree d * (1 + d - |tau|).
    """
    d = alg.d
    t = sum(1 for F in alg.complex.faces(d) if set(tau).issubset(F))
    den_lee = t * d * (1 + d - len(tau))
    num_lee = den_lee + d * len(tau)
    f = len(alg.complex.faces(d))
    den_m = f * d * (d + 1)
    num_m = den_m + d * d
    return max(num_lee + den_m, num_m + den_lee)
