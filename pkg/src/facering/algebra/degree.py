"""Degree maps A^d -> F attached to top-dimensional cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import linalg
from ..arith.fields import BinaryField, DomainError, PrimeField
from ..errors import CycleDegreeInconsistency, DegenerateCoordinates
from ..simplicial.homology import Chain
from .artinian import ArtinianAlgebra


@dataclass
class DegreeFunctional:
    """deg as a row vector on the basis of A^d, with the cycle it came from."""

    algebra: ArtinianAlgebra
    values: list
    cycle: Chain | None = None
    witness: dict = field(default_factory=dict)

    def evaluate(self, vec):
        dom = self.algebra.dom
        acc = dom.zero
        for a, b in zip(self.values, vec):
            if not dom.is_zero(a) and not dom.is_zero(b):
                acc = dom.add(acc, dom.mul(a, b))
        return acc

    def of_monomial(self, m):
        if len(m) != self.algebra.d:
            return self.algebra.dom.zero
        return self.evaluate(self.algebra.rewrite(m))

    def of_poly(self, poly):
        return self.evaluate(self.algebra.element(poly, self.algebra.d))

    def is_zero(self):
        return all(self.algebra.dom.is_zero(a) for a in self.values)


def cycle_coefficients(alg: ArtinianAlgebra, mu: Chain):
    """{facet index tuple of alg.complex: coefficient} for a (d-1)-chain given on
    the same complex or on a subcomplex with matching labels."""
    if mu.dimension != alg.d - 1:
        raise DomainError(f"cycle of dimension {mu.dimension} for an algebra of Krull dimension {alg.d}")
    out = {}
    for f, c in mu.coefficients.items():
        labels = mu.complex.labels(f)
        face = alg.complex.face_of(labels)
        if not alg.complex.is_face(face):
            raise DomainError(f"cycle face {labels} is not a face of the complex")
        out[face] = _convert(alg.dom, c)
    return out


def _convert(dom, c):
    """Coefficients given as prime-field integers are embedded into `dom`."""
    if isinstance(c, int) and not isinstance(dom, (PrimeField, BinaryField)):
        return dom.from_int(c)
    return c


def facet_degree(alg: ArtinianAlgebra, coeff, face):
    """deg(x_F) = μ_F / |V_F|."""
    dom = alg.dom
    vol = alg.coords.minor(face)
    if dom.is_zero(vol):
        raise DegenerateCoordinates(f"facet {face} has a singular coordinate minor")
    return dom.div(coeff, vol)


def degree_functional(alg: ArtinianAlgebra, mu: Chain) -> DegreeFunctional:
    """The unique functional with deg(x_F) = μ_F / |V_F| on every facet.

    Raises CycleDegreeInconsistency when the facet values are not the values of
    a functional on A^d, which happens exactly when μ is not a cycle.
    """
    dom = alg.dom
    coeffs = cycle_coefficients(alg, mu)
    top = alg.complex.faces(alg.d)
    rows, rhs = [], []
    for face in top:
        rows.append(list(alg.rewrite(face)))
        rhs.append(facet_degree(alg, coeffs.get(face, dom.zero), face))
    nd = alg.dim(alg.d)
    if nd == 0:
        if any(not dom.is_zero(t) for t in rhs):
            raise CycleDegreeInconsistency("A^d = 0 but the facet values are not all zero")
        return DegreeFunctional(alg, [], mu, {"dim_top": 0, "facets": len(top)})
    y = linalg.solve(dom, rows, rhs)
    if y is None:
        bad = _first_inconsistency(alg, rows, rhs)
        raise CycleDegreeInconsistency(f"facet values do not extend to a functional on A^d; {bad}")
    witness = {"dim_top": nd, "facets": len(top), "rank": linalg.rank(dom, rows)}
    return DegreeFunctional(alg, y, mu, witness)


def _first_inconsistency(alg, rows, rhs):
    dom = alg.dom
    aug = [r + [t] for r, t in zip(rows, rhs)]
    kern = linalg.left_kernel(dom, [list(r) for r in rows])
    for w in kern:
        val = dom.zero
        for a, t in zip(w, rhs):
            val = dom.add(val, dom.mul(a, t))
        if not dom.is_zero(val):
            return f"a relation among {sum(1 for a in w if not dom.is_zero(a))} facet monomials is violated"
    return f"rank mismatch in a {len(aug)}-row system"


def degree_map(alg: ArtinianAlgebra, mu: Chain) -> DegreeFunctional:
    return degree_functional(alg, mu)


def lee_square_degree(alg: ArtinianAlgebra, mu: Chain, tau):
    """deg(x_τ^2) from facet data alone:

        sum over facets F ⊇ τ of deg(x_F) * prod_{i in τ} [F-i] / prod_{i in F∖τ} [F-i]

    where [F-i] replaces the column of i in V_F by the reference column.
    Needs 2|τ| = d.
    """
    dom = alg.dom
    tau = tuple(sorted(tau))
    if 2 * len(tau) != alg.d:
        raise DomainError("Lee's formula needs a face with 2|τ| = d")
    if not alg.complex.is_face(tau):
        raise DomainError(f"{tau} is not a face")
    coeffs = cycle_coefficients(alg, mu)
    total = dom.zero
    for face in alg.complex.faces(alg.d):
        if not set(tau).issubset(face):
            continue
        c = coeffs.get(face, dom.zero)
        if dom.is_zero(c):
            continue
        term = facet_degree(alg, c, face)
        for i in face:
            vol = alg.coords.volume_element(face, i)
            if dom.is_zero(vol):
                raise DegenerateCoordinates(f"volume element [{face}-{i}] vanishes")
            term = dom.mul(term, vol) if i in tau else dom.div(term, vol)
        total = dom.add(total, term)
    return total
