import dataclasses

import pytest

from facering.algebra.artinian import ArtinianAlgebra
from facering.algebra.coords import generic, symbolic
from facering.algebra.degree import degree_functional
from facering.algebra.gorenstein import GorensteinAlgebra, gorensteinify
from facering.arith.fields import PrimeField, default_field
from facering.simplicial.complex import cross_polytope_boundary, polygon, rp2_six, simplex_boundary
from facering.simplicial.homology import fundamental_class

BIG = default_field(0)
GF2_63 = default_field(2)


def numeric_setup(c, dom=BIG, seed=0, method="local"):
    """(algebra, cycle, gorenstein algebra) for generic coordinates."""
    mu = fundamental_class(c, dom)
    alg = ArtinianAlgebra(c, generic(c.d, c.n, dom, seed), method=method)
    return alg, mu, gorensteinify(alg, mu)


def symbolic_setup(c, p=101):
    base = PrimeField(p)
    alg = ArtinianAlgebra(c, symbolic(c.d, c.n, base))
    return alg, fundamental_class(c, base)


def tampered_gorenstein(alg, mu):
    """A Gorenstein algebra whose degree map was zeroed after the fact.

    The stored facet values then disagree with μ_F / |V_F|, which the
    duality check must notice.
    """
    phi = degree_functional(alg, mu)
    dom = alg.dom
    bad = dataclasses.replace(phi, values=[dom.zero] * len(phi.values))
    return GorensteinAlgebra(alg, [bad])


@pytest.fixture(scope="session")
def big():
    return BIG


@pytest.fixture(scope="session")
def triangle():
    return simplex_boundary(2)


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope_boundary(3)


@pytest.fixture(scope="session")
def tetrahedron():
    return simplex_boundary(3)


@pytest.fixture(scope="session")
def square():
    return polygon(4)


@pytest.fixture(scope="session")
def rp2():
    return rp2_six()
