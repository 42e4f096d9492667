import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from facering.algebra.artinian import ArtinianAlgebra, build_artinian
from facering.algebra.coords import explicit, generic, moment_curve, point_values, specialize_coords, symbolic
from facering.algebra.degree import degree_functional, facet_degree, lee_square_degree
from facering.algebra.gorenstein import gorensteinify, monomial_ideal, subspace_gorensteinify
from facering.arith import linalg
from facering.arith.fields import DomainError, PrimeField
from facering.errors import CycleDegreeInconsistency, DegenerateCoordinates
from facering.simplicial.complex import (
    SimplicialComplex,
    bipyramid,
    cross_polytope_boundary,
    path_graph,
    polygon,
    rp2_six,
    simplex_boundary,
)
from facering.simplicial.homology import Chain, chain_from_labels, fundamental_class
from facering.simplicial.invariants import fhg_vectors

from conftest import BIG, GF2_63, numeric_setup

SPHERES = [simplex_boundary(2), simplex_boundary(3), polygon(5), cross_polytope_boundary(3), bipyramid(5), simplex_boundary(4)]


@pytest.mark.parametrize("c", SPHERES, ids=repr)
def test_dimensions_follow_the_h_vector(c):
    alg = ArtinianAlgebra(c, generic(c.d, c.n, BIG, 5))
    _, h, _ = fhg_vectors(c)
    assert alg.dims() == h


@pytest.mark.parametrize("c", [path_graph(4), rp2_six()], ids=repr)
def test_cohen_macaulay_failure_shows_in_the_dimensions(c):
    dom = GF2_63 if c.d == 3 else BIG
    alg = ArtinianAlgebra(c, generic(c.d, c.n, dom, 1))
    _, h, _ = fhg_vectors(c)
    if c.d == 3:
        # RP^2 is not CM in char 2: A^3 is larger than h_3
        assert alg.dim(3) > h[3]
    else:
        assert alg.dims() == h


@pytest.mark.parametrize("c", [simplex_boundary(2), polygon(4), cross_polytope_boundary(3), bipyramid(5)], ids=repr)
def test_local_and_full_builds_agree(c):
    coords = generic(c.d, c.n, PrimeField(10007), 3)
    local = ArtinianAlgebra(c, coords)
    full = build_artinian(c, coords, method="full")
    assert local.dims() == full.dims()
    mu = fundamental_class(c, coords.domain)
    phi_l, phi_f = degree_functional(local, mu), degree_functional(full, mu)
    rng = random.Random(0)
    for _ in range(10):
        m = tuple(sorted(rng.randrange(c.n) for _ in range(c.d)))
        assert phi_l.of_monomial(m) == phi_f.of_monomial(m)


@pytest.mark.parametrize("c", [simplex_boundary(3), cross_polytope_boundary(3)], ids=repr)
def test_degree_on_facets(c):
    alg, mu, _ = numeric_setup(c)
    phi = degree_functional(alg, mu)
    for f in c.facets:
        assert phi.of_monomial(f) == facet_degree(alg, mu.coefficient(f), f)


def test_non_cycle_is_rejected(triangle):
    alg = ArtinianAlgebra(triangle, generic(2, 3, BIG, 0))
    bad = Chain(triangle, 1, {(0, 1): 1}, BIG)
    with pytest.raises(CycleDegreeInconsistency):
        degree_functional(alg, bad)


def test_sum_of_two_sphere_classes_is_a_cycle():
    c = SimplicialComplex([["a", "b"], ["b", "c"], ["a", "c"], ["x", "y"], ["y", "z"], ["x", "z"]])
    alg = ArtinianAlgebra(c, generic(2, 6, BIG, 0))
    left = chain_from_labels(c, {"a,b": 1, "b,c": 1, "a,c": -1}, BIG)
    right = chain_from_labels(c, {"x,y": 1, "y,z": 1, "x,z": -1}, BIG)
    both = Chain(c, 1, {**left.coefficients, **right.coefficients}, BIG)
    g = gorensteinify(alg, both)
    # B sees both spheres: one class of degree 1 from each side
    assert g.dims() == [1, 2, 1]
    assert subspace_gorensteinify(alg, [left, right]).dim(2) == 2


@given(st.integers(0, 2**32))
@settings(max_examples=15, deadline=None)
def test_product_is_commutative_and_associative(seed):
    c = cross_polytope_boundary(3)
    alg = ArtinianAlgebra(c, generic(3, 6, PrimeField(10007), seed % 1000))
    rng = random.Random(seed)
    dom = alg.dom
    vec = lambda k: [dom.random(rng) for _ in range(alg.dim(k))]  # noqa: E731
    a, b, e = vec(1), vec(1), vec(1)
    assert alg.product(1, a, 1, b) == alg.product(1, b, 1, a)
    left = alg.product(2, alg.product(1, a, 1, b), 1, e)
    right = alg.product(1, a, 2, alg.product(1, b, 1, e))
    assert left == right


def test_singular_facet_minor_is_reported(triangle):
    coords = explicit([[1, 1, 0], [1, 1, 1]], BIG)
    with pytest.raises(DegenerateCoordinates):
        ArtinianAlgebra(triangle, coords).dims()


def test_zero_column_is_not_an_lsop():
    with pytest.raises(DegenerateCoordinates):
        explicit([[1, 0, 1], [1, 0, 2]], BIG)


@pytest.mark.parametrize("bad", [(3, 2), (2, 4)])
def test_shape_mismatch(triangle, bad):
    with pytest.raises(DomainError):
        ArtinianAlgebra(triangle, generic(bad[0], bad[1], BIG))


def test_moment_curve_columns_and_duplicates():
    dom = PrimeField(101)
    coords = moment_curve([1, 2, 3], 2, dom)
    assert coords.columns[2] == [3, 9]
    with pytest.raises(DomainError):
        moment_curve([1, 2, 1], 2, dom)


@pytest.mark.parametrize("c", SPHERES, ids=repr)
def test_gorenstein_is_a_duality_algebra(c):
    _, _, g = numeric_setup(c, seed=2)
    dims = g.dims()
    assert dims == dims[::-1] and dims[-1] == 1
    for k in range(c.d + 1):
        P = g.pairing_matrix(k)
        if P:
            assert linalg.rank(g.dom, P) == g.dim(k)


def test_rp2_gorenstein_dimensions(rp2):
    _, _, g = numeric_setup(rp2, GF2_63, seed=0)
    assert g.dims() == [1, 3, 3, 1]


def test_monomial_ideal_extremes(octahedron):
    _, _, g = numeric_setup(octahedron)
    full = monomial_ideal(g, None)
    assert full.dims() == g.dims()
    maximal = monomial_ideal(g, SimplicialComplex([()]))
    assert maximal.dims()[0] == 0 and maximal.dims()[1:] == g.dims()[1:]


@pytest.mark.parametrize("c", [simplex_boundary(2), polygon(4), polygon(6), cross_polytope_boundary(4)], ids=repr)
def test_lee_formula_matches_multiplication(c):
    alg, mu, _ = numeric_setup(c, seed=9)
    phi = degree_functional(alg, mu)
    k = c.d // 2
    for tau in c.faces(k):
        assert lee_square_degree(alg, mu, tau) == phi.of_monomial(tuple(sorted(tau * 2)))


def test_lee_formula_needs_middle_faces(tetrahedron):
    alg, mu, _ = numeric_setup(tetrahedron)
    with pytest.raises(DomainError):
        lee_square_degree(alg, mu, (0,))


def test_symbolic_algebra_specializes_consistently(triangle):
    base = PrimeField(101)
    coords = symbolic(2, 3, base)
    alg = ArtinianAlgebra(triangle, coords)
    mu = fundamental_class(triangle, base)
    phi = degree_functional(alg, mu)
    sym = phi.of_monomial((0, 0))
    vals = point_values(coords, base, 4)
    num = ArtinianAlgebra(triangle, specialize_coords(coords, vals, base))
    assert sym.evaluate(vals, base) == degree_functional(num, mu).of_monomial((0, 0))


def test_socle_of_a_sphere_is_top(octahedron):
    alg, _, _ = numeric_setup(octahedron)
    info = alg.socle_and_level()
    assert info["is_level"] and info["socle_dims"][3] == 1
