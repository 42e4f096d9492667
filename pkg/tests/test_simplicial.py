from math import comb

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from facering.arith.fields import DomainError, PrimeField
from facering.simplicial.complex import (
    SimplicialComplex,
    bipyramid,
    cone,
    cross_polytope_boundary,
    join,
    link,
    path_graph,
    polygon,
    rp2_six,
    simplex_boundary,
    star,
    suspension,
)
from facering.simplicial.homology import (
    Chain,
    betti_numbers,
    boundary_matrix,
    chain_from_labels,
    cycle_space,
    fundamental_class,
    pseudomanifold_check,
    support_of_cycle,
)
from facering.simplicial.invariants import cm_check, fhg_vectors, is_cohen_macaulay, is_m_vector, macaulay_bound

F2, F3, F101 = PrimeField(2), PrimeField(3), PrimeField(101)


def test_void_and_empty_complexes_differ():
    void = SimplicialComplex([])
    empty = SimplicialComplex([()])
    assert void.is_void and void.dim == -2
    assert not empty.is_void and empty.dim == -1
    assert betti_numbers(empty, F2) == {-1: 1}
    assert betti_numbers(void, F2) == {}


def test_facets_are_reduced_to_maximal_faces():
    c = SimplicialComplex([["a", "b", "c"], ["a", "b"], ["c", "d"]])
    assert sorted(map(sorted, c.facet_labels())) == [["a", "b", "c"], ["c", "d"]]
    assert not c.is_pure()


@pytest.mark.parametrize(
    "facets, vertices",
    [([["a", "a"]], None), ([["a", "b"]], ["a", "a", "b"]), ([["a", "b"]], ["a"]), ([["a"]], ["a", "z"])],
)
def test_bad_inputs_raise(facets, vertices):
    with pytest.raises(DomainError):
        SimplicialComplex(facets, vertices)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_simplex_boundary_counts(d):
    c = simplex_boundary(d)
    f, h, g = fhg_vectors(c)
    assert f == [comb(d + 1, i + 1) for i in range(d)]
    assert h == [1] * (d + 1)
    assert g == [1] + [0] * (d // 2)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_cross_polytope_h_vector_is_binomial(d):
    _, h, _ = fhg_vectors(cross_polytope_boundary(d))
    assert h == [comb(d, i) for i in range(d + 1)]


@pytest.mark.parametrize("c", [simplex_boundary(3), cross_polytope_boundary(3), bipyramid(5), polygon(7)], ids=repr)
def test_dehn_sommerville(c):
    _, h, _ = fhg_vectors(c)
    assert h == h[::-1]


@pytest.mark.parametrize("dom", [F2, F3, F101], ids=repr)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_boundary_squares_to_zero(dom, k):
    c = cross_polytope_boundary(4)
    b1 = boundary_matrix(c, k, dom)
    b0 = boundary_matrix(c, k - 1, dom)
    for row in b0.entries:
        for j in range(b1.cols):
            acc = 0
            for i, x in enumerate(row):
                acc = dom.add(acc, dom.mul(x, b1.entries[i][j]))
            assert acc == 0


@pytest.mark.parametrize(
    "c, dom, betti",
    [
        (simplex_boundary(3), F101, {-1: 0, 0: 0, 1: 0, 2: 1}),
        (rp2_six(), F2, {-1: 0, 0: 0, 1: 1, 2: 1}),
        (rp2_six(), F3, {-1: 0, 0: 0, 1: 0, 2: 0}),
        (polygon(5), F101, {-1: 0, 0: 0, 1: 1}),
        (path_graph(4), F101, {-1: 0, 0: 0, 1: 0}),
    ],
    ids=["tetrahedron", "rp2-char2", "rp2-char3", "pentagon", "path"],
)
def test_betti_numbers(c, dom, betti):
    assert betti_numbers(c, dom) == betti


def test_rp2_is_orientable_only_in_char_two():
    c = rp2_six()
    assert pseudomanifold_check(c, F2)["orientable"]
    info = pseudomanifold_check(c, F3)
    assert info["is_pseudomanifold"] and not info["orientable"]
    with pytest.raises(DomainError):
        fundamental_class(c, F3)


@pytest.mark.parametrize("c", [simplex_boundary(2), cross_polytope_boundary(3), bipyramid(5), rp2_six()], ids=repr)
def test_fundamental_class_is_a_full_support_cycle(c):
    dom = F2 if c.n == 6 and c.d == 3 and len(c.facets) == 10 else F101
    mu = fundamental_class(c, dom)
    assert mu.boundary().is_zero()
    assert len(mu.coefficients) == len(c.facets)
    assert support_of_cycle(mu) == c


def test_zero_dimensional_cycles_are_reduced():
    c = simplex_boundary(1)
    basis = cycle_space(c, F101)
    assert len(basis) == 1
    coeffs = list(basis[0].coefficients.values())
    assert F101.add(*coeffs) == 0


def test_two_spheres_have_two_cycle_classes():
    c = SimplicialComplex([["a", "b"], ["b", "c"], ["a", "c"], ["x", "y"], ["y", "z"], ["x", "z"]])
    assert len(cycle_space(c, F101)) == 2
    info = pseudomanifold_check(c, F101)
    assert info["orientable"] and not info["connected_fundamental"]


def test_chain_from_labels_and_back():
    c = polygon(4)
    mu = chain_from_labels(c, {"1,2": 1, "2,3": 1, "3,4": 1, "1,4": -1}, F101)
    assert mu.boundary().is_zero()
    assert dict(mu.to_labels()) == {k: v for k, v in mu.to_labels().items()}
    with pytest.raises(DomainError):
        Chain(c, 1, {(0, 2): 1}, F101)


def test_star_link_and_suspension():
    c = cross_polytope_boundary(3)
    v = c.vertices[0]
    assert link(c, [v]).f_vector() == [4, 4]
    assert star(c, [v]).f_vector()[2] == 4
    s, north, south = suspension(polygon(4))
    assert s.f_vector() == cross_polytope_boundary(3).f_vector()
    assert pseudomanifold_check(s, F101)["orientable"]
    assert {north, south} <= set(s.vertices)
    coned, apex = cone(polygon(3))
    assert coned.f_vector() == [4, 6, 3] and apex in coned.vertices
    assert join(simplex_boundary(1), simplex_boundary(1, ["a", "b"])).f_vector() == [4, 4]


def test_deletion_and_link_of_missing_face():
    c = simplex_boundary(3)
    assert c.deletion([c.vertices[0]]).f_vector() == [3, 3, 1]
    with pytest.raises(DomainError):
        link(polygon(5), ["1", "3"])


@pytest.mark.parametrize(
    "c, cm, two_cm",
    [
        (cross_polytope_boundary(3), True, True),
        (simplex_boundary(3), True, True),
        (path_graph(4), True, False),
        (SimplicialComplex([["a", "b"], ["c", "d"]]), False, False),
    ],
    ids=["octahedron", "tetrahedron", "path", "two-edges"],
)
def test_cohen_macaulay(c, cm, two_cm):
    assert is_cohen_macaulay(c, F101) is cm
    assert cm_check(c, F101, 2) == {"is_cm": cm, "is_s_cm": two_cm}


@pytest.mark.parametrize("v, ok", [([1, 2], True), ([1, 3, 6], True), ([1, 3, 7], False), ([1, 0, 1], False), ([2, 1], False)])
def test_m_vectors(v, ok):
    assert is_m_vector(v) is ok


@given(st.integers(1, 200), st.integers(1, 5))
@settings(max_examples=80)
def test_macaulay_bound_of_binomial(a, k):
    # a = C(k+m-1, k) monomials of degree k in m variables grow to C(k+m, k+1)
    m = 1
    while comb(k + m, k) <= a:
        m += 1
    exact = comb(k + m - 1, k)
    assert macaulay_bound(exact, k) == comb(k + m, k + 1)
    assert macaulay_bound(a, k) >= a


@given(st.lists(st.lists(st.sampled_from("abcdef"), min_size=1, max_size=4, unique=True), min_size=1, max_size=6))
@settings(max_examples=60)
def test_euler_characteristic_matches_betti(facets):
    c = SimplicialComplex(facets)
    f = c.f_vector()
    euler = sum((-1) ** i * x for i, x in enumerate(f))
    betti = betti_numbers(c, F101, reduced=False)
    assert euler == sum((-1) ** i * b for i, b in betti.items())
