import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from facering.algebra.artinian import ArtinianAlgebra
from facering.algebra.coords import generic, symbolic
from facering.algebra.gorenstein import gorensteinify, monomial_ideal
from facering.arith import linalg
from facering.arith.fields import DomainError, PrimeField
from facering.arith.linalg import ExactMatrix
from facering.certify.anisotropy import certify_char2_anisotropy, middle_anisotropy_matrix, square_root_expansion
from facering.certify.certificate import FAIL, PASS, REPORT, Certificate
from facering.certify.checks import (
    LefschetzQuery,
    certify_biased_pairing,
    certify_hall_laman,
    certify_hard_lefschetz,
    certify_top_heavy,
    check_g_vector,
    check_poincare_duality,
    kronecker_transversality,
    random_linear_form,
    transversal_prime_check,
)
from facering.certify.experiments import isotropic_vertex_search, moment_curve_probe
from facering.certify.suspension import suspension_equivalence
from facering.errors import ModeError
from facering.simplicial.complex import (
    SimplicialComplex,
    bipyramid,
    cross_polytope_boundary,
    polygon,
    simplex_boundary,
)
from facering.simplicial.homology import fundamental_class

from conftest import BIG, GF2_63, numeric_setup, tampered_gorenstein

SPHERES = {
    "triangle": simplex_boundary(2),
    "square": polygon(4),
    "tetrahedron": simplex_boundary(3),
    "octahedron": cross_polytope_boundary(3),
    "bipyramid": bipyramid(5),
    "simplex-4": simplex_boundary(4),
}


# ---------------------------------------------------------------- duality and Lefschetz
@pytest.mark.parametrize("name", SPHERES)
def test_duality_and_lefschetz_pass_on_spheres(name):
    c = SPHERES[name]
    _, _, g = numeric_setup(c, seed=11)
    dual = check_poincare_duality(g, 11)
    lef = certify_hard_lefschetz(LefschetzQuery(g, seed=11))
    assert dual.verdict == PASS and lef.verdict == PASS
    assert dual.error_probability_bound <= Fraction(1, 2**40)
    assert lef.error_probability_bound <= Fraction(1, 2**40)


def test_tampered_degree_map_fails_duality(octahedron):
    alg, mu, _ = numeric_setup(octahedron)
    cert = check_poincare_duality(tampered_gorenstein(alg, mu))
    assert cert.verdict == FAIL
    assert "facet_mismatch" in cert.witness


def test_vertex_lefschetz_is_report_only(tetrahedron):
    _, _, g = numeric_setup(tetrahedron)
    cert = certify_hard_lefschetz(LefschetzQuery(g, mode="vertex", vertex=0))
    assert cert.verdict == REPORT
    assert cert.witness["computed_verdict"] in (PASS, FAIL)


def test_zero_form_is_not_lefschetz(octahedron):
    _, _, g = numeric_setup(octahedron)
    cert = certify_hard_lefschetz(LefschetzQuery(g, mode="explicit", coefficients=[0] * 6))
    assert cert.verdict == FAIL and cert.witness["degenerate_degree"] == 0


@pytest.mark.parametrize("k", [-1, 3])
def test_lefschetz_degree_out_of_range(octahedron, k):
    _, _, g = numeric_setup(octahedron)
    with pytest.raises(DomainError):
        certify_hard_lefschetz(LefschetzQuery(g, k=k))


def test_linear_form_differs_from_coordinates():
    coords = generic(1, 2, BIG, 0)
    ell = random_linear_form(BIG, 2, 0)
    assert ell != [col[0] for col in coords.columns]


def test_rp2_in_characteristic_two(rp2):
    _, _, g = numeric_setup(rp2, GF2_63)
    assert check_poincare_duality(g).verdict == PASS
    assert certify_hard_lefschetz(LefschetzQuery(g, k=1)).verdict == PASS


# ---------------------------------------------------------------- doubly CM
def test_octahedron_top_heavy_and_g_vector(octahedron):
    alg, mu, _ = numeric_setup(octahedron)
    for k in (0, 1):
        cert = certify_top_heavy(alg, [mu], k)
        assert cert.verdict == PASS
        assert cert.witness["doubly_cm"] and cert.witness["is_level"]
    g = check_g_vector(octahedron)
    assert g.verdict == PASS and g.witness["g"] == [1, 2]


def test_g_vector_rejects_non_m_vector():
    # two disjoint copies of ∂Δ^4: h = (1, 6, -4, ...), g = (1, 5, -10)
    a = simplex_boundary(4)
    b = simplex_boundary(4, list("abcde"))
    c = SimplicialComplex(a.facet_labels() + b.facet_labels())
    cert = check_g_vector(c)
    assert cert.witness["g"] == [1, 5, -10]
    assert cert.verdict == FAIL


# ---------------------------------------------------------------- biased pairing
def biased_cases():
    cases = []
    for name in ("triangle", "square", "tetrahedron", "octahedron", "bipyramid"):
        c = SPHERES[name]
        v = c.vertices[0]
        gammas = {
            "void": None,
            "empty": SimplicialComplex([()]),
            "deletion": c.deletion([v]),
            "facet": SimplicialComplex([c.labels(c.facets[0])]),
        }
        for gname, gamma in gammas.items():
            for k in range(c.d // 2 + 1):
                cases.append(pytest.param(name, gamma, k, id=f"{name}-{gname}-k{k}"))
    return cases


@pytest.mark.parametrize("name, gamma, k", biased_cases())
def test_biased_pairing_routes_agree(name, gamma, k):
    _, _, g = numeric_setup(SPHERES[name], seed=4)
    cert = certify_biased_pairing(g, gamma, k)
    assert cert.witness["routes_agree"]
    assert cert.verdict == PASS


def test_engineered_biased_pairing_failure(square):
    dom = PrimeField(7)
    mu = fundamental_class(square, dom)
    found = isotropic_vertex_search(square, mu, 0, dom, seed=1)
    assert found is not None
    _, g = found
    cert = certify_biased_pairing(g, square.deletion([square.vertices[0]]), 1)
    assert cert.verdict == FAIL
    assert cert.witness["routes"] == {"gram": False, "inject": False, "surject": False}
    assert "offending_element" in cert.witness


def test_biased_pairing_rejects_non_subcomplex(triangle):
    _, _, g = numeric_setup(triangle)
    with pytest.raises(DomainError):
        certify_biased_pairing(g, SimplicialComplex([["1", "9"]]), 1)
    with pytest.raises(DomainError):
        certify_biased_pairing(g, triangle, 1)


@pytest.mark.parametrize("name", ["tetrahedron", "octahedron", "bipyramid"])
def test_hall_laman_on_maximal_ideal(name):
    _, _, g = numeric_setup(SPHERES[name], seed=6)
    ell = random_linear_form(g.dom, g.n, 6)
    K = monomial_ideal(g, SimplicialComplex([()]), [1])
    assert certify_hall_laman(g, K, 1, ell).verdict == PASS


# ---------------------------------------------------------------- suspension
@pytest.mark.parametrize(
    "c, gamma, k",
    [
        (simplex_boundary(2), None, 0),
        (simplex_boundary(2), SimplicialComplex([["1"]]), 0),
        (cross_polytope_boundary(3), None, 1),
        (cross_polytope_boundary(3), None, 0),
        (cross_polytope_boundary(3), SimplicialComplex([["1+", "2+"]]), 1),
    ],
    ids=["triangle", "triangle-vertex", "octahedron-k1", "octahedron-k0", "octahedron-edge"],
)
def test_suspension_sides_agree(c, gamma, k):
    mu = fundamental_class(c, BIG)
    cert = suspension_equivalence(mu, gamma, k, seed=2)
    assert cert.verdict == PASS
    assert cert.witness["dims_match"]


def test_suspension_needs_k_below_half(triangle):
    with pytest.raises(DomainError):
        suspension_equivalence(fundamental_class(triangle, BIG), None, 1)


# ---------------------------------------------------------------- transversality
def random_rank_matrix(dom, n, r, rng):
    if r == 0:
        return [[dom.zero] * n for _ in range(n)]
    left = [[dom.random(rng) for _ in range(r)] for _ in range(n)]
    right = [[dom.random(rng) for _ in range(n)] for _ in range(r)]
    return linalg.matmul(dom, left, right)


@given(st.integers(0, 2**31), st.integers(2, 5))
@settings(max_examples=40, deadline=None)
def test_kronecker_on_random_transversal_pairs(seed, n):
    rng = random.Random(seed)
    r = rng.randrange(0, n)
    A = ExactMatrix.from_rows(BIG, random_rank_matrix(BIG, n, r, rng))
    B = ExactMatrix.from_rows(BIG, [[BIG.random(rng) for _ in range(n)] for _ in range(n)])
    cert = kronecker_transversality(A, B, trials=8, seed=seed)
    assert cert.verdict in (PASS, REPORT)
    assert cert.witness["counterexamples"] == []


def test_kronecker_non_transversal_is_report():
    F = PrimeField(101)
    # β maps ker α onto im α, and indeed ker(α + tβ) is bigger than ker α ∩ ker β
    A = ExactMatrix.from_rows(F, [[0, 1], [0, 0]])
    B = ExactMatrix.from_rows(F, [[1, 0], [0, 0]])
    cert = kronecker_transversality(A, B)
    assert cert.verdict == REPORT and not cert.witness["transversal"]
    assert cert.witness["dim_common_kernel"] == 0


def test_kronecker_shape_mismatch():
    F = PrimeField(101)
    with pytest.raises(DomainError):
        kronecker_transversality(ExactMatrix.from_rows(F, [[1]]), ExactMatrix.from_rows(F, [[1, 0]]))


def test_transversal_prime_matches_lefschetz(tetrahedron):
    _, _, g = numeric_setup(tetrahedron)
    cert = transversal_prime_check(g, range(g.n), 1)
    assert cert.verdict == PASS
    lef = certify_hard_lefschetz(LefschetzQuery(g, k=1))
    assert cert.witness["lefschetz_injective"] == (lef.verdict == PASS)


def test_transversal_prime_on_a_vertex_subset(octahedron):
    _, _, g = numeric_setup(octahedron)
    cert = transversal_prime_check(g, [0, 1], 1)
    assert cert.verdict == PASS
    assert cert.witness["dim_kernel_combination"] == cert.witness["dim_kernel_intersection"]


# ---------------------------------------------------------------- anisotropy
def test_square_root_expansion_reassembles():
    from facering.arith.poly import PolyRing

    R = PolyRing(PrimeField(2), ["a", "b"])
    a, b = R.gens()
    p = a * a * a * b + b * b + a
    parts = square_root_expansion(p)
    total = R.zero()
    for s, q in parts.items():
        mono = R.one()
        for name, e in zip(R.names, s):
            if e:
                mono = mono * R.var(name)
        total = total + q * q * mono
    assert total == p


def test_rp2_below_middle_degree(rp2):
    _, _, g = numeric_setup(rp2, GF2_63)
    cert = certify_char2_anisotropy(g, 1)
    assert cert.verdict == PASS
    assert cert.witness["squaring_matrix_shape"] == [3, 3] and cert.witness["rank"] == 3


def test_middle_degree_over_symbolic_field(triangle):
    base = PrimeField(2)
    alg = ArtinianAlgebra(triangle, symbolic(2, 3, base))
    g = gorensteinify(alg, fundamental_class(triangle, base))
    cert = certify_char2_anisotropy(g, 1)
    assert cert.verdict == PASS and cert.error_probability_bound == 0
    values = [g.degree(g.monomial(m + m)) for m in g.basis(1)]
    patterns, rows = middle_anisotropy_matrix(values)
    assert len(rows) == g.dim(1) and patterns


def test_middle_degree_over_finite_field_is_a_mode_error():
    c = polygon(4)
    _, _, g = numeric_setup(c, GF2_63)
    with pytest.raises(ModeError):
        certify_char2_anisotropy(g, 1)


def test_anisotropy_needs_characteristic_two(triangle):
    _, _, g = numeric_setup(triangle)
    with pytest.raises(ModeError):
        certify_char2_anisotropy(g, 0)


# ---------------------------------------------------------------- experiments and certificates
@pytest.mark.parametrize("c", [simplex_boundary(3), cross_polytope_boundary(3)], ids=["tetrahedron", "octahedron"])
def test_moment_curve_probe_is_report_only(c):
    mu = fundamental_class(c, BIG)
    certs = moment_curve_probe(c, mu, list(range(1, c.n + 1)), BIG)
    assert len(certs) == 3
    assert all(x.verdict == REPORT for x in certs)
    assert all("computed_verdict" in x.witness for x in certs)


def test_moment_curve_probe_rejects_bad_parameters(tetrahedron):
    mu = fundamental_class(tetrahedron, BIG)
    with pytest.raises(DomainError):
        moment_curve_probe(tetrahedron, mu, [1, 2, 3], BIG)
    with pytest.raises(DomainError):
        moment_curve_probe(tetrahedron, mu, [1, 2, 3, 1], BIG)


def test_certificate_json_roundtrip(octahedron):
    _, _, g = numeric_setup(octahedron)
    cert = check_poincare_duality(g, 3)
    data = json.loads(json.dumps(cert.to_json()))
    back = Certificate.from_json(data)
    assert back.verdict == cert.verdict and back.error_probability_bound == cert.error_probability_bound
    assert set(data) == {"check", "input_fingerprint", "verdict", "witness", "error_probability_bound", "seed", "runtime_ms"}


def test_unknown_verdict_rejected():
    with pytest.raises(ValueError):
        Certificate("x", "maybe")
