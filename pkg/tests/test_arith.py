import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from facering.arith import linalg
from facering.arith.calculus import directional_derivative, poly_arith, specialize
from facering.arith.fields import (
    MERSENNE_61,
    BinaryField,
    DomainError,
    FieldDescriptor,
    JetRing,
    PrimeField,
    UnluckySpecialization,
    default_field,
    gf2_poly_is_irreducible,
    is_prime,
    make_field,
)
from facering.arith.poly import PolyRing, RatFunc, RationalFunctionField

FIELDS = [PrimeField(7), PrimeField(MERSENNE_61), BinaryField(8), BinaryField(63)]


def elements(dom):
    return st.integers(min_value=0, max_value=dom.size - 1)


@pytest.mark.parametrize("dom", FIELDS, ids=repr)
@given(data=st.data())
def test_field_axioms(dom, data):
    a, b, c = (data.draw(elements(dom)) for _ in range(3))
    assert dom.eq(dom.mul(a, dom.add(b, c)), dom.add(dom.mul(a, b), dom.mul(a, c)))
    assert dom.eq(dom.add(a, dom.neg(a)), dom.zero)
    assert dom.eq(dom.sub(dom.add(a, b), b), a)
    if not dom.is_zero(a):
        assert dom.eq(dom.mul(a, dom.inv(a)), dom.one)
        assert dom.eq(dom.div(dom.mul(a, b), a), b)


@pytest.mark.parametrize("dom", FIELDS, ids=repr)
def test_zero_has_no_inverse(dom):
    with pytest.raises(ZeroDivisionError):
        dom.inv(dom.zero)


@given(st.integers(min_value=0, max_value=(1 << 63) - 1))
def test_frobenius_is_additive_in_char_two(a):
    F = BinaryField(63)
    b = 0x5DEECE66D
    lhs = F.mul(F.add(a, b), F.add(a, b))
    assert lhs == F.add(F.mul(a, a), F.mul(b, b))


def test_default_fields():
    assert default_field(0).p == 2**61 - 1
    assert default_field(2).size == 2**63
    assert default_field(5) == PrimeField(5)


@pytest.mark.parametrize("n, expected", [(2, True), (9, False), (101, True), (2**61 - 1, True), (2**61 + 1, False)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("m", [2, 3, 5, 8, 13])
def test_binary_modulus_is_irreducible(m):
    F = BinaryField(m)
    assert gf2_poly_is_irreducible(F.modulus)


def test_make_field_rejects_odd_extensions():
    with pytest.raises(DomainError):
        make_field(3, 2)
    with pytest.raises(DomainError):
        PrimeField(12)


def test_field_descriptor_validation():
    assert FieldDescriptor(2, 8).base_field() == BinaryField(8)
    assert isinstance(FieldDescriptor(7, 1, ("x", "y")).domain(), RationalFunctionField)
    with pytest.raises(DomainError):
        FieldDescriptor(0, 1, ("x",))
    with pytest.raises(DomainError):
        FieldDescriptor(7, 1, ("x", "x"))


# ---------------------------------------------------------------- polynomials
R = PolyRing(PrimeField(101), ["x", "y", "z"])
x, y, z = R.gens()

small_polys = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(1, 100)), max_size=5
).map(lambda ts: sum((R.const(c) * x ** e[0] * y ** e[1] * z ** e[2] for e, c in ts), R.zero()))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert poly_arith(a, b, "mul") == b * a


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_product_rule(a, b):
    assert (a * b).derivative("x") == a.derivative("x") * b + a * b.derivative("x")


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


def test_char_p_derivative_kills_pth_powers():
    S = PolyRing(PrimeField(2), ["t"])
    t = S.var("t")
    assert (t * t).derivative("t").is_zero()


def test_poly_arith_rejects_mixed_rings():
    other = PolyRing(PrimeField(101), ["x", "w"]).var("x")
    with pytest.raises(DomainError):
        poly_arith(x, other, "add")


def test_ratfunc_equality_by_cross_multiplication():
    K = RationalFunctionField(PrimeField(101), ["x", "y"])
    a = K.div(K.var("x"), K.var("y"))
    b = K.div(K.mul(K.var("x"), K.add(K.var("x"), K.one)), K.mul(K.var("y"), K.add(K.var("x"), K.one)))
    assert K.eq(a, b)
    with pytest.raises(TypeError):
        hash(a)


def test_quotient_rule_on_ratfunc():
    K = RationalFunctionField(PrimeField(101), ["x"])
    f = K.div(K.one, K.var("x"))
    xv = K.var("x")
    assert K.eq(f.derivative("x"), K.neg(K.div(K.one, K.mul(xv, xv))))


def test_specialize_redraws_on_vanishing_denominator():
    S = PolyRing(PrimeField(2), ["t"])
    t = S.var("t")
    f = RatFunc(S.one(), t * (t + S.one()))
    # every GF(2) point kills the denominator
    with pytest.raises(UnluckySpecialization):
        specialize(f, seed=3)
    assert specialize(RatFunc(t), {"t": 1}) == 1


def test_directional_derivative_matches_partials():
    S = PolyRing(PrimeField(101), ["a0", "a1", "b0", "b1"])
    a0, a1, b0, b1 = S.gens()
    f = a0 * b1 - a1 * b0
    # vary column a along column b: the determinant derivative is det(b, b) = 0
    d = directional_derivative(f, [(["a0", "a1"], [["b0", "b1"]])])
    assert d.is_zero()
    d = directional_derivative(f, [(["a0", "a1"], [["a0", "a1"]])])
    assert d == RatFunc(f)
    with pytest.raises(DomainError):
        directional_derivative(f, [(["a0", "a1"], [["b0"]])])


def test_jet_ring_reads_mixed_derivative():
    F = PrimeField(101)
    J = JetRing(F, 2)
    # f(u, v) = u^2 v at (3, 5): d^2 f / du dv = 2u = 6
    u = J.var(3, 0, 1)
    v = J.var(5, 1, 1)
    assert J.top(J.mul(J.mul(u, u), v)) == 6
    w = J.var(4, 0, 1)
    assert J.eq(J.mul(w, J.inv(w)), J.one)


# ---------------------------------------------------------------- linear algebra
F7 = PrimeField(7)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_bareiss_matches_cofactor(M):
    assert linalg.det(F7, M) == linalg.det_cofactor(F7, M)


@given(matrices)
def test_rank_nullity(M):
    n = len(M[0])
    K = linalg.kernel(F7, M, n)
    assert linalg.rank(F7, M) + len(K) == n
    for v in K:
        assert all(x == 0 for x in linalg.matvec(F7, M, v))


@given(matrices, st.lists(st.integers(0, 6), min_size=4, max_size=4))
def test_solve_when_consistent(M, b):
    b = b[: len(M)]
    sol = linalg.solve(F7, M, b)
    if sol is not None:
        assert linalg.matvec(F7, M, sol) == b


def test_inverse_roundtrip():
    rng = random.Random(1)
    F = default_field(0)
    M = [[F.random(rng) for _ in range(4)] for _ in range(4)]
    inv = linalg.inverse(F, M)
    assert linalg.matmul(F, M, inv) == linalg.identity(F, 4)


def test_symbolic_determinant_is_exact():
    K = RationalFunctionField(PrimeField(101), ["a", "b", "c", "d"])
    a, b, c, d = (K.var(s) for s in "abcd")
    det = linalg.det(K, [[a, b], [c, d]])
    assert K.eq(det, K.sub(K.mul(a, d), K.mul(b, c)))
    assert linalg.rank(K, [[a, b], [K.mul(a, c), K.mul(b, c)]]) == 1
