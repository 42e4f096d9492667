"""Exact verification of the differential identities for degree maps.

All functions work with symbolic coordinates (every entry of V an
indeterminate) so both sides of each identity are rational functions in V
and are compared by cross-multiplication.  For complexes where the symbolic
rewrite is too large, `square_derivative_at_points` evaluates both sides at
random points, using jets for the derivatives.
"""

from __future__ import annotations

import random
from types import SimpleNamespace

from ..algebra.artinian import ArtinianAlgebra
from ..algebra.coords import CoordMatrix, jet_coords, point_values, specialize_coords, symbol, symbolic
from ..algebra.degree import degree_functional, lee_square_degree
from ..algebra.gorenstein import gorensteinify
from ..arith.calculus import directional_derivative
from ..arith.fields import DomainError, UnluckySpecialization, default_field
from ..arith.poly import RatFunc
from ..simplicial.homology import Chain
from . import bounds
from .certificate import FAIL, PASS, REPORT, Certificate, algebra_fingerprint, timed


def derivative_moves(coords: CoordMatrix, sigma, tau):
    """Moves of ∂_B: column σ_j varies along V_{τ_j} + V_{σ_j}.

    σ and τ are paired in increasing vertex order; this is the fixed column
    order recorded in every certificate.
    """
    sigma, tau = sorted(sigma), sorted(tau)
    if len(sigma) != len(tau):
        raise DomainError("σ and τ must have the same cardinality")
    return [(coords.column_symbols(s), [coords.column_symbols(t), coords.column_symbols(s)]) for s, t in zip(sigma, tau)]


def _require_symbolic(alg):
    if alg.coords.mode != "symbolic":
        raise DomainError("this identity is verified over symbolic coordinates")


def _pair_faces(sigma, tau):
    return tuple(sorted(tuple(sigma) + tuple(tau)))


def degree_of_product(phi, a: dict, b: dict):
    """deg(a * b) for a, b given as {face: coefficient} of squarefree monomials."""
    dom = phi.algebra.dom
    acc = dom.zero
    for r, ca in a.items():
        if dom.is_zero(ca):
            continue
        for s, cb in b.items():
            if dom.is_zero(cb):
                continue
            val = phi.of_monomial(_pair_faces(r, s))
            if not dom.is_zero(val):
                acc = dom.add(acc, dom.mul(dom.mul(ca, cb), val))
    return acc


def partial_operator(phi, sigma, tau, f):
    """∂_σ^τ f = deg(x_σ x_τ) * ∂_B f."""
    alg = phi.algebra
    moves = derivative_moves(alg.coords, sigma, tau)
    return alg.dom.mul(phi.of_monomial(_pair_faces(sigma, tau)), directional_derivative(f, moves))


def lemma_sign(dom, k):
    """(-1)^k: the square-derivative identity carries this sign outside
    characteristic 2."""
    return dom.one if k % 2 == 0 else dom.neg(dom.one)


def _check_pair(alg, sigma, tau):
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    if 2 * len(sigma) != alg.d or len(sigma) != len(tau):
        raise DomainError("need |σ| = |τ| = d/2")
    if set(sigma) & set(tau):
        raise DomainError("σ and τ must be disjoint")
    if not alg.complex.is_face(_pair_faces(sigma, tau)):
        raise DomainError("σ ∪ τ is not a face")
    return sigma, tau


def spot_field(base):
    """Where random specializations are drawn: GF(2^63) over GF(2), the
    coefficient field itself otherwise."""
    return default_field(2) if base.characteristic == 2 else base


def _spot_checks(alg, exprs, points, seed):
    """Evaluate pairs of rational functions at `points` random points;
    returns how many points had all pairs agreeing.  Points where a
    denominator vanishes are redrawn."""
    dom = alg.dom
    field_ = spot_field(dom.base)
    draw = getattr(field_, "random_nonzero", field_.random)
    rng = random.Random(seed)
    agreed = tried = 0
    for _ in range(8 * points):
        if tried == points:
            break
        vals = [draw(rng) for _ in dom.names]
        try:
            ok = all(field_.eq(a.evaluate(vals, field_), b.evaluate(vals, field_)) for a, b in exprs)
        except (ZeroDivisionError, UnluckySpecialization):
            continue
        tried += 1
        agreed += bool(ok)
    return agreed


# ------------------------------------------------------- square derivative
def verify_square_derivative_lemma(alg: ArtinianAlgebra, mu: Chain, sigma, tau, points: int = 3, seed: int = 0) -> Certificate:
    """∂_σ^τ deg(x_τ^2) = (-1)^k deg(x_τ x_σ)^2, exactly over symbolic V.

    The left side differentiates Lee's facet formula for deg(x_τ^2); the
    right side multiplies and rewrites in the algebra.  The sign is
    invisible in characteristic 2.
    """
    _require_symbolic(alg)
    sigma, tau = _check_pair(alg, sigma, tau)
    with timed() as t:
        dom = alg.dom
        phi = degree_functional(alg, mu)
        lee = lee_square_degree(alg, mu, tau)
        lhs = partial_operator(phi, sigma, tau, lee)
        c = phi.of_monomial(_pair_faces(sigma, tau))
        rhs = dom.mul(lemma_sign(dom, len(sigma)), dom.mul(c, c))
        exact = dom.eq(lhs, rhs)
        witness = {
            "sigma": list(alg.complex.labels(sigma)),
            "tau": list(alg.complex.labels(tau)),
            "column_order": [[alg.complex.vertices[s], alg.complex.vertices[u]] for s, u in zip(sigma, tau)],
            "exact_equal": exact,
            "sign": 1 if dom.characteristic == 2 or len(sigma) % 2 == 0 else -1,
            "deg_sigma_tau_zero": dom.is_zero(c),
            "lhs_complexity": dom.complexity(lhs),
        }
        if points:
            witness["specializations_agreeing"] = _spot_checks(alg, [(lhs, rhs)], points, seed)
    fp = algebra_fingerprint(alg, seed, {"sigma": witness["sigma"], "tau": witness["tau"]})
    return Certificate("square_derivative_lemma", PASS if exact else FAIL, witness, fp, 0, seed, t["ms"])


def square_derivative_at_points(complex_, mu: Chain, coords: CoordMatrix, sigma, tau, base, points: int = 3, seed: int = 0) -> Certificate:
    """The same identity at random points of `base`: the derivative of Lee's
    formula is read off a jet evaluation, deg(x_σ x_τ) comes from the
    numeric algebra at the point."""
    if coords.mode != "symbolic":
        raise DomainError("point checks start from symbolic coordinates")
    rng = random.Random(seed)
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    moves = [(s, [u, s]) for s, u in zip(sigma, tau)]
    results = []
    with timed() as t:
        for i in range(points):
            vals = point_values(coords, base, rng.randrange(1 << 30))
            num = ArtinianAlgebra(complex_, specialize_coords(coords, vals, base))
            _check_pair(num, sigma, tau)
            phi = degree_functional(num, mu)
            c = phi.of_monomial(_pair_faces(sigma, tau))
            jc = jet_coords(coords, vals, base, moves)
            shell = SimpleNamespace(dom=jc.domain, d=jc.d, complex=complex_, coords=jc)
            lee = lee_square_degree(shell, mu, tau)
            lhs = base.mul(c, jc.domain.top(lee))
            rhs = base.mul(lemma_sign(base, len(sigma)), base.mul(c, c))
            results.append({"equal": base.eq(lhs, rhs), "deg_sigma_tau_zero": base.is_zero(c)})
        ok = all(r["equal"] for r in results)
    # every point check is one polynomial identity test in V
    shell = SimpleNamespace(d=coords.d, complex=complex_)
    D = bounds.degree_value_bound(shell) * 3
    witness = {
        "sigma": list(complex_.labels(sigma)),
        "tau": list(complex_.labels(tau)),
        "points": results,
        "mode": "jet evaluation at random points",
    }
    fp = {"complex": complex_.fingerprint(), "field": base.describe(), "coordinate_mode": "symbolic@points", "seed": seed}
    return Certificate("square_derivative_lemma", PASS if ok else FAIL, witness, fp, bounds.probability(D, base) ** points, seed, t["ms"])


# ------------------------------------------------------------ pp identity
def normalization(g, sigma, u: dict):
    """τ in lk σ with deg(x_σ x_τ) != 0 and the scalar c with
    x_σ u = c x_σ x_τ in B, or None when x_σ annihilates B^k."""
    alg = g.algebra
    phi = g.functionals[0]
    dom = alg.dom
    k = len(sigma)
    link = [f for f in alg.complex.faces(k) if not set(f) & set(sigma) and alg.complex.is_face(_pair_faces(sigma, f))]
    for tau in link:
        c = phi.of_monomial(_pair_faces(sigma, tau))
        if not dom.is_zero(c):
            val = degree_of_product(phi, {sigma: dom.one}, u)
            return tau, dom.div(val, c)
    return None


def verify_pp_identity(g, sigma, u: dict, points: int = 3, seed: int = 0) -> Certificate:
    """∂_σ^τ deg(u^2) = deg(x_σ u)^2 in characteristic 2 over GF(2)(V).

    `u` is {face: coefficient} of degree k = d/2; τ comes from the
    normalization of u with respect to σ and every admissible τ is tried.
    """
    alg = g.algebra
    _require_symbolic(alg)
    dom = alg.dom
    if dom.characteristic != 2:
        raise DomainError("the pp identity is a characteristic 2 statement")
    sigma = tuple(sorted(sigma))
    k = len(sigma)
    if 2 * k != alg.d or any(len(f) != k for f in u):
        raise DomainError("need |σ| = deg u = d/2")
    with timed() as t:
        phi = g.functionals[0]
        norm = normalization(g, sigma, u)
        witness = {"sigma": list(alg.complex.labels(sigma)), "u": {",".join(map(str, alg.complex.labels(f))): dom.to_json(c) for f, c in u.items()}}
        if norm is None:
            witness["reason"] = "x_σ annihilates B^k, no normalization exists"
            verdict = REPORT
        else:
            witness["normalized_tau"] = list(alg.complex.labels(norm[0]))
            witness["normalized_coefficient"] = dom.to_json(norm[1])
            sq = degree_of_product(phi, u, u)
            xu = degree_of_product(phi, {sigma: dom.one}, u)
            rhs = dom.mul(xu, xu)
            checked, exprs = [], []
            for tau in alg.complex.faces(k):
                if set(tau) & set(sigma) or not alg.complex.is_face(_pair_faces(sigma, tau)):
                    continue
                if dom.is_zero(phi.of_monomial(_pair_faces(sigma, tau))):
                    continue
                lhs = partial_operator(phi, sigma, tau, sq)
                checked.append({"tau": list(alg.complex.labels(tau)), "equal": dom.eq(lhs, rhs)})
                exprs.append((lhs, rhs))
            witness["taus"] = checked
            witness["rhs_zero"] = dom.is_zero(rhs)
            if points:
                witness["specializations_agreeing"] = _spot_checks(alg, exprs, points, seed)
            verdict = PASS if checked and all(c["equal"] for c in checked) else FAIL
    fp = algebra_fingerprint(alg, seed, {"sigma": witness["sigma"]})
    return Certificate("pp_identity", verdict, witness, fp, 0, seed, t["ms"])


# ----------------------------------------------------- compatible formula
def copy_names(coords: CoordMatrix, prefix: str = "U"):
    """Names of the primed copy V' of every coordinate symbol."""
    return [n.replace(coords.prefix, prefix, 1) for c in range(coords.n) for n in coords.column_symbols(c)]


def symbolic_with_copy(d: int, n: int, base, prefix: str = "U") -> CoordMatrix:
    """Symbolic coordinates whose field also contains the copy V'."""
    names = [symbol(r, c, prefix) for c in range(n) for r in range(d)]
    return symbolic(d, n, base, extra_names=names)


def _prime_map(coords: CoordMatrix, prefix: str = "U"):
    names = [n for c in range(coords.n) for n in coords.column_symbols(c)]
    return dict(zip(names, copy_names(coords, prefix)))


def _as_ratfunc(x):
    return x if isinstance(x, RatFunc) else RatFunc(x)


def _rename(dom, x, mapping):
    return _as_ratfunc(x).substitute(mapping, dom.ring)


def compatibility(alg, sigma, u: dict):
    """Check the two compatibility clauses; returns (ok, clause or None, τ)."""
    dom = alg.dom
    c = alg.complex
    sigma = tuple(sorted(sigma))
    in_star = [f for f in u if not dom.is_zero(u[f]) and c.is_face(tuple(sorted(set(f) | set(sigma))))]
    if len(in_star) != 1:
        return False, f"the star of σ meets the support of u in {len(in_star)} faces", None
    tau = in_star[0]
    if not dom.eq(u[tau], dom.one):
        return False, "the coefficient at τ(u,σ) is not 1", tau
    for other, coeff in u.items():
        if other == tau or dom.is_zero(coeff):
            continue
        star_vertices = {v for f in c.faces() if c.is_face(tuple(sorted(set(f) | set(other)))) for v in f}
        far = [s for s in sigma if s not in star_vertices]
        for s in far:
            j = sigma.index(s)
            move = [(alg.coords.column_symbols(s), [alg.coords.column_symbols(sorted(tau)[j]), alg.coords.column_symbols(s)])]
            if not directional_derivative(coeff, move).is_zero():
                return False, f"the coefficient at {list(c.labels(other))} depends on the column of vertex {c.vertices[s]}", tau
    return True, None, tau


def verify_compatible_formula(alg: ArtinianAlgebra, mu: Chain, sigma, u: dict, prefix: str = "U", points: int = 2, seed: int = 0) -> Certificate:
    """∂_σ^τ deg(u u') = deg((∂_σ^τ u) u') + deg(x_τ x_σ)^2, where
    u' renames V to the copy V' in the coefficients of u and ∂ acts on V
    only; then the identity after substituting V' -> V.

    The coordinate field must contain the copy symbols (see `copy_names`).
    """
    _require_symbolic(alg)
    dom = alg.dom
    sigma = tuple(sorted(sigma))
    pmap = _prime_map(alg.coords, prefix)
    if any(n not in dom.ring.index for n in pmap.values()):
        raise DomainError("the coordinate field has no copy V' of the coordinate symbols")
    ok, clause, tau = compatibility(alg, sigma, u)
    with timed() as t:
        witness = {"sigma": list(alg.complex.labels(sigma)), "compatible": ok}
        if not ok:
            witness["violated_clause"] = clause
            verdict = REPORT
        else:
            phi = degree_functional(alg, mu)
            witness["tau"] = list(alg.complex.labels(tau))
            u_prime = {f: _rename(dom, x, pmap) for f, x in u.items()}
            moves = derivative_moves(alg.coords, sigma, tau)
            c = phi.of_monomial(_pair_faces(sigma, tau))
            du = {f: dom.mul(c, directional_derivative(x, moves)) for f, x in u.items()}
            lhs = partial_operator(phi, sigma, tau, degree_of_product(phi, u, u_prime))
            sq = dom.mul(lemma_sign(dom, len(sigma)), dom.mul(c, c))
            rhs = dom.add(degree_of_product(phi, du, u_prime), sq)
            eq1 = dom.eq(lhs, rhs)
            back = {v: k for k, v in pmap.items()}
            lhs_sub = dom.sub(_rename(dom, lhs, back), degree_of_product(phi, du, u))
            cor = dom.eq(lhs_sub, sq)
            same_support = sorted(u_prime) == sorted(u) and sorted(du) == sorted(u)
            witness.update({"equation": eq1, "substituted": cor, "support_preserved": same_support, "du_zero": all(dom.is_zero(x) for x in du.values())})
            if points:
                witness["specializations_agreeing"] = _spot_checks(alg, [(lhs, rhs), (lhs_sub, sq)], points, seed)
            verdict = PASS if eq1 and cor and same_support else FAIL
    fp = algebra_fingerprint(alg, seed, {"sigma": witness["sigma"]})
    return Certificate("compatible_formula", verdict, witness, fp, 0, seed, t["ms"])


# --------------------------------------------------------------- locality
def verify_locality(alg: ArtinianAlgebra, mu: Chain, sigma, tau, vertex, seed: int = 0) -> Certificate:
    """deg(x_τ x_σ) does not depend on the column of a vertex outside the
    star of τ ∪ σ: every partial derivative in that column vanishes."""
    _require_symbolic(alg)
    c = alg.complex
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    union = tuple(sorted(set(sigma) | set(tau)))
    if not c.is_face(union):
        raise DomainError("τ ∪ σ is not a face")
    star_vertices = {v for f in c.faces() if c.is_face(tuple(sorted(set(f) | set(union)))) for v in f}
    if vertex in star_vertices:
        raise DomainError("the vertex lies in the star of τ ∪ σ")
    with timed() as t:
        phi = degree_functional(alg, mu)
        val = _as_ratfunc(phi.of_monomial(_pair_faces(sigma, tau)))
        derivs = [val.derivative(n) for n in alg.coords.column_symbols(vertex)]
        ok = all(d.is_zero() for d in derivs)
        witness = {
            "sigma": list(c.labels(sigma)),
            "tau": list(c.labels(tau)),
            "vertex": c.vertices[vertex],
            "degree_zero": val.is_zero(),
            "vanishing_partials": sum(d.is_zero() for d in derivs),
        }
    fp = algebra_fingerprint(alg, seed, {"vertex": witness["vertex"]})
    return Certificate("locality", PASS if ok else FAIL, witness, fp, 0, seed, t["ms"])


# --------------------------------------------- Lee's formula, two oracles
def lee_agreement(alg: ArtinianAlgebra, mu: Chain, tau, points: int = 3, seed: int = 0) -> dict:
    """Lee's facet formula against multiply-then-evaluate for deg(x_τ^2)."""
    dom = alg.dom
    phi = degree_functional(alg, mu)
    lee = lee_square_degree(alg, mu, tau)
    direct = phi.of_monomial(tuple(sorted(tuple(tau) * 2)))
    out = {"tau": list(alg.complex.labels(tuple(sorted(tau)))), "equal": dom.eq(lee, direct)}
    if alg.coords.mode == "symbolic" and points:
        out["specializations_agreeing"] = _spot_checks(alg, [(_as_ratfunc(lee), direct)], points, seed)
    return out


def lee_agreement_at_points(complex_, mu: Chain, coords: CoordMatrix, tau, base, points: int = 3, seed: int = 0) -> dict:
    """The same comparison at random points of `base` (numeric algebras)."""
    rng = random.Random(seed)
    equal = []
    for _ in range(points):
        vals = point_values(coords, base, rng.randrange(1 << 30))
        num = ArtinianAlgebra(complex_, specialize_coords(coords, vals, base))
        equal.append(lee_agreement(num, mu, tau, points=0)["equal"])
    shell = SimpleNamespace(d=coords.d, complex=complex_)
    return {
        "tau": list(complex_.labels(tuple(sorted(tau)))),
        "equal": all(equal),
        "points": len(equal),
        "error_probability_bound": bounds.probability(bounds.lee_identity_bound(shell, tau), base) ** points,
    }


def _star_vertices(c, face):
    return {v for f in c.faces() if c.is_face(tuple(sorted(set(f) | set(face)))) for v in f}


def identity_suite(complex_, mu: Chain, base, seed: int = 0):
    """Every identity on a complex with d = 2k, over symbolic coordinates
    with coefficients in `base`:

    * the square-derivative lemma for every admissible (σ, τ);
    * the pp identity for every σ with u = x_τ, τ in lk σ (characteristic 2);
    * the compatible formula for u = x_τ and, where some ρ lies outside
      st σ, for u = x_τ + c x_ρ with c a coordinate of a vertex of ρ;
    * locality for every (σ, τ, v) with v outside the star of σ ∪ τ, or one
      vacuous pass when no such vertex exists.
    """
    d = complex_.d
    if d % 2:
        raise DomainError("the identities need even d")
    k = d // 2
    c = complex_
    alg = ArtinianAlgebra(c, symbolic_with_copy(d, c.n, base))
    dom = alg.dom
    pairs = [(s, t) for s in c.faces(k) for t in c.faces(k) if not set(s) & set(t) and c.is_face(_pair_faces(s, t))]
    certs = [verify_square_derivative_lemma(alg, mu, s, t, seed=seed) for s, t in pairs]
    if dom.characteristic == 2:
        g = gorensteinify(alg, mu)
        certs += [verify_pp_identity(g, s, {t: dom.one}, seed=seed) for s, t in pairs]
    for s, t in pairs:
        certs.append(verify_compatible_formula(alg, mu, s, {t: dom.one}, seed=seed))
        star = _star_vertices(c, s)
        for rho in c.faces(k):
            if c.is_face(tuple(sorted(set(rho) | set(s)))):
                continue
            u = {t: dom.one, rho: dom.var(alg.coords.column_symbols(rho[0])[0])}
            if compatibility(alg, s, u)[0] and not set(rho) & star:
                certs.append(verify_compatible_formula(alg, mu, s, u, seed=seed))
                break
    local = []
    for s in c.faces(k):
        for t in c.faces(k):
            union = tuple(sorted(set(s) | set(t)))
            if not c.is_face(union):
                continue
            star = _star_vertices(c, union)
            local += [verify_locality(alg, mu, s, t, v, seed=seed) for v in range(c.n) if v not in star]
    if not local:
        local.append(
            Certificate(
                "locality",
                PASS,
                {"vacuous": True, "reason": "every vertex lies in the star of every admissible σ ∪ τ"},
                algebra_fingerprint(alg, seed),
                0,
                seed,
                0.0,
            )
        )
    return certs + local
