"""Polynomial operations, formal derivatives and specialization."""

from __future__ import annotations

import random

from .fields import DomainError, UnluckySpecialization
from .poly import MultiPoly, RatFunc

MAX_REDRAWS = 16


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if a.ring != b.ring:
        raise DomainError("polynomials over different rings or indeterminate lists")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def partial_derivative(p, var: str):
    return p.derivative(var)


def _as_ratfunc(f):
    return f if isinstance(f, RatFunc) else RatFunc(f)


def directional_derivative(f, moves):
    """Apply, in order, one first-order derivative per move.

    Each move is (varied, directions): `varied` is the list of symbol names of
    one matrix column, `directions` a list of equally long symbol-name lists.
    The move differentiates the varied column along the sum of the direction
    columns, evaluated at the current point:

        D f = sum_r (sum_dir dir[r]) * df/d varied[r]
    """
    f = _as_ratfunc(f)
    ring = f.ring
    seen = set()
    for varied, directions in moves:
        key = tuple(varied)
        if key in seen:
            raise DomainError(f"column {key} varied twice")
        seen.add(key)
        for name in varied:
            if name not in ring.index:
                raise DomainError(f"unknown indeterminate {name!r}")
        for dcol in directions:
            if len(dcol) != len(varied):
                raise DomainError("direction column has the wrong length")
            for name in dcol:
                if name not in ring.index:
                    raise DomainError(f"unknown indeterminate {name!r}")
        total = RatFunc(ring.zero())
        for r, name in enumerate(varied):
            coeff = ring.zero()
            for dcol in directions:
                coeff = coeff + ring.var(dcol[r])
            if coeff.is_zero():
                continue
            total = total + RatFunc(coeff) * f.derivative(name)
        f = total
    return f


def specialize(p, assignment=None, seed: int = 0, domain=None):
    """Evaluate p exactly.

    Symbols missing from `assignment` are drawn uniformly from `domain`
    (default: the coefficient field) with random.Random(seed).  A vanishing
    denominator triggers a redraw of the random symbols, up to MAX_REDRAWS
    times; explicitly assigned values are never redrawn.
    """
    ring = p.ring if isinstance(p, (MultiPoly, RatFunc)) else None
    if ring is None:
        raise DomainError("specialize expects a MultiPoly or RatFunc")
    dom = domain or ring.base
    assignment = dict(assignment or {})
    unknown = set(assignment) - set(ring.names)
    if unknown:
        raise DomainError(f"assignment names unknown symbols {sorted(unknown)}")
    missing = [n for n in ring.names if n not in assignment]
    rng = random.Random(seed)
    for _ in range(MAX_REDRAWS):
        values = [assignment[n] if n in assignment else dom.random(rng) for n in ring.names]
        try:
            return p.evaluate(values, dom)
        except UnluckySpecialization:
            if not missing:
                break
    raise UnluckySpecialization("denominator vanished after redraws", seed=seed)
