"""Face-count invariants, Cohen-Macaulayness and Macaulay's growth bound."""

from __future__ import annotations

from itertools import combinations
from math import comb

from ..arith.fields import DomainError
from .complex import SimplicialComplex, link
from .homology import betti_numbers


def fhg_vectors(c: SimplicialComplex):
    """(f, h, g) with f = (f_0..f_{d-1}), h = (h_0..h_d), g_k = h_k - h_{k-1} for k <= d/2."""
    f = c.f_vector()
    d = c.d
    fm = [1] + f  # fm[i] = f_{i-1}
    h = []
    for k in range(d + 1):
        h.append(sum((-1) ** (k - i) * comb(d - i, k - i) * fm[i] for i in range(k + 1)))
    g = [h[0]] + [h[k] - h[k - 1] for k in range(1, d // 2 + 1)]
    return f, h, g


def is_cohen_macaulay(c: SimplicialComplex, domain) -> bool:
    """Reisner: every link (including the complex itself) has vanishing reduced
    homology below its top dimension."""
    if c.is_void:
        return False
    if not c.is_pure():
        return False
    for face in c.faces():
        lk = link(c, c.labels(face)) if face else c
        top = c.dim - len(face)
        if lk.is_void:
            continue
        betti = betti_numbers(lk, domain, reduced=True)
        if any(b for k, b in betti.items() if k < top):
            return False
    return True


def cm_check(c: SimplicialComplex, domain, s: int = 2):
    """{is_cm, is_s_cm}: s-CM means CM of the same dimension after deleting any
    s-1 vertices (s = 2: every single-vertex deletion)."""
    if s < 1:
        raise DomainError("s must be >= 1")
    is_cm = is_cohen_macaulay(c, domain)
    if not is_cm:
        return {"is_cm": False, "is_s_cm": False}
    ok = True
    for removed in combinations(c.vertices, s - 1):
        if not removed:
            continue
        sub = c.deletion(removed)
        if sub.is_void or sub.dim != c.dim or not is_cohen_macaulay(sub, domain):
            ok = False
            break
    return {"is_cm": True, "is_s_cm": ok}


def macaulay_representation(a: int, k: int):
    """a = C(n_k, k) + C(n_{k-1}, k-1) + ... with n_k > n_{k-1} > ... >= j >= 1."""
    rep = []
    while a > 0 and k > 0:
        n = k
        while comb(n + 1, k) <= a:
            n += 1
        rep.append((n, k))
        a -= comb(n, k)
        k -= 1
    return rep


def macaulay_bound(a: int, k: int) -> int:
    """a^<k>: the largest possible value of the next entry of an M-vector."""
    if a == 0:
        return 0
    return sum(comb(n + 1, j + 1) for n, j in macaulay_representation(a, k))


def is_m_vector(v) -> bool:
    v = list(v)
    if not v or v[0] != 1 or any(x < 0 for x in v):
        return False
    return all(v[k + 1] <= macaulay_bound(v[k], k) for k in range(1, len(v) - 1))
