"""Coordinate matrices V: column v holds the coefficients of x_v in θ_1..θ_d."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..arith import linalg
from ..arith.fields import DomainError, JetRing, PrimeField
from ..arith.poly import RationalFunctionField
from ..errors import DegenerateCoordinates


def symbol(r: int, c: int, prefix: str = "V") -> str:
    return f"{prefix}{r}_{c}"


def reference_symbol(r: int, prefix: str = "W") -> str:
    return f"{prefix}{r}"


@dataclass
class CoordMatrix:
    """d x n matrix over `domain` plus one general-position reference column.

    `columns[c][r]` is entry (r, c).  `reference` is the extra column used for
    volume elements in Lee's formula.
    """

    domain: object
    columns: list
    mode: str = "numeric"
    seed: int | None = None
    params: list | None = None
    reference: list | None = None
    prefix: str = "V"
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.columns:
            raise DomainError("coordinate matrix without columns")
        d = len(self.columns[0])
        if any(len(c) != d for c in self.columns):
            raise DomainError("ragged coordinate matrix")
        for j, col in enumerate(self.columns):
            if all(self.domain.is_zero(x) for x in col):
                raise DegenerateCoordinates(f"column {j} is zero: not a linear system of parameters")

    @property
    def d(self):
        return len(self.columns[0])

    @property
    def n(self):
        return len(self.columns)

    def column(self, c):
        return self.columns[c]

    def rows(self):
        return [[self.columns[c][r] for c in range(self.n)] for r in range(self.d)]

    def submatrix(self, face):
        """d x |face| matrix of the chosen columns (rows are coordinates)."""
        return [[self.columns[c][r] for c in face] for r in range(self.d)]

    def minor(self, face):
        if len(face) != self.d:
            raise DomainError("minor needs exactly d columns")
        return linalg.det(self.domain, self.submatrix(face))

    def volume_element(self, face, i):
        """[F - i]: det of V_F with the column of vertex i replaced by the reference."""
        if self.reference is None:
            raise DomainError("no reference column")
        cols = [self.reference if c == i else self.columns[c] for c in face]
        return linalg.det(self.domain, [[col[r] for col in cols] for r in range(self.d)])

    def column_symbols(self, c):
        if self.mode != "symbolic":
            raise DomainError("column symbols exist only in symbolic mode")
        return [symbol(r, c, self.prefix) for r in range(self.d)]

    def describe(self):
        out = {"mode": self.mode, "d": self.d, "n": self.n, "field": self.domain.describe()}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.params is not None:
            out["params"] = [str(p) for p in self.params]
        return out


def generic(d: int, n: int, domain, seed: int = 0) -> CoordMatrix:
    rng = random.Random(seed)
    draw = getattr(domain, "random_nonzero", domain.random)
    cols = [[draw(rng) for _ in range(d)] for _ in range(n)]
    ref = [draw(rng) for _ in range(d)]
    return CoordMatrix(domain, cols, mode="random", seed=seed, reference=ref)


def symbolic(d: int, n: int, base: PrimeField, prefix: str = "V", extra_names=()) -> CoordMatrix:
    """Every entry its own indeterminate V{r}_{c}; reference column W{r}."""
    names = [symbol(r, c, prefix) for c in range(n) for r in range(d)]
    names += [reference_symbol(r) for r in range(d)]
    names += list(extra_names)
    K = RationalFunctionField(base, names)
    cols = [[K.var(symbol(r, c, prefix)) for r in range(d)] for c in range(n)]
    ref = [K.var(reference_symbol(r)) for r in range(d)]
    return CoordMatrix(K, cols, mode="symbolic", reference=ref, prefix=prefix)


def moment_curve(params, d: int, domain, seed: int = 0) -> CoordMatrix:
    """Column for parameter t is (t, t^2, ..., t^d)."""
    vals = [domain.from_int(int(t)) if isinstance(t, int) else t for t in params]
    for i in range(len(vals)):
        for j in range(i):
            if domain.eq(vals[i], vals[j]):
                raise DomainError("moment-curve parameters must be distinct")
    cols = []
    for t in vals:
        col, p = [], domain.one
        for _ in range(d):
            p = domain.mul(p, t)
            col.append(p)
        cols.append(col)
    rng = random.Random(seed)
    ref = [domain.random(rng) for _ in range(d)]
    return CoordMatrix(domain, cols, mode="moment-curve", params=list(params), seed=seed, reference=ref)


def explicit(matrix_rows, domain, reference=None, seed: int = 0) -> CoordMatrix:
    """From a d x n list of rows."""
    d = len(matrix_rows)
    n = len(matrix_rows[0])
    conv = [[domain.from_int(x) if isinstance(x, int) else x for x in row] for row in matrix_rows]
    cols = [[conv[r][c] for r in range(d)] for c in range(n)]
    if reference is None:
        rng = random.Random(seed)
        reference = [domain.random(rng) for _ in range(d)]
    return CoordMatrix(domain, cols, mode="numeric", reference=list(reference), seed=seed)


def point_values(coords: CoordMatrix, domain, seed: int):
    """Random values for every indeterminate of a symbolic CoordMatrix."""
    rng = random.Random(seed)
    draw = getattr(domain, "random_nonzero", domain.random)
    return [draw(rng) for _ in coords.domain.names]


def specialize_coords(coords: CoordMatrix, values, domain) -> CoordMatrix:
    """Evaluate a symbolic CoordMatrix at a point (values indexed like the ring names)."""
    if coords.mode != "symbolic":
        raise DomainError("only symbolic coordinates can be specialized")
    cols = [[a.evaluate(values, domain) for a in col] for col in coords.columns]
    ref = [a.evaluate(values, domain) for a in coords.reference]
    return CoordMatrix(domain, cols, mode="specialized", reference=ref, info={"from": "symbolic"})


def jet_coords(coords: CoordMatrix, values, base, moves) -> CoordMatrix:
    """Evaluate at V0 + sum_j e_j W_j over a jet ring.

    `moves` is a list of (varied column index, [direction column indices]);
    W_j moves the varied column along the sum of the direction columns at V0.
    """
    J = JetRing(base, len(moves))
    point = specialize_coords(coords, values, base)
    cols = [[J.const(x) for x in col] for col in point.columns]
    for j, (varied, dirs) in enumerate(moves):
        for r in range(point.d):
            delta = base.zero
            for dcol in dirs:
                delta = base.add(delta, point.columns[dcol][r])
            cols[varied][r] = J.add(cols[varied][r], J.var(base.zero, j, delta))
    ref = [J.const(x) for x in point.reference]
    return CoordMatrix(J, cols, mode="jet", reference=ref, info={"moves": moves})
