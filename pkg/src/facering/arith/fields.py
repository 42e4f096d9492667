"""Coefficient domains.

Every domain exposes the same small surface so the linear algebra and the
face-ring code can run unchanged over GF(p), GF(2^m), rational function
fields and truncated jet rings:

    zero, one, characteristic, size
    add, sub, neg, mul, inv, div, is_zero, is_unit, eq
    from_int, random(rng), to_json(a)

Elements of the finite fields are plain Python ints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class DomainError(ValueError):
    """Raised on operations outside an operation's domain (mismatched rings,
    unknown symbols, bad shapes)."""


class UnluckySpecialization(ArithmeticError):
    """A random specialization hit a vanishing denominator or pivot."""

    def __init__(self, message: str, seed=None):
        super().__init__(message)
        self.seed = seed


MERSENNE_61 = (1 << 61) - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, which covers every field used here."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    r, s = n - 1, 0
    while r % 2 == 0:
        r //= 2
        s += 1
    for a in small:
        x = pow(a, r, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p) with elements stored as ints in [0, p)."""

    zero = 0
    one = 1
    extension_degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.size = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    is_unit = lambda self, a: a % self.p != 0  # noqa: E731

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def random_nonzero(self, rng: random.Random):
        return rng.randrange(1, self.p)

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def to_json(self, a):
        return int(a)

    def describe(self):
        return {"characteristic": self.p, "extension_degree": 1, "indeterminates": []}


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def _gf2_poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _gf2_poly_divmod(a: int, b: int):
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def gf2_poly_is_irreducible(m: int) -> bool:
    """Rabin's test for a GF(2)[x] polynomial given as a bit mask."""
    n = m.bit_length() - 1
    if n < 1:
        return False

    def pow_x_2k(k):
        # x^(2^k) mod m
        r = 2
        for _ in range(k):
            r = _gf2_poly_mod(_clmul(r, r), m)
        return r

    def gcd(a, b):
        while b:
            a, b = b, _gf2_poly_divmod(a, b)[1]
        return a

    primes = [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]
    for q in primes:
        h = pow_x_2k(n // q) ^ 2
        if gcd(m, _gf2_poly_mod(h, m)) != 1:
            return False
    return pow_x_2k(n) == _gf2_poly_mod(2, m)


# x^63 + x + 1
GF2_63_MODULUS = (1 << 63) | 0b11


class BinaryField:
    """GF(2^m) as GF(2)[x]/(modulus); elements are ints below 2^m."""

    zero = 0
    one = 1
    characteristic = 2

    def __init__(self, m: int, modulus: int | None = None):
        if modulus is None:
            if m != 63:
                modulus = find_irreducible(m)
            else:
                modulus = GF2_63_MODULUS
        if modulus.bit_length() - 1 != m:
            raise DomainError("modulus degree does not match extension degree")
        self.m = m
        self.modulus = modulus
        self.extension_degree = m
        self.size = 1 << m

    def __repr__(self):
        return f"GF(2^{self.m})"

    def __eq__(self, other):
        return isinstance(other, BinaryField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF2m", self.modulus))

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        if not a or not b:
            return 0
        return _gf2_poly_mod(_clmul(a, b), self.modulus)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        # extended Euclid in GF(2)[x]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1:
            q, r = _gf2_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 ^ _clmul(q, s1)
        return _gf2_poly_mod(s0, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def eq(self, a, b):
        return a == b

    def from_int(self, n: int):
        return n & 1

    def random(self, rng: random.Random):
        return rng.getrandbits(self.m)

    def random_nonzero(self, rng: random.Random):
        while True:
            a = rng.getrandbits(self.m)
            if a:
                return a

    def pow(self, a, e: int):
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def to_json(self, a):
        return hex(a)

    def describe(self):
        return {"characteristic": 2, "extension_degree": self.m, "indeterminates": []}


def find_irreducible(m: int) -> int:
    """Lexicographically first irreducible of degree m (trinomials, then pentanomials)."""
    top = 1 << m
    for k in range(1, m):
        cand = top | (1 << k) | 1
        if gf2_poly_is_irreducible(cand):
            return cand
    for a in range(1, m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                cand = top | (1 << c) | (1 << b) | (1 << a) | 1
                if gf2_poly_is_irreducible(cand):
                    return cand
    raise DomainError(f"no irreducible found for degree {m}")


def make_field(characteristic: int, extension_degree: int = 1):
    """Finite field from a (characteristic, extension degree) pair."""
    if extension_degree < 1:
        raise DomainError("extension_degree must be >= 1")
    if extension_degree == 1:
        return PrimeField(characteristic)
    if characteristic != 2:
        raise DomainError("only binary extension fields are supported")
    return BinaryField(extension_degree)


def default_field(characteristic: int):
    """Large field used for probabilistic checks in the given characteristic."""
    if characteristic == 2:
        return BinaryField(63)
    if characteristic in (0, MERSENNE_61):
        return PrimeField(MERSENNE_61)
    return PrimeField(characteristic)


@dataclass(frozen=True)
class FieldDescriptor:
    characteristic: int
    extension_degree: int = 1
    indeterminates: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise DomainError("characteristic must be 0 or prime")
        if self.extension_degree < 1:
            raise DomainError("extension_degree must be >= 1")
        if len(set(self.indeterminates)) != len(self.indeterminates):
            raise DomainError("indeterminate names must be unique")
        if self.characteristic == 0 and self.indeterminates:
            raise DomainError("rational-function mode needs a prime characteristic")

    def base_field(self):
        if self.characteristic == 0:
            return PrimeField(MERSENNE_61)
        return make_field(self.characteristic, self.extension_degree)

    def domain(self):
        base = self.base_field()
        if not self.indeterminates:
            return base
        from .poly import RationalFunctionField

        return RationalFunctionField(base, self.indeterminates)


class JetRing:
    """base[e_1..e_n]/(e_i^2): exact first-order-in-each-direction Taylor data.

    An element is a tuple of 2^n base elements indexed by the bitmask of the
    e's it multiplies.  Evaluating a rational function of V at
    V0 + sum_j e_j W_j and reading the top component gives the mixed
    directional derivative D_{W_1}...D_{W_n} f at V0.
    """

    def __init__(self, base, n: int):
        self.base = base
        self.n = n
        self.width = 1 << n
        self.characteristic = base.characteristic
        self.size = base.size
        self.zero = tuple([base.zero] * self.width)
        self.one = (base.one,) + tuple([base.zero] * (self.width - 1))
        self._pairs = [
            (a, b) for a in range(self.width) for b in range(self.width) if a & b == 0
        ]

    def __repr__(self):
        return f"Jet({self.base!r}, {self.n})"

    def const(self, c):
        return (c,) + tuple([self.base.zero] * (self.width - 1))

    def var(self, c, j: int, dc):
        """c + dc * e_j."""
        out = [self.base.zero] * self.width
        out[0] = c
        out[1 << j] = dc
        return tuple(out)

    def add(self, a, b):
        ad = self.base.add
        return tuple(ad(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sb = self.base.sub
        return tuple(sb(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        out = [B.zero] * self.width
        for i, j in self._pairs:
            x, y = a[i], b[j]
            if B.is_zero(x) or B.is_zero(y):
                continue
            out[i | j] = B.add(out[i | j], B.mul(x, y))
        return tuple(out)

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def is_unit(self, a):
        return not self.base.is_zero(a[0])

    def eq(self, a, b):
        return all(self.base.eq(x, y) for x, y in zip(a, b))

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError("non-unit jet")
        c = self.base.inv(a[0])
        y = self.const(c)
        two = self.const(self.base.from_int(2))
        # Newton iteration doubles the correct order each step
        for _ in range(self.n + 1):
            y = self.mul(y, self.sub(two, self.mul(a, y)))
        return y

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        return self.const(self.base.from_int(n))

    def random(self, rng):
        return self.const(self.base.random(rng))

    def top(self, a):
        return a[self.width - 1]

    def to_json(self, a):
        return [self.base.to_json(x) for x in a]

    def describe(self):
        d = self.base.describe()
        d["jet_order"] = self.n
        return d
