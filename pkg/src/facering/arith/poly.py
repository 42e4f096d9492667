"""Sparse multivariate polynomials and unreduced rational functions over GF(p).

Exponent vectors are dense tuples (one slot per indeterminate); the term map
is sparse.  Rational functions are never put in canonical form: equality is
cross-multiplication, and only cheap cancellations are attempted (common
monomial content, a denominator that divides the numerator exactly).
"""

from __future__ import annotations

import random
from functools import reduce

from .fields import DomainError, PrimeField, UnluckySpecialization


class PolyRing:
    __slots__ = ("base", "names", "index", "nvars", "_zero_exp")

    def __init__(self, base: PrimeField, names):
        if not isinstance(base, PrimeField):
            raise DomainError("polynomial coefficients must live in a prime field")
        names = tuple(names)
        if len(set(names)) != len(names):
            raise DomainError("indeterminate names must be unique")
        self.base = base
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        self._zero_exp = (0,) * len(names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base and other.names == self.names

    def __hash__(self):
        return hash((self.base, self.names))

    def __repr__(self):
        return f"{self.base!r}[{', '.join(self.names)}]"

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return MultiPoly(self, {self._zero_exp: 1})

    def const(self, c):
        c %= self.base.p
        return MultiPoly(self, {self._zero_exp: c} if c else {})

    def var(self, name):
        if name not in self.index:
            raise DomainError(f"unknown indeterminate {name!r}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return MultiPoly(self, {tuple(e): 1})

    def gens(self):
        return [self.var(n) for n in self.names]


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- structure
    def _check(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(int(other))
        if other.ring != self.ring:
            raise DomainError("polynomials from different rings")
        return other

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring._zero_exp, 0)

    def nterms(self):
        return len(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts)

    # -- arithmetic
    def __add__(self, other):
        other = self._check(other)
        p = self.ring.base.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.base.p
        return MultiPoly(self.ring, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        p = self.ring.base.p
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _add_exp(ea, eb)
                out[e] = (out.get(e, 0) + ca * cb) % p
        return MultiPoly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: int):
        p = self.ring.base.p
        c %= p
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: v * c % p for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "MultiPoly"):
        """Quotient q with self == q*other, or None if other does not divide self."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        p = self.ring.base.p
        lb, cb = other.leading()
        icb = pow(cb, p - 2, p)
        rem = dict(self.terms)
        q: dict = {}
        oterms = list(other.terms.items())
        while rem:
            lr = max(rem)
            shift = tuple(x - y for x, y in zip(lr, lb))
            if min(shift) < 0:
                return None
            c = rem[lr] * icb % p
            q[shift] = c
            for e, v in oterms:
                ee = _add_exp(e, shift)
                nv = (rem.get(ee, 0) - c * v) % p
                if nv:
                    rem[ee] = nv
                else:
                    rem.pop(ee, None)
        return MultiPoly(self.ring, q)

    def monomial_content(self):
        if not self.terms:
            return self.ring._zero_exp
        return tuple(reduce(lambda a, b: tuple(map(min, a, b)), self.terms))

    def shift_down(self, e):
        return MultiPoly(
            self.ring, {tuple(x - y for x, y in zip(k, e)): c for k, c in self.terms.items()}
        )

    def derivative(self, name):
        """Formal partial derivative; in characteristic p, d(x^p)/dx = 0."""
        if name not in self.ring.index:
            raise DomainError(f"unknown indeterminate {name!r}")
        i = self.ring.index[name]
        p = self.ring.base.p
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            v = c * k % p
            if v:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = v
        return MultiPoly(self.ring, out)

    def evaluate(self, values, domain=None):
        """Evaluate at values (sequence indexed like ring.names) in `domain`
        (defaults to the coefficient field).  Coefficients are mapped with
        domain.from_int, which is the prime-subfield embedding."""
        dom = domain or self.ring.base
        n = self.ring.nvars
        powers = [dict() for _ in range(n)]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                if k == 1:
                    cache[k] = values[i]
                else:
                    h = pw(i, k // 2)
                    r = dom.mul(h, h)
                    if k % 2:
                        r = dom.mul(r, values[i])
                    cache[k] = r
            return cache[k]

        total = dom.zero
        for e, c in self.terms.items():
            t = dom.from_int(c)
            for i, k in enumerate(e):
                if k:
                    t = dom.mul(t, pw(i, k))
            total = dom.add(total, t)
        return total

    def substitute(self, mapping: dict, target_ring: "PolyRing"):
        """Rename indeterminates into target_ring (mapping: old name -> new name)."""
        idx = [target_ring.index[mapping.get(n, n)] for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * target_ring.nvars
            for i, k in enumerate(e):
                if k:
                    ne[idx[i]] += k
            out[tuple(ne)] = c
        return MultiPoly(target_ring, out)


class RatFunc:
    """numerator / denominator, denominator nonzero, no canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, _normalize=True):
        if den is None:
            den = num.ring.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.ring != den.ring:
            raise DomainError("numerator and denominator in different rings")
        self.num = num
        self.den = den
        if _normalize:
            self._tidy()

    @property
    def ring(self):
        return self.num.ring

    def _tidy(self):
        num, den = self.num, self.den
        ring = num.ring
        p = ring.base.p
        if num.is_zero():
            self.den = ring.one()
            return
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num.scale(pow(c, p - 2, p))
            self.num, self.den = num, ring.one()
            return
        cn, cd = num.monomial_content(), den.monomial_content()
        common = tuple(map(min, cn, cd))
        if any(common):
            num, den = num.shift_down(common), den.shift_down(common)
        if num == den:
            self.num, self.den = ring.one(), ring.one()
            return
        if den.nterms() <= num.nterms() and num.nterms() <= 400:
            q = num.divexact(den)
            if q is not None:
                self.num, self.den = q, ring.one()
                return
        elif num.nterms() < den.nterms() and den.nterms() <= 400:
            q = den.divexact(num)
            if q is not None:
                num, den = ring.one(), q
        # monic denominator
        lc = den.leading()[1]
        if lc != 1:
            inv = pow(lc, p - 2, p)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFunc has no canonical form and is unhashable")

    def __repr__(self):
        if self.den.is_constant():
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(self.ring.zero())
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def derivative(self, name):
        n, d = self.num, self.den
        if d.is_constant():
            return RatFunc(n.derivative(name), d)
        return RatFunc(n.derivative(name) * d - n * d.derivative(name), d * d)

    def evaluate(self, values, domain=None):
        dom = domain or self.ring.base
        dv = self.den.evaluate(values, dom)
        if dom.is_zero(dv):
            raise UnluckySpecialization("denominator vanishes at the specialization point")
        return dom.div(self.num.evaluate(values, dom), dv)

    def substitute(self, mapping, target_ring):
        return RatFunc(
            self.num.substitute(mapping, target_ring), self.den.substitute(mapping, target_ring)
        )


class RationalFunctionField:
    """Domain adapter for GF(p)(names)."""

    extension_degree = 1

    def __init__(self, base: PrimeField, names):
        self.ring = PolyRing(base, names)
        self.base = base
        self.characteristic = base.characteristic
        self.size = None
        self.names = self.ring.names
        self.zero = RatFunc(self.ring.zero())
        self.one = RatFunc(self.ring.one())

    def __repr__(self):
        return f"{self.base!r}({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.ring == self.ring

    def __hash__(self):
        return hash(self.ring)

    def var(self, name):
        return RatFunc(self.ring.var(name))

    def const(self, c):
        return RatFunc(self.ring.const(c))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return not a.is_zero()

    def eq(self, a, b):
        return a == b

    def from_int(self, n: int):
        return self.const(n)

    def random(self, rng: random.Random):
        return self.const(self.base.random(rng))

    def complexity(self, a):
        return a.num.nterms() + a.den.nterms()

    def to_json(self, a):
        return repr(a)

    def describe(self):
        return {
            "characteristic": self.characteristic,
            "extension_degree": 1,
            "indeterminates": list(self.names),
        }
