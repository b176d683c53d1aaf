"""Explicit arithmetic in the finite fields GF(q) for prime powers q.

An element of GF(p^k) is an integer in [0, q): its base-p digits are the
coefficients of a residue polynomial modulo a fixed monic irreducible of
degree k over GF(p).  The modulus is the lexicographically smallest such
polynomial, so fields are reproducible across runs.  For prime q this
collapses to plain integers mod p.

``finite_field(q)`` returns a cached singleton per q, so field objects
can be compared by identity.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["FiniteField", "ResidueElement", "finite_field", "is_prime", "prime_power"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


# -- dense digit-list polynomials over GF(p), used only to locate the
#    modulus of GF(p^k).  Ascending coefficients, no trailing zeros.

def _dtrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _dmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _dtrim(out)


def _drem(f: list[int], g: list[int], p: int) -> list[int]:
    # remainder of f mod g, g monic
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        c = r[-1]
        k = len(r) - 1 - dg
        for j in range(dg):
            r[k + j] = (r[k + j] - c * g[j]) % p
        r.pop()
        _dtrim(r)
    return r


def _digits(v: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(v % p)
        v //= p
    return out


def _find_modulus(p: int, k: int) -> list[int]:
    # smallest monic irreducible of degree k over GF(p), by trial division
    for code in range(p**k):
        cand = _digits(code, p, k) + [1]
        for d in range(1, k // 2 + 1):
            for dcode in range(p**d):
                div = _digits(dcode, p, d) + [1]
                if not _drem(cand, div, p):
                    break
            else:
                continue
            break
        else:
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


_TABLE_LIMIT = 64  # build full mul/inv tables for small extension fields


class FiniteField:
    """GF(q).  Elements are plain integers in range(q)."""

    __slots__ = ("q", "p", "k", "modulus", "_mul_table", "_inv_table")

    def __init__(self, q: int):
        p, k = prime_power(q)
        self.q = q
        self.p = p
        self.k = k
        self.modulus = None if k == 1 else _find_modulus(p, k)
        self._mul_table = None
        self._inv_table = None
        if k > 1 and q <= _TABLE_LIMIT:
            self._mul_table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self._inv_table = [None] + [self._pow_slow(a, q - 2) for a in range(1, q)]

    # -- encoding helpers

    def _dig(self, v: int) -> list[int]:
        return _digits(v, self.p, self.k)

    def _undig(self, ds: list[int]) -> int:
        v = 0
        for c in reversed(ds):
            v = v * self.p + c
        return v

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return self._undig([(x + y) % p for x, y in zip(self._dig(a), self._dig(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self._undig([(-x) % p for x in self._dig(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _dmul(self._dig(a), self._dig(b), self.p)
        rem = _drem(prod, self.modulus, self.p)
        return self._undig(rem + [0] * (self.k - len(rem)))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def _pow_slow(self, a: int, n: int) -> int:
        out = 1
        base = a
        while n:
            if n & 1:
                out = self._mul_slow(out, base)
            base = self._mul_slow(base, base)
            n >>= 1
        return out

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if self.k == 1:
            return pow(a, n, self.p)
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pth_root(self, a: int) -> int:
        """The unique b with b^p = a (Frobenius is bijective)."""
        if self.k == 1:
            return a
        return self.pow(a, self.p ** (self.k - 1))

    def from_int(self, n: int) -> int:
        """Image of the rational integer n (lands in the prime subfield)."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def element(self, v: int) -> "ResidueElement":
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not a canonical representative in GF({self.q})")
        return ResidueElement(self, v)

    def __repr__(self):
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)


@dataclass(frozen=True)
class ResidueElement:
    """An element of a residue field, by canonical representative."""

    field: FiniteField
    value: int

    def _check(self, other) -> "ResidueElement":
        if isinstance(other, int):
            return ResidueElement(self.field, self.field.from_int(other))
        if not isinstance(other, ResidueElement):
            raise TypeError(f"expected ResidueElement, got {type(other).__name__}")
        if other.field is not self.field:
            raise DomainError(f"mixed residue fields {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return ResidueElement(self.field, self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return ResidueElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self):
        return ResidueElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        other = self._check(other)
        return ResidueElement(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return ResidueElement(self.field, self.field.div(self.value, other.value))

    def __pow__(self, n: int):
        return ResidueElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return ResidueElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)
