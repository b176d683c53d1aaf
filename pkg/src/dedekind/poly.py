"""Dense univariate polynomials over a valued base field, and over its
finite residue field.

``Poly`` holds the main objects of the engine: the input polynomial, the
monic lifts of its residue factors, and the quotients/remainders of
Euclidean division.  Division by a monic divisor involves no coefficient
inversion, so integral inputs give integral quotient and remainder.

``ResiduePoly`` is the reduction mod the maximal ideal: coefficients are
canonical GF(q) representatives (plain ints), which keeps the factoring
loops cheap.

A degree cap (default 32) keeps exact function-field arithmetic at desk
scale; raise it with :func:`set_degree_cap` if needed.
"""

from __future__ import annotations

from .errors import DegreeCapExceeded, NotIntegral, NotMonic, PreconditionError
from .finitefield import FiniteField, ResidueElement
from .valuegroup import GroupElement
from .valued_field import FieldElement, ValuationDescriptor

__all__ = [
    "Poly",
    "ResiduePoly",
    "euclid_divide",
    "gauss_valuation",
    "lift_monic",
    "gcd_over_K",
    "is_separable",
    "derivative",
    "set_degree_cap",
]

_degree_cap = 32


def set_degree_cap(n: int) -> int:
    """Set the maximum allowed polynomial degree; returns the old cap."""
    global _degree_cap
    old, _degree_cap = _degree_cap, n
    return old


def _check_cap(deg: int) -> None:
    if deg > _degree_cap:
        raise DegreeCapExceeded(f"degree {deg} exceeds the cap {_degree_cap}")


class Poly:
    """Polynomial over a valued base field; index = degree, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ValuationDescriptor, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        _check_cap(len(coeffs) - 1)
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def constant(cls, c: FieldElement):
        return cls(c.field, (c,))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(n) for n in ints])

    # -- shape

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def is_integral(self) -> bool:
        """All coefficients in the valuation ring."""
        return all(c.is_integral() for c in self.coeffs)

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise PreconditionError("mixed base fields")
            return other
        if isinstance(other, FieldElement) or isinstance(other, int):
            c = self.field.from_int(other) if isinstance(other, int) else other
            return Poly.constant(c)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coefficient(i) - other.coefficient(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.degree > 0:
            raise PreconditionError("cannot divide by a polynomial of positive degree")
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        c = other.coeffs[0]
        return Poly(self.field, [a / c for a in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PreconditionError("polynomial powers take a non-negative integer")
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    __hash__ = None

    def __call__(self, x: FieldElement) -> FieldElement:
        out = self.field.zero()
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    # -- valued-field structure

    def gauss_valuation(self) -> GroupElement:
        return gauss_valuation(self)

    def derivative(self) -> "Poly":
        return Poly(
            self.field,
            [self.coeffs[i] * self.field.from_int(i) for i in range(1, len(self.coeffs))],
        )

    def reduce(self) -> "ResiduePoly":
        """Coefficientwise residue; the degree may drop."""
        gf = self.field.residue_field()
        out = []
        for c in self.coeffs:
            if not c.is_integral():
                raise NotIntegral(f"coefficient {c} has negative valuation")
            out.append(c.residue().value)
        return ResiduePoly(gf, out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.degree == 0:
            text, neg, _ = self.field._coeff_repr(self.coeffs[0].value)
            return f"-{text}" if neg else text
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            text, neg, simple = self.field._coeff_repr(c.value)
            if i == 0:
                piece = text if simple else f"({text})"
            else:
                var = "x" if i == 1 else f"x^{i}"
                if simple and text == "1":
                    piece = var
                elif simple:
                    piece = f"{text}*{var}"
                else:
                    piece = f"({text})*{var}"
            if not parts:
                parts.append(f"-{piece}" if neg else piece)
            else:
                parts.append(f"- {piece}" if neg else f"+ {piece}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<{self} over {self.field.spec_string()}>"


def euclid_divide(f: Poly, phi: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of f by a monic phi of degree >= 1.

    Uses only ring operations, so integral f and phi give integral
    quotient and remainder.
    """
    if phi.field != f.field:
        raise PreconditionError("mixed base fields")
    if phi.degree < 1:
        raise PreconditionError("divisor must have degree >= 1")
    if not phi.is_monic():
        raise NotMonic("Euclidean division requires a monic divisor")
    d = phi.degree
    r = list(f.coeffs)
    if f.degree < d:
        return Poly.zero(f.field), f
    q = [f.field.zero()] * (f.degree - d + 1)
    for k in range(f.degree, d - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        q[k - d] = c
        for j in range(d):
            r[k - d + j] = r[k - d + j] - c * phi.coeffs[j]
        r[k] = f.field.zero()
    return Poly(f.field, q), Poly(f.field, r[:d])


def _divmod_general(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    # divisor need not be monic; used by the gcd only
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if g.degree == 0:
        return f / g.coeffs[0], Poly.zero(f.field)
    lc = g.leading_coefficient()
    q, r = euclid_divide(f, g / lc)
    return q / lc, r


def gauss_valuation(f: Poly) -> GroupElement:
    """Minimum coefficient valuation; infinity for the zero polynomial."""
    gd = f.field.group_descriptor()
    best = gd.infinity()
    for c in f.coeffs:
        v = c.valuation()
        if v < best:
            best = v
    return best


def lift_monic(rp: "ResiduePoly", field: ValuationDescriptor) -> Poly:
    """Canonical monic integral preimage of a monic residue polynomial."""
    if rp.gf is not field.residue_field():
        raise PreconditionError("residue polynomial belongs to a different residue field")
    if not rp.is_monic():
        raise NotMonic("lift_monic requires a monic residue polynomial")
    gf = rp.gf
    return Poly(field, [field.lift(gf.element(c)) for c in rp.coeffs])


def gcd_over_K(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the base field (monic-remainder Euclid)."""
    if a.is_zero() and b.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, _divmod_general(a, b)[1]
    return a / a.leading_coefficient()


def derivative(f: Poly) -> Poly:
    return f.derivative()


def is_separable(f: Poly) -> bool:
    """Whether gcd(f, f') = 1 over the base field."""
    if not f.is_monic() or f.degree < 1:
        raise PreconditionError("separability test expects a monic polynomial of degree >= 1")
    return gcd_over_K(f, f.derivative()).degree == 0


class ResiduePoly:
    """Polynomial over GF(q) with canonical integer coefficients."""

    __slots__ = ("gf", "coeffs")

    def __init__(self, gf: FiniteField, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if not 0 <= c < gf.q:
                raise ValueError(f"{c} is not a canonical GF({gf.q}) representative")
        self.gf = gf
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, gf):
        return cls(gf, ())

    @classmethod
    def one(cls, gf):
        return cls(gf, (1,))

    @classmethod
    def x(cls, gf):
        return cls(gf, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def element(self, i: int) -> ResidueElement:
        return self.gf.element(self.coefficient(i))

    def _check(self, other):
        if not isinstance(other, ResiduePoly):
            raise TypeError(f"expected ResiduePoly, got {type(other).__name__}")
        if other.gf is not self.gf:
            raise PreconditionError("mixed residue fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        gf = self.gf
        n = max(len(self.coeffs), len(other.coeffs))
        return ResiduePoly(gf, [gf.add(self.coefficient(i), other.coefficient(i)) for i in range(n)])

    def __sub__(self, other):
        other = self._check(other)
        gf = self.gf
        n = max(len(self.coeffs), len(other.coeffs))
        return ResiduePoly(gf, [gf.sub(self.coefficient(i), other.coefficient(i)) for i in range(n)])

    def __neg__(self):
        gf = self.gf
        return ResiduePoly(gf, [gf.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        other = self._check(other)
        gf = self.gf
        if self.is_zero() or other.is_zero():
            return ResiduePoly.zero(gf)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = gf.add(out[i + j], gf.mul(a, b))
        return ResiduePoly(gf, out)

    def __pow__(self, n: int):
        out = ResiduePoly.one(self.gf)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        gf = self.gf
        inv_lc = gf.inv(other.coeffs[-1])
        d = other.degree
        r = list(self.coeffs)
        q = [0] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            c = gf.mul(r[k], inv_lc)
            if c:
                q[k - d] = c
                for j in range(d):
                    r[k - d + j] = gf.sub(r[k - d + j], gf.mul(c, other.coeffs[j]))
            r[k] = 0
        return ResiduePoly(gf, q), ResiduePoly(gf, r[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "ResiduePoly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "ResiduePoly":
        if self.is_zero() or self.is_monic():
            return self
        gf = self.gf
        inv_lc = gf.inv(self.coeffs[-1])
        return ResiduePoly(gf, [gf.mul(c, inv_lc) for c in self.coeffs])

    def gcd(self, other: "ResiduePoly") -> "ResiduePoly":
        other = self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "ResiduePoly":
        gf = self.gf
        return ResiduePoly(
            gf,
            [gf.mul(self.coeffs[i], gf.from_int(i)) for i in range(1, len(self.coeffs))],
        )

    def pth_root(self) -> "ResiduePoly":
        """Inverse of the Frobenius on a polynomial in x^p."""
        gf = self.gf
        p = gf.p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p == 0:
                out.append(gf.pth_root(c))
            elif c:
                raise PreconditionError("not a polynomial in x^p")
        return ResiduePoly(gf, out)

    def __call__(self, x: int) -> int:
        gf = self.gf
        out = 0
        for c in reversed(self.coeffs):
            out = gf.add(gf.mul(out, x), c)
        return out

    def __eq__(self, other):
        if not isinstance(other, ResiduePoly):
            return NotImplemented
        return self.gf is other.gf and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.gf.q, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                piece = str(c)
            else:
                var = "x" if i == 1 else f"x^{i}"
                piece = var if c == 1 else f"{c}*{var}"
            parts.append(piece)
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over GF({self.gf.q})>"
