"""The four built-in valued base fields and their exact element arithmetic.

* ``PAdicRationals(p)``    -- the rationals with the p-adic valuation;
  value group the integers, residue field GF(p).
* ``LexBivariate(q)``      -- GF(q)(X,Y) with the rank-2 valuation that
  reads off the lexicographically smallest exponent pair of a
  polynomial; value group integer pairs, residue field GF(q).
* ``LambdaTrivial(q, d)``  -- GF(q)(X) where X is given the irrational
  value lambda = sqrt(d); value group lambda * Z, residue field GF(q).
* ``LambdaComposite(p, d)`` -- Q(X) with value min over terms of
  (p-adic value of the coefficient) + (degree) * lambda; value group
  Z + lambda*Z, which is dense, so there is no uniformizer.

Elements are exact fractions in lowest terms (big rationals, or reduced
rational functions with a monic denominator).  Each element knows its
valuation, its residue when it is a unit of the valuation ring, and
residues lift back canonically.  In every variant the minimal term of a
polynomial is unique, so residues of units are plain ratios of minimal
coefficients; no series expansion is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import ratfunc
from .errors import DomainError, NotAUnit
from .finitefield import FiniteField, ResidueElement, finite_field, is_prime, prime_power
from .valuegroup import (
    DenseQuadratic,
    GroupDescriptor,
    GroupElement,
    IntegerRankOne,
    LexPairRankTwo,
    ScaledInteger,
)

__all__ = [
    "ValuationDescriptor",
    "PAdicRationals",
    "LexBivariate",
    "LambdaTrivial",
    "LambdaComposite",
    "FieldElement",
    "valuation",
    "residue",
    "lift",
    "uniformizer",
]


def _vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class ValuationDescriptor:
    """A built-in valued field (K, nu).

    Subclasses implement raw-value arithmetic; user code works with
    :class:`FieldElement`, which delegates here.
    """

    variables: tuple[str, ...] = ()

    # -- factories

    def zero(self) -> "FieldElement":
        return FieldElement(self, self._zero())

    def one(self) -> "FieldElement":
        return FieldElement(self, self._from_int(1))

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, self._from_int(n))

    def lift(self, r: ResidueElement) -> "FieldElement":
        """Canonical preimage of a residue-field element."""
        if r.field is not self.residue_field():
            raise DomainError(f"residue element of {r.field} cannot lift into {self.spec_string()}")
        return FieldElement(self, self._lift(r))

    # -- structure

    def group_descriptor(self) -> GroupDescriptor:
        raise NotImplementedError

    def residue_field(self) -> FiniteField:
        raise NotImplementedError

    def min_positive(self) -> GroupElement | None:
        return self.group_descriptor().min_positive()

    def uniformizer(self) -> "FieldElement | None":
        """An element of value min(Gamma+), or None when there is no minimum."""
        raise NotImplementedError

    def element_of_value(self, g: GroupElement) -> "FieldElement":
        """Some field element whose valuation is exactly g (finite)."""
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.spec_string()

    # -- raw value protocol (implemented per variant)

    def _zero(self):
        raise NotImplementedError

    def _from_int(self, n: int):
        raise NotImplementedError

    def _coerce(self, obj):
        return NotImplemented


@dataclass(frozen=True)
class PAdicRationals(ValuationDescriptor):
    """The rationals with the p-adic valuation."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def group_descriptor(self):
        return IntegerRankOne()

    def residue_field(self):
        return finite_field(self.p)

    def uniformizer(self):
        return self.from_fraction(Fraction(self.p))

    def element_of_value(self, g):
        return self.from_fraction(Fraction(self.p)) ** g.coords[0]

    def spec_string(self):
        return f"qp:{self.p}"

    def from_fraction(self, x) -> "FieldElement":
        return FieldElement(self, Fraction(x))

    def _zero(self):
        return Fraction(0)

    def _from_int(self, n):
        return Fraction(n)

    def _coerce(self, obj):
        if isinstance(obj, (int, Fraction)):
            return Fraction(obj)
        return NotImplemented

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _div(self, a, b):
        return a / b

    def _eq(self, a, b):
        return a == b

    def _is_zero(self, a):
        return a == 0

    def _valuation(self, a) -> GroupElement:
        gd = self.group_descriptor()
        if a == 0:
            return gd.infinity()
        return gd.element(_vp(a.numerator, self.p) - _vp(a.denominator, self.p))

    def _residue(self, a) -> ResidueElement:
        p = self.p
        if a == 0:
            return self.residue_field().element(0)
        nu = _vp(a.numerator, p) - _vp(a.denominator, p)
        if nu < 0:
            raise NotAUnit(f"{a} lies outside the valuation ring of {self.spec_string()}")
        if nu > 0:
            return self.residue_field().element(0)
        v = (a.numerator % p) * pow(a.denominator % p, -1, p) % p
        return self.residue_field().element(v)

    def _lift(self, r):
        return Fraction(r.value)

    def _render(self, a):
        return str(a)

    def _coeff_repr(self, a):
        return str(abs(a)), a < 0, True


class _FunctionField(ValuationDescriptor):
    """Shared machinery for the rational-function-field variants."""

    nvars = 1

    @cached_property
    def _dom(self):
        raise NotImplementedError

    def _zero(self):
        return ratfunc.frac_zero(self._dom, self.nvars)

    def _from_int(self, n):
        c = self._dom.from_int(n)
        return (ratfunc.pconst(self._dom, c, self.nvars), ratfunc.pone(self._dom, self.nvars))

    def _coerce(self, obj):
        if isinstance(obj, int):
            return self._from_int(obj)
        return NotImplemented

    def monomial(self, coeff, *exps: int) -> "FieldElement":
        """Build coeff * X^i (* Y^j); a convenience for tests and generators."""
        if len(exps) != self.nvars:
            raise DomainError(f"{self.spec_string()} has {self.nvars} variable(s)")
        c = self._coeff_in(coeff)
        if c == self._dom.zero:
            return self.zero()
        if any(e < 0 for e in exps):
            raise ValueError("negative exponents not allowed; divide instead")
        return FieldElement(self, ({tuple(exps): c}, ratfunc.pone(self._dom, self.nvars)))

    def _coeff_in(self, coeff):
        if isinstance(coeff, int):
            return self._dom.from_int(coeff)
        return coeff

    def _add(self, a, b):
        return ratfunc.frac_add(self._dom, self.nvars, a, b)

    def _sub(self, a, b):
        return ratfunc.frac_sub(self._dom, self.nvars, a, b)

    def _neg(self, a):
        return ratfunc.frac_neg(self._dom, a)

    def _mul(self, a, b):
        return ratfunc.frac_mul(self._dom, self.nvars, a, b)

    def _div(self, a, b):
        return ratfunc.frac_div(self._dom, self.nvars, a, b)

    def _eq(self, a, b):
        return a == b

    def _is_zero(self, a):
        return ratfunc.frac_is_zero(a)

    def _poly_value(self, pd):
        """Valuation of a nonzero polynomial, as a group element."""
        raise NotImplementedError

    def _min_term(self, pd):
        """(exponent, coefficient) of the unique minimal-value term."""
        raise NotImplementedError

    def _valuation(self, a) -> GroupElement:
        num, den = a
        if not num:
            return self.group_descriptor().infinity()
        return self._poly_value(num) - self._poly_value(den)

    def _residue_of_coeff_ratio(self, cn, cd) -> ResidueElement:
        gf = self.residue_field()
        return gf.element(gf.div(cn, cd))

    def _residue(self, a) -> ResidueElement:
        num, den = a
        if not num:
            return self.residue_field().element(0)
        nu = self._poly_value(num) - self._poly_value(den)
        if (-nu).is_positive:
            raise NotAUnit(f"element lies outside the valuation ring of {self.spec_string()}")
        if nu.is_positive:
            return self.residue_field().element(0)
        _, cn = self._min_term(num)
        _, cd = self._min_term(den)
        return self._residue_of_coeff_ratio(cn, cd)

    def _lift(self, r):
        if r.value == 0:
            return self._zero()
        return (
            ratfunc.pconst(self._dom, self._lift_coeff(r), self.nvars),
            ratfunc.pone(self._dom, self.nvars),
        )

    def _lift_coeff(self, r):
        return r.value

    # -- rendering

    def _mono_text(self, e) -> str:
        pieces = []
        for name, k in zip(self.variables, e):
            if k == 1:
                pieces.append(name)
            elif k > 1:
                pieces.append(f"{name}^{k}")
        return "*".join(pieces)

    def _coeff_text(self, c) -> tuple[str, bool]:
        # (text of |c|, c negative); GF coefficients are never negative
        return str(c), False

    def _poly_text(self, pd) -> str:
        if not pd:
            return "0"
        parts = []
        for e in sorted(pd, key=ratfunc.term_key, reverse=True):
            text, neg = self._coeff_text(pd[e])
            mono = self._mono_text(e)
            if mono:
                piece = mono if text == "1" else f"{text}*{mono}"
            else:
                piece = text
            if not parts:
                parts.append(f"-{piece}" if neg else piece)
            else:
                parts.append(f"- {piece}" if neg else f"+ {piece}")
        return " ".join(parts)

    def _render(self, a):
        num, den = a
        if den == ratfunc.pone(self._dom, self.nvars):
            return self._poly_text(num)
        return f"({self._poly_text(num)})/({self._poly_text(den)})"

    def _coeff_repr(self, a):
        num, den = a
        if ratfunc.is_const(num, self.nvars) and den == ratfunc.pone(self._dom, self.nvars):
            if not num:
                return "0", False, True
            c = num[(0,) * self.nvars]
            text, neg = self._coeff_text(c)
            return text, neg, True
        return self._render(a), False, False


@dataclass(frozen=True)
class LexBivariate(_FunctionField):
    """GF(q)(X,Y) with the rank-2 lexicographic valuation."""

    q: int

    nvars = 2
    variables = ("X", "Y")

    def __post_init__(self):
        prime_power(self.q)

    @cached_property
    def _dom(self):
        return ratfunc.GFDomain(finite_field(self.q))

    def group_descriptor(self):
        return LexPairRankTwo()

    def residue_field(self):
        return finite_field(self.q)

    def uniformizer(self):
        return self.monomial(1, 0, 1)  # Y has value (0,1) = min(Gamma+)

    def element_of_value(self, g):
        a, b = g.coords
        return self.monomial(1, 1, 0) ** a * self.monomial(1, 0, 1) ** b

    def spec_string(self):
        return f"lex:F{self.q}"

    def _poly_value(self, pd):
        return self.group_descriptor().element(*min(pd))

    def _min_term(self, pd):
        e = min(pd)
        return e, pd[e]


@dataclass(frozen=True)
class LambdaTrivial(_FunctionField):
    """GF(q)(X) where X carries the irrational value lambda = sqrt(d)."""

    q: int
    d: int

    variables = ("X",)

    def __post_init__(self):
        prime_power(self.q)
        ScaledInteger(self.d)  # validates d

    @cached_property
    def _dom(self):
        return ratfunc.GFDomain(finite_field(self.q))

    def group_descriptor(self):
        return ScaledInteger(self.d)

    def residue_field(self):
        return finite_field(self.q)

    def uniformizer(self):
        return self.monomial(1, 1)  # X has value lambda

    def element_of_value(self, g):
        return self.monomial(1, 1) ** g.coords[0]

    def spec_string(self):
        return f"lambda-trivial:F{self.q}:sqrt{self.d}"

    def _poly_value(self, pd):
        return self.group_descriptor().element(min(e[0] for e in pd))

    def _min_term(self, pd):
        e = min(pd)
        return e, pd[e]


@dataclass(frozen=True)
class LambdaComposite(_FunctionField):
    """Q(X) with value min over terms of nu_p(coefficient) + degree * sqrt(d).

    The value group Z + sqrt(d)*Z is dense in the reals, so the positive
    part has no minimum and there is no uniformizer.
    """

    p: int
    d: int

    variables = ("X",)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        DenseQuadratic(self.d)  # validates d

    @cached_property
    def _dom(self):
        return ratfunc.QQ

    def group_descriptor(self):
        return DenseQuadratic(self.d)

    def residue_field(self):
        return finite_field(self.p)

    def uniformizer(self):
        return None

    def element_of_value(self, g):
        a, b = g.coords
        return self.monomial(1, 1) ** b * self.from_int(self.p) ** a

    def spec_string(self):
        return f"lambda-composite:p{self.p}:sqrt{self.d}"

    def _coeff_in(self, coeff):
        if isinstance(coeff, (int, Fraction)):
            return Fraction(coeff)
        return coeff

    def _term_value(self, e, c) -> GroupElement:
        return self.group_descriptor().element(
            _vp(c.numerator, self.p) - _vp(c.denominator, self.p), e[0]
        )

    def _poly_value(self, pd):
        # distinct exponents give distinct values (sqrt(d) is irrational),
        # so the minimum is attained at a unique term
        best = None
        for e, c in pd.items():
            v = self._term_value(e, c)
            if best is None or v < best[0]:
                best = (v, e, c)
        return best[0]

    def _min_term(self, pd):
        best = None
        for e, c in pd.items():
            v = self._term_value(e, c)
            if best is None or v < best[0]:
                best = (v, e, c)
        return best[1], best[2]

    def _residue_of_coeff_ratio(self, cn, cd) -> ResidueElement:
        p = self.p
        ratio = cn / cd  # reduced; a p-adic unit here
        v = (ratio.numerator % p) * pow(ratio.denominator % p, -1, p) % p
        return self.residue_field().element(v)

    def _lift_coeff(self, r):
        return Fraction(r.value)

    def _coeff_text(self, c):
        return str(abs(c)), c < 0


class FieldElement:
    """An exact element of one of the built-in valued fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: ValuationDescriptor, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainError(f"mixed fields {self.field} and {other.field}")
            return other
        v = self.field._coerce(other)
        if v is NotImplemented:
            return None
        return FieldElement(self.field, v)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(other.value, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._div(self.value, other.value))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._div(other.value, self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self.field.one() / self) ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            coerced = self._coerce(other)
            if coerced is None:
                return NotImplemented
            other = coerced
        elif other.field != self.field:
            return False
        return self.field._eq(self.value, other.value)

    __hash__ = None  # mutable-looking payloads; elements are not dict keys

    def __bool__(self):
        return not self.field._is_zero(self.value)

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def valuation(self) -> GroupElement:
        return self.field._valuation(self.value)

    def is_integral(self) -> bool:
        """Membership in the valuation ring: valuation >= 0."""
        v = self.valuation()
        return v.is_infinite or not (-v).is_positive

    def is_unit(self) -> bool:
        v = self.valuation()
        return not v.is_infinite and v == v.group.zero()

    def residue(self) -> ResidueElement:
        return self.field._residue(self.value)

    def __str__(self):
        return self.field._render(self.value)

    def __repr__(self):
        return f"<{self} @ {self.field.spec_string()}>"


def valuation(x: FieldElement) -> GroupElement:
    return x.valuation()


def residue(x: FieldElement) -> ResidueElement:
    return x.residue()


def lift(r: ResidueElement, d: ValuationDescriptor) -> FieldElement:
    return d.lift(r)


def uniformizer(d: ValuationDescriptor) -> FieldElement | None:
    return d.uniformizer()
