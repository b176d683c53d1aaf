"""Totally ordered abelian value groups with exact integer arithmetic.

Four group shapes cover the value groups of the built-in valued fields:

* ``IntegerRankOne``  -- the integers.
* ``LexPairRankTwo``  -- pairs of integers ordered lexicographically,
  first coordinate dominant; minimum positive element ``(0,1)``.
* ``DenseQuadratic``  -- numbers ``a + b*sqrt(d)`` for a fixed
  non-square ``d >= 2``, ordered as a subgroup of the reals.  Dense, so
  its positive part has no minimum.
* ``ScaledInteger``   -- integer multiples of an irrational unit
  ``lambda``; order isomorphic to the integers but rendered in
  multiples of ``lambda``.

Elements are immutable, comparisons are exact (no floating point
anywhere), and a distinguished infinite element -- the value of 0 --
compares above every finite element and absorbs addition.  Mixing
elements of different groups raises :class:`~dedekind.errors.DomainError`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError

__all__ = [
    "GroupDescriptor",
    "IntegerRankOne",
    "LexPairRankTwo",
    "DenseQuadratic",
    "ScaledInteger",
    "GroupElement",
    "compare",
    "add",
    "scalar_mul",
    "is_positive",
    "min_positive",
]


class GroupDescriptor:
    """Shape of a value group; also the factory for its elements."""

    rank = 1

    def element(self, *coords: int) -> "GroupElement":
        if len(coords) != self.rank:
            raise DomainError(f"{self!r} needs {self.rank} coordinate(s), got {len(coords)}")
        return GroupElement(self, tuple(int(c) for c in coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def infinity(self) -> "GroupElement":
        """The value of 0; larger than every finite element."""
        return GroupElement(self, None)

    def min_positive(self) -> "GroupElement | None":
        """Smallest strictly positive element, or None when there is none."""
        raise NotImplementedError

    def _cmp(self, a: tuple, b: tuple) -> int:
        raise NotImplementedError

    def _render(self, coords: tuple) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> "GroupElement":
        """Inverse of ``str()`` on elements of this group."""
        raise NotImplementedError


def _cmp_int(a: int, b: int) -> int:
    return (a > b) - (a < b)


@dataclass(frozen=True)
class IntegerRankOne(GroupDescriptor):
    def min_positive(self):
        return self.element(1)

    def _cmp(self, a, b):
        return _cmp_int(a[0], b[0])

    def _render(self, coords):
        return str(coords[0])

    def parse(self, text):
        text = text.strip()
        if text == "inf":
            return self.infinity()
        if not re.fullmatch(r"-?\d+", text):
            raise ParseError(f"not an integer group element: {text!r}")
        return self.element(int(text))


@dataclass(frozen=True)
class LexPairRankTwo(GroupDescriptor):
    rank = 2

    def min_positive(self):
        return self.element(0, 1)

    def _cmp(self, a, b):
        # lex order, first coordinate dominant
        return _cmp_int(a, b)

    def _render(self, coords):
        return f"({coords[0]},{coords[1]})"

    def parse(self, text):
        text = text.strip()
        if text == "inf":
            return self.infinity()
        m = re.fullmatch(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
        if m is None:
            raise ParseError(f"not a pair group element: {text!r}")
        return self.element(int(m.group(1)), int(m.group(2)))


def _require_nonsquare(d: int) -> None:
    if d < 2 or math.isqrt(d) ** 2 == d:
        raise ValueError(f"need a non-square integer >= 2, got {d}")


@dataclass(frozen=True)
class DenseQuadratic(GroupDescriptor):
    """Elements a + b*sqrt(d); coordinates (a, b)."""

    d: int

    rank = 2

    def __post_init__(self):
        _require_nonsquare(self.d)

    def min_positive(self):
        return None  # dense in the reals

    def _sign(self, a: int, b: int) -> int:
        # sign of a + b*sqrt(d), exactly: when the signs of a and b agree
        # it is immediate; otherwise compare a^2 with d*b^2 (sqrt(d) is
        # irrational, so a^2 != d*b^2 unless a = b = 0).
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        s = 1 if a > 0 else -1
        return s * _cmp_int(a * a, self.d * b * b)

    def _cmp(self, a, b):
        return self._sign(a[0] - b[0], a[1] - b[1])

    def _render(self, coords):
        a, b = coords
        root = f"sqrt({self.d})"
        if b == 0:
            return str(a)
        mag = f"{root}" if abs(b) == 1 else f"{abs(b)}*{root}"
        if a == 0:
            return mag if b > 0 else f"-{mag}"
        return f"{a} + {mag}" if b > 0 else f"{a} - {mag}"

    def parse(self, text):
        text = text.strip()
        if text == "inf":
            return self.infinity()
        a = b = 0
        seen = False
        for part in text.replace(" ", "").replace("-", "+-").split("+"):
            if not part:
                continue
            seen = True
            m = re.fullmatch(r"(-?)(?:(\d+)\*)?sqrt\((\d+)\)", part)
            if m is not None:
                if int(m.group(3)) != self.d:
                    raise ParseError(f"wrong radicand in {text!r}: expected sqrt({self.d})")
                k = int(m.group(2)) if m.group(2) else 1
                b += -k if m.group(1) else k
            elif re.fullmatch(r"-?\d+", part):
                a += int(part)
            else:
                raise ParseError(f"not a quadratic group element: {text!r}")
        if not seen:
            raise ParseError(f"not a quadratic group element: {text!r}")
        return self.element(a, b)


@dataclass(frozen=True)
class ScaledInteger(GroupDescriptor):
    """Multiples of an irrational unit lambda = sqrt(d).

    Order-isomorphic to the integers; the unit is kept so reports print
    values as multiples of lambda.
    """

    d: int

    def __post_init__(self):
        _require_nonsquare(self.d)

    def min_positive(self):
        return self.element(1)

    def _cmp(self, a, b):
        return _cmp_int(a[0], b[0])

    def _render(self, coords):
        n = coords[0]
        if n == 0:
            return "0"
        if n == 1:
            return "lambda"
        if n == -1:
            return "-lambda"
        return f"{n}*lambda"

    def parse(self, text):
        text = text.strip().replace(" ", "")
        if text == "inf":
            return self.infinity()
        if text == "0":
            return self.element(0)
        m = re.fullmatch(r"(-?)(?:(\d+)\*)?lambda", text)
        if m is None:
            raise ParseError(f"not a lambda-multiple group element: {text!r}")
        n = int(m.group(2)) if m.group(2) else 1
        return self.element(-n if m.group(1) else n)


@dataclass(frozen=True)
class GroupElement:
    """Immutable element of one of the groups above; coords None = infinity."""

    group: GroupDescriptor
    coords: tuple[int, ...] | None

    @property
    def is_infinite(self) -> bool:
        return self.coords is None

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if self.group != other.group:
            raise DomainError(f"mixed groups: {self.group!r} and {other.group!r}")

    def __add__(self, other):
        self._check(other)
        if self.is_infinite or other.is_infinite:
            return GroupElement(self.group, None)
        return GroupElement(self.group, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        if self.is_infinite:
            raise DomainError("the infinite element has no inverse")
        return GroupElement(self.group, tuple(-x for x in self.coords))

    def __sub__(self, other):
        self._check(other)
        if other.is_infinite:
            raise DomainError("cannot subtract the infinite element")
        if self.is_infinite:
            return self
        return self + (-other)

    def __rmul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if self.is_infinite:
            if n < 1:
                raise DomainError("cannot scale the infinite element by n < 1")
            return self
        return GroupElement(self.group, tuple(n * x for x in self.coords))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    @property
    def is_positive(self) -> bool:
        if self.is_infinite:
            return True
        return self.group._cmp(self.coords, (0,) * self.group.rank) > 0

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return self.group._render(self.coords)

    def __repr__(self):
        return f"<{self}>"


def compare(x: GroupElement, y: GroupElement) -> int:
    """Exact total order: -1, 0 or +1.  Infinity is above everything finite."""
    x._check(y)
    if x.is_infinite:
        return 0 if y.is_infinite else 1
    if y.is_infinite:
        return -1
    return x.group._cmp(x.coords, y.coords)


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    return x + y


def scalar_mul(n: int, x: GroupElement) -> GroupElement:
    return n * x


def is_positive(x: GroupElement) -> bool:
    return x.is_positive


def min_positive(d: GroupDescriptor) -> GroupElement | None:
    return d.min_positive()
