"""Parsers for the textual grammars used by the CLI.

* valuation descriptors: ``qp:5``, ``lex:F2``, ``lambda-trivial:F3:sqrt2``,
  ``lambda-composite:p2:sqrt2``;
* field elements: ``7/3``, ``(X^2 + Y)/(1 + X*Y)``;
* polynomials in the main variable ``x`` (alias ``Z``), with field
  elements as coefficients: ``x^3 + (Y)*x + (X)``;
* value-group elements, via each group descriptor's own ``parse``.

One recursive-descent expression parser evaluates over whatever algebra
the atoms live in (field elements or polynomials); precedence is the
usual one and ``^`` denotes non-negative integer powers.
"""

from __future__ import annotations

import re

from .errors import ParseError, PreconditionError
from .finitefield import is_prime, prime_power
from .poly import Poly
from .valuegroup import GroupDescriptor, GroupElement
from .valued_field import (
    FieldElement,
    LambdaComposite,
    LambdaTrivial,
    LexBivariate,
    PAdicRationals,
    ValuationDescriptor,
)

__all__ = [
    "parse_descriptor",
    "parse_element",
    "parse_poly",
    "parse_group_element",
]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r} in {text!r}")
            break
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", m.group(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
    return out


class _Expr:
    """Expression evaluator over an algebra given by its atoms."""

    def __init__(self, text: str, atoms):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.atoms = atoms  # callable: token -> algebra value (int or name)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                try:
                    value = value * rhs if val == "*" else value / rhs
                except ZeroDivisionError:
                    raise ParseError(f"division by zero in {self.text!r}") from None
            else:
                return value

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.atoms(int(val))
        if kind == "name":
            return self.atoms(val)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token in {self.text!r}")


def parse_descriptor(text: str) -> ValuationDescriptor:
    """Parse ``qp:5``, ``lex:F2``, ``lambda-trivial:F3:sqrt2``,
    ``lambda-composite:p2:sqrt2``."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "qp" and len(parts) == 2:
            p = _int_part(parts[1], text)
            if not is_prime(p):
                raise ParseError(f"{p} is not prime")
            return PAdicRationals(p)
        if kind == "lex" and len(parts) == 2:
            return LexBivariate(_field_size(parts[1], text))
        if kind == "lambda-trivial" and len(parts) == 3:
            return LambdaTrivial(_field_size(parts[1], text), _sqrt_part(parts[2], text))
        if kind == "lambda-composite" and len(parts) == 3:
            p = _prime_part(parts[1], text)
            if not is_prime(p):
                raise ParseError(f"{p} is not prime")
            return LambdaComposite(p, _sqrt_part(parts[2], text))
    except ValueError as exc:
        raise ParseError(f"bad field descriptor {text!r}: {exc}") from None
    raise ParseError(f"unknown field descriptor {text!r}")


def _int_part(part: str, text: str) -> int:
    if not re.fullmatch(r"\d+", part):
        raise ParseError(f"bad field descriptor {text!r}")
    return int(part)


def _field_size(part: str, text: str) -> int:
    m = re.fullmatch(r"F(\d+)", part)
    if m is None:
        raise ParseError(f"expected F<q> in descriptor {text!r}")
    q = int(m.group(1))
    prime_power(q)  # raises ValueError when invalid
    return q


def _prime_part(part: str, text: str) -> int:
    m = re.fullmatch(r"p(\d+)", part)
    if m is None:
        raise ParseError(f"expected p<prime> in descriptor {text!r}")
    return int(m.group(1))


def _sqrt_part(part: str, text: str) -> int:
    m = re.fullmatch(r"sqrt\(?(\d+)\)?", part)
    if m is None:
        raise ParseError(f"expected sqrt<d> in descriptor {text!r}")
    return int(m.group(1))


def parse_element(field: ValuationDescriptor, text: str) -> FieldElement:
    """Parse a base-field element (no main variable allowed)."""

    def atoms(tok):
        if isinstance(tok, int):
            return field.from_int(tok)
        if tok in field.variables:
            return field.monomial(1, *(1 if v == tok else 0 for v in field.variables))
        if tok in ("x", "Z"):
            raise ParseError(f"the main variable {tok!r} is not a field element")
        raise ParseError(f"unknown variable {tok!r} over {field.spec_string()}")

    value = _Expr(text, atoms).parse()
    if not isinstance(value, FieldElement):
        raise ParseError(f"{text!r} is not a field element")
    return value


def parse_poly(field: ValuationDescriptor, text: str) -> Poly:
    """Parse a polynomial in the main variable x (alias Z) over the field."""

    def atoms(tok):
        if isinstance(tok, int):
            return Poly.constant(field.from_int(tok))
        if tok in ("x", "Z"):
            return Poly.x(field)
        if tok in field.variables:
            return Poly.constant(
                field.monomial(1, *(1 if v == tok else 0 for v in field.variables))
            )
        raise ParseError(f"unknown variable {tok!r} over {field.spec_string()}")

    try:
        value = _Expr(text, atoms).parse()
    except ZeroDivisionError:
        raise ParseError(f"division by zero in {text!r}") from None
    except PreconditionError as exc:
        raise ParseError(f"bad polynomial {text!r}: {exc}") from None
    if not isinstance(value, Poly):
        raise ParseError(f"{text!r} is not a polynomial")
    return value


def parse_group_element(gd: GroupDescriptor, text: str) -> GroupElement:
    return gd.parse(text)
