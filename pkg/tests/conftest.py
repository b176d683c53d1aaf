"""Shared fixtures and random-input generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dedekind import (
    FieldElement,
    LambdaComposite,
    LambdaTrivial,
    LexBivariate,
    PAdicRationals,
    Poly,
    irreducibles,
    is_separable,
    lift_monic,
)

QP2 = PAdicRationals(2)
QP3 = PAdicRationals(3)
QP5 = PAdicRationals(5)
QP7 = PAdicRationals(7)
LEX2 = LexBivariate(2)
LEX3 = LexBivariate(3)
LT32 = LambdaTrivial(3, 2)
LT22 = LambdaTrivial(2, 2)
LC22 = LambdaComposite(2, 2)

# one representative per field shape
VARIANTS = (QP2, LEX2, LT32, LC22)
# the shapes whose value group has a minimum positive element
VARIANTS_WITH_SIGMA = (QP2, QP5, LEX2, LT32)


@pytest.fixture
def rng():
    return random.Random(20260809)


def _nonzero_int(rng, lo=-30, hi=30):
    n = 0
    while n == 0:
        n = rng.randint(lo, hi)
    return n


def random_integral(rng, field) -> FieldElement:
    """A random element of the valuation ring (denominators stay units)."""
    if isinstance(field, PAdicRationals):
        den = 1
        while den % field.p == 0:
            den = rng.choice((1, 1, 1, 1, 3, 5, 7, 9, 11))
        return field.from_fraction(Fraction(rng.randint(-30, 30), den))
    if isinstance(field, LambdaComposite):
        out = field.zero()
        for _ in range(rng.randint(1, 3)):
            den = 1
            while den % field.p == 0:
                den = rng.choice((1, 1, 1, 3, 5, 7))
            c = Fraction(rng.randint(-12, 12), den)
            out = out + field.monomial(c, rng.randint(0, 4))
        return out
    # GF(q)-coefficient function fields
    q = field.residue_field().q
    out = field.zero()
    for _ in range(rng.randint(1, 3)):
        exps = tuple(rng.randint(0, 3) for _ in range(field.nvars))
        out = out + field.monomial(rng.randrange(q), *exps)
    if rng.random() < 0.2:
        out = out / _unit_denominator(rng, field)
    return out


def _unit_denominator(rng, field) -> FieldElement:
    # constant term 1 plus something of positive value: a unit
    out = field.one()
    exps = tuple(rng.randint(0, 2) for _ in range(field.nvars))
    if any(exps):
        out = out + field.monomial(1, *exps)
    return out


def random_unit(rng, field) -> FieldElement:
    """A random element of valuation exactly zero."""
    gf = field.residue_field()
    u = field.lift(gf.element(rng.randrange(1, gf.q)))
    pi = field.uniformizer()
    if pi is not None and rng.random() < 0.5:
        u = u + pi * random_integral(rng, field)
    return u


def random_nonzero(rng, field) -> FieldElement:
    """A random nonzero element, integral or not."""
    x = field.zero()
    while x.is_zero():
        x = random_integral(rng, field)
    if rng.random() < 0.4:
        y = field.zero()
        while y.is_zero():
            y = random_integral(rng, field)
        x = x / y
    return x


def random_integral_poly(rng, field, max_degree, monic=False) -> Poly:
    deg = rng.randint(0 if not monic else 1, max_degree)
    coeffs = [random_integral(rng, field) for _ in range(deg)]
    coeffs.append(field.one() if monic else random_integral(rng, field))
    return Poly(field, coeffs)


def random_separable_monic(rng, field, max_degree) -> Poly:
    """Monic integral separable polynomial of degree 1..max_degree."""
    while True:
        f = random_integral_poly(rng, field, max_degree, monic=True)
        if f.degree >= 1 and is_separable(f):
            return f


def random_eisenstein(rng, field, perturbed=False) -> Poly:
    """A polynomial passing the Eisenstein-type test (or, with
    ``perturbed``, one whose remainder value is at least 2*sigma)."""
    gf = field.residue_field()
    pi = field.uniformizer()
    assert pi is not None
    d = rng.choice((1, 1, 1, 2))
    psibar = rng.choice(irreducibles(gf, d))
    psi = lift_monic(psibar, field)
    l = rng.choice((1, 2, 2, 3))
    if d * l > 6:
        l = 2
    # remainder part: integral of degree < d with a unit coefficient
    r_coeffs = [random_integral(rng, field) for _ in range(d)]
    r_coeffs[rng.randrange(d)] = random_unit(rng, field)
    R = Poly(field, r_coeffs)
    h_deg = d * (l - 1) - 1
    H = random_integral_poly(rng, field, h_deg) if h_deg >= 0 and rng.random() < 0.5 else Poly.zero(field)
    if perturbed:
        if rng.random() < 0.1:
            R = Poly.zero(field)  # remainder 0: value infinity, still >= 2*sigma
        return psi**l + pi * (H * psi) + pi * pi * R
    return psi**l + pi * (H * psi + R)


def random_separable_eisenstein(rng, field) -> Poly:
    while True:
        g = random_eisenstein(rng, field)
        if is_separable(g):
            return g
