"""Value groups: exact order, arithmetic, minimum positive elements."""

import random
from decimal import Decimal, getcontext
from math import isqrt

import pytest

from dedekind import (
    DenseQuadratic,
    DomainError,
    GroupElement,
    IntegerRankOne,
    LexPairRankTwo,
    ParseError,
    ScaledInteger,
    compare,
    min_positive,
    scalar_mul,
)

INT = IntegerRankOne()
LEX = LexPairRankTwo()
DQ2 = DenseQuadratic(2)
DQ3 = DenseQuadratic(3)
SI2 = ScaledInteger(2)

ALL = (INT, LEX, DQ2, DQ3, SI2)


def rand_element(rng, gd, lo=-10**6, hi=10**6):
    return gd.element(*(rng.randint(lo, hi) for _ in range(gd.rank)))


class TestExamples:
    def test_lex_compare(self):
        assert compare(LEX.element(0, 1), LEX.element(1, 0)) < 0

    def test_zero_equal(self):
        for gd in ALL:
            assert compare(gd.zero(), gd.zero()) == 0

    def test_quadratic_sign_analysis(self):
        # 3 - 2*sqrt(2) vs 0: squares compare 9 vs 8, so it is positive
        x = DQ2.element(3, -2)
        assert compare(x, DQ2.zero()) > 0
        assert x.is_positive

    def test_min_positive(self):
        assert min_positive(INT) == INT.element(1)
        assert min_positive(LEX) == LEX.element(0, 1)
        assert min_positive(DQ2) is None
        assert min_positive(SI2) == SI2.element(1)

    def test_add_scalar_positive(self):
        assert LEX.element(0, 1) + LEX.element(1, -1) == LEX.element(1, 0)
        assert scalar_mul(3, DQ2.element(1, 0)) == DQ2.element(3, 0)
        assert not LEX.element(0, -2).is_positive


class TestInfinity:
    def test_absorbs_add(self):
        for gd in ALL:
            inf = gd.infinity()
            assert inf + gd.zero() == inf
            assert gd.element(*([5] * gd.rank)) + inf == inf

    def test_above_everything(self, rng):
        for gd in ALL:
            inf = gd.infinity()
            assert compare(inf, inf) == 0
            for _ in range(50):
                x = rand_element(rng, gd)
                assert compare(inf, x) > 0
                assert compare(x, inf) < 0
                assert inf > x

    def test_is_positive(self):
        assert INT.infinity().is_positive

    def test_no_negation(self):
        with pytest.raises(DomainError):
            -INT.infinity()


class TestOrderProperties:
    def test_totality_and_antisymmetry(self, rng):
        for gd in ALL:
            for _ in range(2000):
                x, y = rand_element(rng, gd), rand_element(rng, gd)
                c = compare(x, y)
                assert c in (-1, 0, 1)
                assert compare(y, x) == -c
                assert (c == 0) == (x == y)

    def test_transitivity(self, rng):
        for gd in ALL:
            for _ in range(500):
                x, y, z = (rand_element(rng, gd) for _ in range(3))
                if compare(x, y) <= 0 and compare(y, z) <= 0:
                    assert compare(x, z) <= 0

    def test_translation_invariance(self, rng):
        for gd in ALL:
            for _ in range(2000):
                x, y, z = (rand_element(rng, gd) for _ in range(3))
                assert compare(x, y) == compare(x + z, y + z)

    def test_quadratic_against_decimal(self, rng):
        getcontext().prec = 60
        for gd in (DQ2, DQ3):
            root = Decimal(gd.d).sqrt()
            for _ in range(2000):
                x = rand_element(rng, gd, -10**6, 10**6)
                approx = Decimal(x.coords[0]) + Decimal(x.coords[1]) * root
                assert x.is_positive == (approx > 0)

    def test_group_axioms(self, rng):
        for gd in ALL:
            for _ in range(500):
                x, y, z = (rand_element(rng, gd) for _ in range(3))
                assert x + y == y + x
                assert (x + y) + z == x + (y + z)
                assert x + gd.zero() == x
                assert x + (-x) == gd.zero()
                assert scalar_mul(3, x) == x + x + x


class TestMinPositive:
    def rand_positive(self, rng, gd):
        while True:
            x = rand_element(rng, gd, -10**3, 10**6)
            if x.is_positive:
                return x

    def test_minimum_below_10k_random_positives(self, rng):
        for gd in (INT, LEX, SI2):
            m = min_positive(gd)
            assert m.is_positive
            for _ in range(10_000):
                g = self.rand_positive(rng, gd)
                assert compare(m, g) <= 0

    def test_dense_quadratic_density_witness(self, rng):
        # continued-fraction convergents of sqrt(d) give positive
        # elements arbitrarily close to zero
        for gd in (DQ2, DQ3):
            for _ in range(100):
                g = self.rand_positive(rng, gd)
                below = self._positive_below(gd, g)
                assert below.is_positive
                assert compare(below, g) < 0

    @staticmethod
    def _positive_below(gd, g):
        d = gd.d
        a0 = isqrt(d)
        m, den, a = 0, 1, a0
        h0, h1 = 1, a0
        k0, k1 = 0, 1
        for _ in range(300):
            cand = gd.element(h1, -k1)
            if cand.is_positive and compare(cand, g) < 0:
                return cand
            m = den * a - m
            den = (d - m * m) // den
            a = (a0 + m) // den
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0
        raise AssertionError("no convergent found below g")


class TestDomainSeparation:
    def test_mixed_descriptor_rejected(self):
        with pytest.raises(DomainError):
            compare(INT.element(1), SI2.element(1))
        with pytest.raises(DomainError):
            INT.element(1) + SI2.element(1)
        with pytest.raises(DomainError):
            compare(DQ2.element(1, 0), DQ3.element(1, 0))

    def test_equality_across_descriptors_is_false(self):
        assert INT.element(1) != SI2.element(1)


class TestRendering:
    CASES = [
        (INT.element(3), "3"),
        (INT.element(-7), "-7"),
        (LEX.element(0, 1), "(0,1)"),
        (LEX.element(-2, 5), "(-2,5)"),
        (DQ2.element(3, -2), "3 - 2*sqrt(2)"),
        (DQ2.element(0, 1), "sqrt(2)"),
        (DQ2.element(-1, 3), "-1 + 3*sqrt(2)"),
        (DQ2.element(4, 0), "4"),
        (SI2.element(2), "2*lambda"),
        (SI2.element(1), "lambda"),
        (SI2.element(-1), "-lambda"),
        (SI2.element(0), "0"),
        (INT.infinity(), "inf"),
        (DQ2.infinity(), "inf"),
    ]

    @pytest.mark.parametrize("el,text", CASES)
    def test_render(self, el, text):
        assert str(el) == text

    @pytest.mark.parametrize("el,text", CASES)
    def test_parse_round_trip(self, el, text):
        assert el.group.parse(text) == el

    def test_random_round_trip(self, rng):
        for gd in ALL:
            for _ in range(200):
                x = rand_element(rng, gd, -50, 50)
                assert gd.parse(str(x)) == x

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            LEX.parse("3")
        with pytest.raises(ParseError):
            DQ2.parse("sqrt(3)")
        with pytest.raises(ParseError):
            SI2.parse("2")
        with pytest.raises(ParseError):
            INT.parse("(0,1)")
