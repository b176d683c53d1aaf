"""The four valued fields: valuation, residue, lift, uniformizer, arithmetic."""

from fractions import Fraction

import pytest

from dedekind import (
    DomainError,
    LambdaComposite,
    LambdaTrivial,
    LexBivariate,
    NotAUnit,
    PAdicRationals,
    lift,
    residue,
    uniformizer,
    valuation,
)
from dedekind.grammar import parse_element

from conftest import LC22, LEX2, LT32, QP2, QP5, QP7, VARIANTS, random_integral, random_nonzero, random_unit


class TestDescriptors:
    def test_validation(self):
        with pytest.raises(ValueError):
            PAdicRationals(4)
        with pytest.raises(ValueError):
            LexBivariate(6)
        with pytest.raises(ValueError):
            LambdaTrivial(3, 4)  # 4 is a square
        with pytest.raises(ValueError):
            LambdaComposite(9, 2)

    def test_group_shapes(self):
        assert QP2.group_descriptor().min_positive() == QP2.group_descriptor().element(1)
        assert LEX2.group_descriptor().rank == 2
        assert LC22.min_positive() is None

    def test_spec_strings(self):
        assert QP5.spec_string() == "qp:5"
        assert LEX2.spec_string() == "lex:F2"
        assert LT32.spec_string() == "lambda-trivial:F3:sqrt2"
        assert LC22.spec_string() == "lambda-composite:p2:sqrt2"


class TestValuationExamples:
    def test_padic(self):
        assert valuation(QP2.from_fraction(12)) == QP2.group_descriptor().element(2)
        assert valuation(QP2.zero()).is_infinite

    def test_lex(self):
        x = parse_element(LEX2, "Y + X*Y")
        assert valuation(x) == LEX2.group_descriptor().element(0, 1)

    def test_lambda_composite_min_of_mixed_terms(self):
        # value of 2 + X is min(1, sqrt(2)) = 1, exactly
        x = parse_element(LC22, "2 + X")
        assert valuation(x) == LC22.group_descriptor().element(1, 0)

    def test_lambda_trivial(self):
        x = parse_element(LT32, "X^2 + X^3")
        assert valuation(x) == LT32.group_descriptor().element(2)


class TestResidueExamples:
    def test_padic(self):
        assert residue(QP5.from_fraction(Fraction(7, 3))).value == 4

    def test_lex(self):
        x = parse_element(LEX2, "(1 + X + Y)/(1 + X*Y)")
        assert residue(x).value == 1

    def test_not_a_unit(self):
        with pytest.raises(NotAUnit):
            residue(QP2.from_fraction(Fraction(1, 2)))
        with pytest.raises(NotAUnit):
            residue(parse_element(LEX2, "1/Y"))

    def test_maximal_ideal_maps_to_zero(self):
        assert residue(QP2.from_fraction(12)).value == 0
        assert residue(LEX2.zero()).value == 0
        assert residue(parse_element(LT32, "X")).value == 0

    def test_lambda_composite(self):
        # (3 + X) is a unit: minimal term is 3 at value 0
        x = parse_element(LC22, "3 + X")
        assert residue(x).value == 1


class TestLift:
    def test_examples(self):
        gf5 = QP5.residue_field()
        assert lift(gf5.element(4), QP5) == QP5.from_fraction(4)
        gf2 = LEX2.residue_field()
        assert lift(gf2.element(1), LEX2) == LEX2.one()

    def test_round_trip_exhaustive_f7(self):
        for r in QP7.residue_field().elements():
            el = QP7.residue_field().element(r)
            assert residue(lift(el, QP7)) == el

    def test_round_trip_all_variants(self):
        for field in VARIANTS:
            gf = field.residue_field()
            for r in gf.elements():
                el = gf.element(r)
                assert residue(lift(el, field)) == el


class TestUniformizer:
    def test_examples(self):
        assert uniformizer(PAdicRationals(3)) == PAdicRationals(3).from_fraction(3)
        assert uniformizer(LEX2) == parse_element(LEX2, "Y")
        assert uniformizer(LC22) is None
        assert uniformizer(LT32) == parse_element(LT32, "X")

    def test_value_is_min_positive(self):
        for field in VARIANTS:
            pi = uniformizer(field)
            if field.min_positive() is None:
                assert pi is None
            else:
                assert valuation(pi) == field.min_positive()

    def test_element_of_value(self, rng):
        for field in VARIANTS:
            gd = field.group_descriptor()
            for _ in range(100):
                g = gd.element(*(rng.randint(-6, 6) for _ in range(gd.rank)))
                assert valuation(field.element_of_value(g)) == g


class TestArithmeticExamples:
    def test_rationals(self):
        assert QP2.from_fraction(Fraction(1, 2)) + QP2.from_fraction(Fraction(1, 3)) == QP2.from_fraction(Fraction(5, 6))

    def test_function_field_cancellation(self):
        a = parse_element(LEX2, "X/(X + Y)")
        b = parse_element(LEX2, "(X + Y)/X")
        assert a * b == LEX2.one()

    def test_sub_self_is_zero(self, rng):
        for field in VARIANTS:
            for _ in range(50):
                x = random_nonzero(rng, field)
                assert (x - x).is_zero()

    def test_division_by_zero(self):
        for field in VARIANTS:
            with pytest.raises(ZeroDivisionError):
                field.one() / field.zero()

    def test_mixed_fields_rejected(self):
        with pytest.raises(DomainError):
            QP2.one() + QP5.one()


class TestFieldAxioms:
    def test_random_identities(self, rng):
        for field in VARIANTS:
            for _ in range(60):
                x, y, z = (random_nonzero(rng, field) for _ in range(3))
                assert (x + y) * z == x * z + y * z
                assert x * y == y * x
                assert (x / y) * y == x
                assert x + (-x) == field.zero()
                assert (x / y) / (x / y) == field.one()


class TestValuationLaws:
    def pools(self, rng, field, n=100):
        return [random_nonzero(rng, field) for _ in range(n)]

    def test_ultrametric_10k_pairs(self, rng):
        for field in VARIANTS:
            pool = self.pools(rng, field)
            for x in pool:
                vx = valuation(x)
                for y in pool:
                    vy = valuation(y)
                    vs = valuation(x + y)
                    low = min(vx, vy)
                    assert vs >= low
                    if vx != vy:
                        assert vs == low

    def test_multiplicativity(self, rng):
        for field in VARIANTS:
            pool = self.pools(rng, field, 40)
            for x in pool:
                for y in pool[:25]:
                    assert valuation(x * y) == valuation(x) + valuation(y)

    def test_zero_iff_infinite(self, rng):
        for field in VARIANTS:
            assert valuation(field.zero()).is_infinite
            for _ in range(30):
                x = random_nonzero(rng, field)
                assert not valuation(x).is_infinite


class TestResidueHomomorphism:
    def test_multiplicative_on_units(self, rng):
        for field in VARIANTS:
            for _ in range(300):
                x, y = random_unit(rng, field), random_unit(rng, field)
                assert residue(x * y) == residue(x) * residue(y)

    def test_ring_homomorphism_on_integral_elements(self, rng):
        for field in VARIANTS:
            for _ in range(200):
                x, y = random_integral(rng, field), random_integral(rng, field)
                assert residue(x + y) == residue(x) + residue(y)
                assert residue(x * y) == residue(x) * residue(y)


class TestCanonicalForm:
    def test_parse_str_round_trip(self, rng):
        for field in VARIANTS:
            for _ in range(200):
                x = random_nonzero(rng, field)
                assert parse_element(field, str(x)) == x

    def test_canonicalization_idempotent(self, rng):
        # rebuilding an element from its own parts changes nothing
        for field in (LEX2, LT32, LC22):
            for _ in range(100):
                x = random_nonzero(rng, field)
                num, den = x.value
                import dedekind.ratfunc as rf

                assert rf.frac_canon(field._dom, field.nvars, dict(num), dict(den)) == (num, den)

    def test_integrality(self, rng):
        for field in VARIANTS:
            for _ in range(100):
                x = random_integral(rng, field)
                assert x.is_integral()
