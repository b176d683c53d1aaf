"""Factorization over the residue fields, cross-checked by enumeration."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from dedekind import PreconditionError, ResiduePoly, factor, finite_field, irreducibles, is_irreducible
from dedekind.oracle import exhaustive_factor
from dedekind.residue_factor import monic_polys

GF2 = finite_field(2)
GF3 = finite_field(3)
GF4 = finite_field(4)
GF5 = finite_field(5)


def rp(gf, *coeffs):
    return ResiduePoly(gf, coeffs)


class TestExamples:
    def test_square_in_char_two(self):
        fact = factor(rp(GF2, 1, 0, 1))  # x^2 + 1 = (x+1)^2
        assert fact.factors == ((rp(GF2, 1, 1), 2),)

    def test_cube_of_x(self):
        fact = factor(rp(GF2, 0, 0, 0, 1))  # x^3
        assert fact.factors == ((rp(GF2, 0, 1), 3),)

    def test_split_over_f5(self):
        fact = factor(rp(GF5, 1, 0, 1))  # x^2 + 1 = (x+2)(x+3)
        assert fact.factors == ((rp(GF5, 2, 1), 1), (rp(GF5, 3, 1), 1))

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            factor(ResiduePoly.zero(GF2))
        with pytest.raises(PreconditionError):
            factor(ResiduePoly.one(GF2))


class TestIsIrreducible:
    def test_examples(self):
        assert is_irreducible(rp(GF2, 1, 1, 1))  # x^2 + x + 1
        assert not is_irreducible(rp(GF2, 1, 0, 1))  # x^2 + 1
        assert is_irreducible(rp(GF2, 1, 1, 0, 1))  # x^3 + x + 1

    def test_counts(self):
        # numbers of monic irreducibles over GF(q): necklace counts
        assert len(irreducibles(GF2, 1)) == 2
        assert len(irreducibles(GF2, 2)) == 1
        assert len(irreducibles(GF2, 3)) == 2
        assert len(irreducibles(GF2, 4)) == 3
        assert len(irreducibles(GF3, 2)) == 3
        assert len(irreducibles(GF4, 2)) == 6

    def test_degree_zero_rejected(self):
        with pytest.raises(PreconditionError):
            is_irreducible(ResiduePoly.one(GF2))


class TestFactorProperties:
    @pytest.mark.parametrize("gf,max_deg", [(GF2, 5), (GF3, 4), (GF4, 3), (GF5, 3)])
    def test_reconstruction_and_certificates(self, gf, max_deg):
        for deg in range(1, max_deg + 1):
            for f in monic_polys(gf, deg):
                fact = factor(f)
                assert fact.product() == f
                assert sum(l * phi.degree for phi, l in fact) == deg
                for phi, l in fact:
                    assert l >= 1
                    assert phi.is_monic()
                    assert is_irreducible(phi)

    def test_non_monic_unit(self):
        f = rp(GF3, 2, 0, 2)  # 2*(x^2 + 1), irreducible over GF(3)
        fact = factor(f)
        assert fact.unit == 2
        assert fact.factors == ((rp(GF3, 1, 0, 1), 1),)
        assert fact.product() == f

    def test_deterministic_order(self):
        f = rp(GF5, 0, 1, 0, 1)  # x(x^2+1) = x (x+2)(x+3)
        fact = factor(f)
        assert [phi.coeffs for phi, _ in fact.factors] == [(0, 1), (2, 1), (3, 1)]
        assert factor(f) == fact

    def test_repeated_indices(self):
        f = rp(GF2, 0, 1) ** 2 * rp(GF2, 1, 1)
        fact = factor(f)
        assert fact.s == 2
        assert fact.repeated_indices == (0,)

    def test_agrees_with_exhaustive(self):
        for gf, max_deg in ((GF2, 4), (GF3, 3), (GF4, 2)):
            for deg in range(1, max_deg + 1):
                for f in monic_polys(gf, deg):
                    assert factor(f) == exhaustive_factor(f)

    def test_char_p_power_case(self):
        # (x+1)^4 over GF(2): derivative vanishes twice along the way
        f = rp(GF2, 1, 1) ** 4
        assert factor(f).factors == ((rp(GF2, 1, 1), 4),)
        # mixed: x^2 * (x+1)^3 over GF(2)
        g = rp(GF2, 0, 1) ** 2 * rp(GF2, 1, 1) ** 3
        assert factor(g).factors == ((rp(GF2, 0, 1), 2), (rp(GF2, 1, 1), 3))

    def test_frobenius_coefficient_roots(self):
        # over GF(4): (x + a)^2 = x^2 + a^2 needs a coefficient p-th root
        for a in range(4):
            f = rp(GF4, a, 1) ** 2
            assert factor(f).factors == ((rp(GF4, a, 1), 2),)


class TestConcurrency:
    def test_table_initialization_race(self):
        import dedekind.residue_factor as rfmod

        rfmod._irreducible_table.cache_clear()

        def job(d):
            return irreducibles(GF3, d)

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(job, [3] * 16))
        assert all(r == results[0] for r in results)
        rfmod._irreducible_table.cache_clear()
