"""GF(q) arithmetic, including the prime-power extension fields."""

import itertools

import pytest

from dedekind import DomainError, finite_field
from dedekind.finitefield import is_prime, prime_power

FIELDS = [2, 3, 4, 5, 7, 8, 9]


def test_prime_power():
    assert prime_power(7) == (7, 1)
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    gf = finite_field(q)
    elems = list(gf.elements())
    sample = elems if q <= 5 else elems[:5] + elems[-3:]
    for a, b in itertools.product(elems, elems):
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
        assert gf.add(a, gf.neg(a)) == 0
    for a, b, c in itertools.product(sample, sample, sample):
        assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


@pytest.mark.parametrize("q", FIELDS)
def test_inverses(q):
    gf = finite_field(q)
    for a in range(1, q):
        assert gf.mul(a, gf.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)


@pytest.mark.parametrize("q", FIELDS)
def test_pth_root(q):
    gf = finite_field(q)
    for a in gf.elements():
        assert gf.pow(gf.pth_root(a), gf.p) == a


@pytest.mark.parametrize("q", FIELDS)
def test_mul_is_field_not_modq(q):
    gf = finite_field(q)
    # multiplicative group has order q - 1
    for a in range(1, q):
        assert gf.pow(a, q - 1) == 1


def test_from_int_lands_in_prime_subfield():
    gf = finite_field(9)
    assert gf.from_int(3) == 0
    assert gf.from_int(4) == 1
    assert gf.from_int(-1) == 2


def test_singleton_cache():
    assert finite_field(5) is finite_field(5)


def test_residue_element_ops():
    gf = finite_field(5)
    a, b = gf.element(3), gf.element(4)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert (a - b).value == 4
    assert (a / b).value == (3 * pow(4, -1, 5)) % 5
    assert (-a).value == 2
    assert (a**3).value == pow(3, 3, 5)
    assert a.inverse().value == 2
    assert bool(a) and not bool(gf.element(0))
    with pytest.raises(DomainError):
        a + finite_field(7).element(1)


def test_element_range_check():
    with pytest.raises(ValueError):
        finite_field(5).element(5)
