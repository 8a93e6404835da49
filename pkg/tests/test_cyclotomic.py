"""Cyclotomic field arithmetic and the complex embedding."""

import random
from fractions import Fraction

import mpmath as mp
import pytest

from fishburn.cyclotomic import cyclotomic_polynomial, euler_phi, get_field
from fishburn.errors import NonInvertibleError


KNOWN_POLYS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("k,coeffs", sorted(KNOWN_POLYS.items()))
def test_cyclotomic_polynomials(k, coeffs):
    assert cyclotomic_polynomial(k) == coeffs


@pytest.mark.parametrize("k", range(1, 13))
def test_degree_is_euler_phi(k):
    assert len(cyclotomic_polynomial(k)) - 1 == euler_phi(k)


def test_k1_is_rationals():
    F = get_field(1)
    assert F.zeta() == F.one
    e = F.from_rational(Fraction(3, 7))
    assert (e * e.inverse()) == F.one
    assert e.as_rational() == Fraction(3, 7)


def test_k2_zeta_is_minus_one():
    F = get_field(2)
    z = F.zeta()
    assert z == F.from_rational(-1)
    assert (F.one + z) == F.zero


def test_k3_norm():
    F = get_field(3)
    z = F.zeta()
    # zeta^2 + zeta + 1 = 0 and (1 - zeta)(1 - zeta^2) = 3
    assert z * z + z + 1 == F.zero
    prod = (F.one - z) * (F.one - z ** 2)
    assert prod == F.from_rational(3)
    inv = (F.one - z).inverse()
    assert inv * (F.one - z) == F.one


def test_zeta_power_wraps():
    F = get_field(5)
    assert F.zeta(7) == F.zeta(2)
    assert F.zeta(5) == F.one


@pytest.mark.parametrize("k", range(1, 9))
def test_random_nonzero_elements_invert(k):
    F = get_field(k)
    rng = random.Random(100 + k)
    for _ in range(25):
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(F.degree)]
        e = F.element(coeffs)
        if not e:
            continue
        assert e * e.inverse() == F.one


def test_zero_has_no_inverse():
    F = get_field(4)
    with pytest.raises(NonInvertibleError):
        F.zero.inverse()


def test_conductor_mismatch_rejected():
    a = get_field(3).zeta()
    b = get_field(4).zeta()
    with pytest.raises(ValueError, match="conductor"):
        a + b


@pytest.mark.parametrize("k", [2, 3, 4, 6, 8, 12])
def test_embedding_consistency(k):
    """Exact products agree with their 60-digit complex images."""
    F = get_field(k)
    rng = random.Random(9 + k)
    with mp.workdps(60):
        for _ in range(10):
            a = F.element([rng.randint(-3, 3) for _ in range(F.degree)])
            b = F.element([rng.randint(-3, 3) for _ in range(F.degree)])
            exact = (a * b).embed(60)
            numeric = a.embed(60) * b.embed(60)
            assert abs(exact - numeric) < mp.mpf("1e-40")


def test_embedding_of_primitive_root():
    F = get_field(8)
    with mp.workdps(60):
        z = F.zeta().embed(60)
        assert abs(z ** 8 - 1) < mp.mpf("1e-50")
        assert abs(z ** 4 + 1) < mp.mpf("1e-50")
