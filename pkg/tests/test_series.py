"""Truncated-series core: arithmetic, inversion, substitution, comparison."""

import random
from fractions import Fraction

import pytest

from fishburn.errors import (NonInvertibleError, SeriesCompatibilityError,
                             SubstitutionError, TruncationError)
from fishburn.rings import QQ, ZZ
from fishburn.series import TruncatedSeries


def blocks(n, ring=ZZ):
    one = TruncatedSeries.constant(ring, 2, n, 1)
    x = TruncatedSeries.variable(ring, 2, n, 0)
    y = TruncatedSeries.variable(ring, 2, n, 1)
    return one, x, y


def test_add_variables():
    _, x, y = blocks(2)
    assert (x + y).terms == {(1, 0): 1, (0, 1): 1}


def test_mul_telescoping_geometric():
    one, x, _ = blocks(3)
    geom = one + x + x * x + x * x * x
    assert ((one - x) * geom).terms == {(0, 0): 1}


def test_mul_square():
    one, _, y = blocks(2)
    sq = (one - y) * (one - y)
    assert sq.terms == {(0, 0): 1, (0, 1): -2, (0, 2): 1}


def test_invert_geometric():
    one, x, _ = blocks(3)
    assert (one - x).invert().terms == {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}


def test_invert_is_two_sided_inverse():
    one, _, y = blocks(4)
    inv = (one - y).invert()
    assert ((one - y) * inv).terms == {(0, 0): 1}
    assert (inv * (one - y)).terms == {(0, 0): 1}


def test_invert_bivariate_product():
    one, x, y = blocks(2)
    inv = ((one - y) * (one - x)).invert()
    assert inv.terms == {(0, 0): 1, (1, 0): 1, (0, 1): 1,
                         (2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_invert_rejects_zero_constant():
    _, x, _ = blocks(3)
    with pytest.raises(NonInvertibleError):
        x.invert()


def test_invert_rejects_non_unit_integer_constant():
    one, x, _ = blocks(3)
    with pytest.raises(NonInvertibleError, match="2"):
        (one + one - x).invert()
    # the same constant is fine over the rationals
    oneq, xq, _ = blocks(3, QQ)
    inv = (oneq + oneq - xq).invert()
    assert inv.constant_term == Fraction(1, 2)


def test_pow():
    one, x, _ = blocks(2)
    assert ((one - x) ** 0).terms == {(0, 0): 1}
    assert ((one - x) ** -1).terms == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    assert ((one - x) ** 2).terms == {(0, 0): 1, (1, 0): -2, (2, 0): 1}


def test_substitute_identity():
    _, x, _ = blocks(4)
    s = x + x * x
    assert s.substitute({0: x}).terms == s.terms
    assert s.substitute({}).terms == s.terms


def test_substitute_shift():
    one, x, _ = blocks(3)
    target = -x * (one - x).invert()
    assert x.substitute({0: target}).terms == {(1, 0): -1, (2, 0): -1, (3, 0): -1}


def test_substitute_square_in_y():
    one, _, y = blocks(3)
    target = -y * (one - y).invert()
    got = (y * y).substitute({1: target})
    assert got.terms == {(0, 2): 1, (0, 3): 2}


def test_substitute_rejects_const_term():
    one, x, _ = blocks(3)
    with pytest.raises(SubstitutionError):
        x.substitute({0: one + x})


def test_coefficient_lookup_and_bounds():
    one, x, y = blocks(3)
    s = one + (x * x * y).scale(2)
    assert s.coefficient((2, 1)) == 2
    assert s.coefficient((1, 1)) == 0
    with pytest.raises(TruncationError):
        s.coefficient((2, 2))


def test_equal_up_to():
    one, x, _ = blocks(3)
    s = one + x
    assert s.equal_up_to(s, 3).equal
    t = one + x + x ** 3
    assert s.equal_up_to(t, 2).equal       # difference beyond the cut
    u = one + x + x                        # 1 + 2x
    rep = s.equal_up_to(u, 2)
    assert not rep.equal
    assert rep.index == (1, 0) and rep.left == 1 and rep.right == 2


def test_mismatch_witness_is_lexicographically_least():
    one, x, y = blocks(3)
    a = one + x + y
    b = one + x * 2 + y * 3
    rep = a.equal_up_to(b, 3)
    assert rep.index == (0, 1)  # (0,1) sorts before (1,0)


def test_incompatible_operands():
    one, x, _ = blocks(3)
    other = TruncatedSeries.variable(ZZ, 2, 4, 0)
    with pytest.raises(SeriesCompatibilityError, match="truncation"):
        x + other
    uni = TruncatedSeries.variable(ZZ, 1, 3, 0)
    with pytest.raises(SeriesCompatibilityError, match="variable count"):
        x * uni
    rational = TruncatedSeries.variable(QQ, 2, 3, 0)
    with pytest.raises(SeriesCompatibilityError, match="ring"):
        x + rational


def test_restrict_matches_recomputation():
    one, x, y = blocks(6)
    s = ((one - x) * (one - y)).invert() * (one + x * y)
    one4, x4, y4 = blocks(4)
    t = ((one4 - x4) * (one4 - y4)).invert() * (one4 + x4 * y4)
    assert s.restrict(4).terms == t.terms


def _random_series(rng, n, max_terms=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, n)
        j = rng.randint(0, n - i)
        c = rng.randint(-4, 4)
        if c:
            terms[(i, j)] = terms.get((i, j), 0) + c
    terms = {e: c for e, c in terms.items() if c}
    return TruncatedSeries(ZZ, 2, n, terms)


def test_ring_laws_on_random_series():
    rng = random.Random(421)
    n = 5
    for _ in range(60):
        a, b, c = (_random_series(rng, n) for _ in range(3))
        assert ((a + b) + c).terms == (a + (b + c)).terms
        assert (a * b).terms == (b * a).terms
        assert (a * (b + c)).terms == (a * b + a * c).terms
        assert ((a * b) * c).terms == (a * (b * c)).terms


def test_random_unit_series_inverse():
    rng = random.Random(731)
    n = 5
    for _ in range(40):
        a = _random_series(rng, n)
        unit = 1 if rng.random() < 0.5 else -1
        a = a - a.constant_term + unit   # force a unit constant term
        inv = a.invert()
        assert (a * inv).terms == {(0, 0): 1}
        assert (inv * a).terms == {(0, 0): 1}


def test_substitute_respects_products():
    rng = random.Random(9000)
    n = 5
    one = TruncatedSeries.constant(ZZ, 2, n, 1)
    x = TruncatedSeries.variable(ZZ, 2, n, 0)
    y = TruncatedSeries.variable(ZZ, 2, n, 1)
    sigma = {0: x + x * y, 1: -y + y * y}
    for _ in range(30):
        a, b = _random_series(rng, n), _random_series(rng, n)
        lhs = (a * b).substitute(sigma)
        rhs = a.substitute(sigma) * b.substitute(sigma)
        assert lhs.equal_up_to(rhs, n).equal


def test_truncation_monotonicity():
    rng = random.Random(77)
    for _ in range(30):
        a6, b6 = _random_series(rng, 6), _random_series(rng, 6)
        prod6 = (a6 * b6).restrict(3)
        a3 = a6.restrict(3)
        b3 = b6.restrict(3)
        assert prod6.terms == (a3 * b3).terms


def test_specialize_requires_support_property():
    n = 6
    one = TruncatedSeries.constant(ZZ, 3, n, 1)
    r = TruncatedSeries.variable(ZZ, 3, n, 2)
    with pytest.raises(TruncationError, match="support"):
        (one + r).specialize(2, -1, 3)


def test_specialize_sums_variable_powers():
    n = 6
    x = TruncatedSeries.variable(ZZ, 3, n, 0)
    r = TruncatedSeries.variable(ZZ, 3, n, 2)
    s = x * r + x * x * r * r + x
    # at r = -1: x*(-1) + x^2*(+1) + x = x^2
    got = s.specialize(2, -1, 3)
    assert got.terms == {(2, 0): 1}
    assert got.nvars == 2
