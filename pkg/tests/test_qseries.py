"""q-Pochhammer builders, series families, and the partition side table."""

from fractions import Fraction
from math import inf

import pytest

from fishburn.enumeration import distinct_partition_parity, refined_counts
from fishburn.errors import ParameterError, UnknownFamilyError
from fishburn.qseries import (expand_family, fishburn_numbers,
                              partition_parity_table, q_pochhammer,
                              row_fishburn_numbers, univariate_fishburn_series)
from fishburn.rings import ZZ
from fishburn.series import TruncatedSeries


def xyu(n):
    one = TruncatedSeries.constant(ZZ, 2, n, 1)
    x = TruncatedSeries.variable(ZZ, 2, n, 0)
    y = TruncatedSeries.variable(ZZ, 2, n, 1)
    return one, one - x, one - y


def test_pochhammer_empty_product():
    one, u, w = xyu(4)
    assert q_pochhammer(w, u, 0).terms == {(0, 0): 1}


def test_pochhammer_single_factor():
    one, u, w = xyu(4)
    assert q_pochhammer(w, u, 1).terms == {(0, 1): 1}  # 1 - (1-y) = y


def test_pochhammer_selfpaired():
    one, u, _ = xyu(4)
    assert q_pochhammer(u, u, 2).terms == {(2, 0): 2, (3, 0): -1}


def test_pochhammer_rejects_bad_length():
    one, u, w = xyu(3)
    with pytest.raises(ParameterError):
        q_pochhammer(w, u, -1)


def test_infinite_pochhammer_needs_zero_constant():
    one, u, w = xyu(3)
    with pytest.raises(ParameterError):
        q_pochhammer(w, u, inf)  # q = 1-x has constant term 1


def test_infinite_pochhammer_matches_long_finite_product():
    N = 15
    w = TruncatedSeries.variable(ZZ, 1, N, 0, ("w",))
    assert q_pochhammer(w, w, inf).terms == q_pochhammer(w, w, N + 1).terms


def test_univariate_unknown_sequence():
    with pytest.raises(UnknownFamilyError):
        univariate_fishburn_series("selfDual", 4)


@pytest.mark.parametrize("n", range(13))
def test_min_degree_property(n):
    """Every monomial of (1-y; 1-x)_n has total degree >= n."""
    N = 12
    one, u, w = xyu(N)
    poch = q_pochhammer(w, u, n)
    assert all(sum(e) >= n for e in poch.terms)


@pytest.mark.parametrize("builder_id,n_extra", [
    ("F1", 1), ("G1", 1), ("F3", 1), ("G3", 1),
])
def test_next_summand_vanishes_below_cut(builder_id, n_extra):
    """The cutoff lemma: the first skipped summand has no terms below the
    truncation order."""
    N = 6
    one, u, w = xyu(N)
    a, q = {
        "F1": (w, u), "G1": (w.invert(), u.invert()),
        "F3": (u, u), "G3": (w, u * u),
    }[builder_id]
    assert q_pochhammer(a, q, N + n_extra).is_zero()


def test_f1_low_order_against_enumeration():
    got = expand_family("F1", 3)
    expect = {(0, 0): 1, (0, 1): 1, (1, 1): 1, (0, 2): 1,
              (2, 1): 2, (1, 2): 2, (0, 3): 1}
    assert got.terms == expect


def test_g1_low_order_against_enumeration():
    got = expand_family("G1", 2)
    assert got.terms == {(0, 0): 1, (0, 1): 1, (1, 1): 1, (0, 2): 2}


@pytest.mark.parametrize("family,matrix_family", [("F1", "fishburn"),
                                                  ("G1", "rowFishburn")])
def test_bivariate_coefficients_match_matrix_counts(family, matrix_family):
    m_max = 5
    series = expand_family(family, m_max)
    for m in range(m_max + 1):
        table = refined_counts(matrix_family, m)
        for ell in range(m + 1):
            want = sum(c for key, c in table.counts.items()
                       if (key[-1] if matrix_family == "fishburn" else key[0]) == ell)
            assert series.coefficient((m - ell, ell)) == want, (m, ell)


def test_f1_coefficients_nonnegative():
    series = expand_family("F1", 8)
    assert all(c > 0 for c in series.terms.values())


def test_univariate_fishburn():
    s = univariate_fishburn_series("fishburn", 6)
    assert [s.coefficient((m,)) for m in range(7)] == [1, 1, 2, 5, 15, 53, 217]


def test_univariate_row_fishburn():
    s = univariate_fishburn_series("rowFishburn", 5)
    assert [s.coefficient((m,)) for m in range(6)] == [1, 1, 3, 12, 61, 380]


def test_univariate_matches_diagonal_specialization():
    """The dense fast path agrees with F1(x, x) from the bivariate expansion."""
    N = 8
    f = fishburn_numbers(N)
    F1 = expand_family("F1", N)
    for m in range(N + 1):
        diag = sum(F1.coefficient((m - ell, ell)) for ell in range(m + 1))
        assert diag == f[m]
    r = row_fishburn_numbers(N)
    G1 = expand_family("G1", N)
    for m in range(N + 1):
        diag = sum(G1.coefficient((m - ell, ell)) for ell in range(m + 1))
        assert diag == r[m]


def test_fishburn_order_zero():
    assert fishburn_numbers(0) == [1]


def test_pentagonal_product_sparse():
    got = expand_family("pentagonal-product", 12)
    assert got.terms == {(0,): 1, (1,): -1, (2,): -1, (5,): 1, (7,): 1, (12,): -1}


def test_pentagonal_three_way_to_30():
    N = 30
    one = TruncatedSeries.constant(ZZ, 1, N, 1, ("w",))
    s = expand_family("pentagonal-sum", N)
    prod = expand_family("pentagonal-product", N)
    theta = expand_family("pentagonal-theta", N)
    assert s.equal_up_to(one - prod, N).equal
    assert s.equal_up_to(one - theta, N).equal


def test_kr_first_form_equals_f1():
    N = 7
    kr = expand_family("F3-KR-first-form", N)
    assert kr.equal_up_to(expand_family("F1", N), N).equal


def test_kr_second_form_is_f3():
    N = 7
    assert expand_family("F3-KR-second-form", N).terms == expand_family("F3", N).terms


def test_gamma_family_rejects_gamma_one():
    with pytest.raises(ParameterError):
        expand_family("gamma1-lhs", 4, gamma=Fraction(1), r=Fraction(1, 2))
    with pytest.raises(ParameterError):
        expand_family("gamma2-rhs", 4, gamma=1)


def test_gamma1_requires_nonzero_r():
    with pytest.raises(ParameterError):
        expand_family("gamma1-lhs", 4, gamma=Fraction(1, 2), r=0)


def test_gamma_families_degenerate_to_plain_at_gamma_zero():
    """gamma = 0 removes every gamma factor, leaving the formal-r identity
    specialized at the given rational r."""
    N = 5
    lhs = expand_family("gamma1-lhs", N, gamma=0, r=Fraction(-1))
    rhs = expand_family("gamma1-rhs", N, gamma=0, r=Fraction(-1))
    from fishburn.rings import QQ
    g1 = expand_family("G1", N).map_coefficients(QQ)
    g2 = expand_family("G2", N).map_coefficients(QQ)
    assert lhs.equal_up_to(g1, N).equal
    assert rhs.equal_up_to(g2, N).equal


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        expand_family("F9", 3)


def test_plain_family_rejects_parameters():
    with pytest.raises(ParameterError):
        expand_family("F1", 3, gamma=Fraction(1, 2))


def test_partition_table_examples():
    tab = partition_parity_table(4, 12)
    assert tab.a(1, 1) == 1
    assert tab.a(2, 2) == 1
    assert tab.a(2, 3) == -1
    # zero outside the feasible weight window
    assert tab.a(3, 2) == 0
    assert tab.a(3, 7) == 0  # 7 > 3*4/2 = 6


def test_partition_table_zero_pattern():
    tab = partition_parity_table(8, 30)
    for r in range(1, 9):
        for s in range(1, 31):
            if s < r or s > r * (r + 1) // 2:
                assert tab.a(r, s) == 0, (r, s)


def test_partition_table_matches_direct_enumeration():
    tab = partition_parity_table(6, 18)
    for r in range(1, 7):
        for s in range(1, 19):
            assert tab.a(r, s) == distinct_partition_parity(r, s), (r, s)


def test_partition_table_matches_bivariate_machinery():
    """Cross-check the p-graded expansion against a literal bivariate
    expansion of sum_n (p*w)^{n+1} (w; w)_n."""
    R, S = 4, 8
    N = R + S
    one = TruncatedSeries.constant(ZZ, 2, N, 1, ("p", "w"))
    p = TruncatedSeries.variable(ZZ, 2, N, 0, ("p", "w"))
    w = TruncatedSeries.variable(ZZ, 2, N, 1, ("p", "w"))
    total = TruncatedSeries.zero(ZZ, 2, N, ("p", "w"))
    pref = p * w
    prod = one
    wpow = w
    n = 0
    while n + 1 <= N:
        total = total + pref * prod
        prod = prod * (one - wpow)
        wpow = wpow * w
        pref = pref * (p * w)
        n += 1
    tab = partition_parity_table(R, S)
    for r in range(1, R + 1):
        for s in range(1, S + 1):
            if r + s <= N:
                assert total.coefficient((r, s)) == tab.a(r, s), (r, s)
