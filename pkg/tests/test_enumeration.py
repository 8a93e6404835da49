"""Matrix enumeration oracles: counts, statistics, duality, facts."""

import pytest

from fishburn.enumeration import (FishburnMatrix, distinct_partition_parity,
                                  fishburn_matrices, refined_counts,
                                  row_fishburn_matrices,
                                  self_dual_count_by_full_size,
                                  self_dual_matrices, verify_facts)
from fishburn.errors import ParameterError


def test_size_one():
    assert [m.rows for m in fishburn_matrices(1)] == [((1,),)]


def test_size_two():
    got = [m.rows for m in fishburn_matrices(2)]
    assert got == [((2,),), ((1, 0), (0, 1))]


def test_size_three_statistics():
    mats = list(fishburn_matrices(3))
    assert len(mats) == 5
    by_ell = {}
    for m in mats:
        by_ell[m.last_column_sum] = by_ell.get(m.last_column_sum, 0) + 1
    assert by_ell == {1: 2, 2: 2, 3: 1}


def test_size_zero_is_empty_stream():
    assert list(fishburn_matrices(0)) == []
    assert refined_counts("fishburn", 0).counts == {(0, 0): 1}


def test_unrefined_totals():
    assert [sum(1 for _ in fishburn_matrices(m)) for m in range(1, 8)] == \
        [1, 2, 5, 15, 53, 217, 1014]
    assert [sum(1 for _ in row_fishburn_matrices(m)) for m in range(1, 7)] == \
        [1, 3, 12, 61, 380, 2815]
    assert [sum(1 for _ in self_dual_matrices(m)) for m in range(1, 6)] == \
        [2, 6, 24, 122, 760]


def test_all_generated_matrices_are_valid():
    for m in fishburn_matrices(4):
        assert m.is_fishburn() and m.size == 4
    for m in row_fishburn_matrices(4):
        assert m.is_row_fishburn() and m.size == 4
    for m in self_dual_matrices(3):
        completed = m.completed()
        assert completed.is_fishburn()
        assert completed.is_self_dual()
        assert m.reduced_size == 3


def test_deterministic_order():
    first = [m.rows for m in fishburn_matrices(4)]
    second = [m.rows for m in fishburn_matrices(4)]
    assert first == second
    dims = [m.dim for m in fishburn_matrices(4)]
    assert dims == sorted(dims)


def test_refined_fishburn_m2():
    assert refined_counts("fishburn", 2).counts == {(2, 2): 1, (1, 1): 1}


def test_marginals():
    table = refined_counts("fishburn", 3)
    assert table.marginal(1) == {1: 2, 2: 2, 3: 1}   # by last-column sum
    assert table.marginal(0) == {1: 2, 2: 2, 3: 1}   # by first-row sum
    assert table.total == 5


def test_coefficient_oracle_cap():
    from fishburn.errors import ParameterError
    from fishburn.identities import verify_coefficient_oracle
    with pytest.raises(ParameterError, match="capped"):
        verify_coefficient_oracle("F1", 8)


def test_refined_row_fishburn_m2():
    got = refined_counts("rowFishburn", 2)
    assert got.counts == {(1,): 1, (2,): 2}
    mats = [m.rows for m in row_fishburn_matrices(2)]
    assert ((2,),) in mats
    assert ((1, 0), (0, 1)) in mats
    assert ((0, 1), (0, 1)) in mats


def test_refined_self_dual_m1():
    got = refined_counts("selfDual", 1)
    assert got.counts == {(1, False): 1, (1, True): 1}
    mats = list(self_dual_matrices(1))
    dims = sorted(m.dim for m in mats)
    assert dims == [1, 2]
    two = next(m for m in mats if m.dim == 2)
    assert two.completed().rows == ((1, 0), (0, 1))
    assert two.has_zero_diagonal()   # anti-diagonal entry is the corner 0


def test_reverse_transpose_involution_swaps_statistics():
    for m in fishburn_matrices(5):
        rt = m.reverse_transpose()
        assert rt.is_fishburn()
        assert rt.reverse_transpose().rows == m.rows
        assert rt.first_row_sum == m.last_column_sum
        assert rt.last_column_sum == m.first_row_sum


@pytest.mark.parametrize("m", range(1, 8))
def test_joint_table_swap_symmetric(m):
    table = refined_counts("fishburn", m).counts
    for (r, ell), c in table.items():
        assert table.get((ell, r), 0) == c


def test_self_dual_completion_is_fixed_point():
    for m in self_dual_matrices(3):
        completed = m.completed()
        assert completed.rows == completed.reverse_transpose().rows


def test_verify_facts():
    report = verify_facts(5)
    assert report.ok
    assert (1, 1) in report.checked
    assert report.m_max == 5


def test_verify_facts_empty():
    report = verify_facts(0)
    assert report.ok and report.checked == []


def test_self_dual_by_full_size():
    assert [self_dual_count_by_full_size(n) for n in range(1, 6)] == \
        [1, 2, 3, 7, 13]


def test_partition_parity_examples():
    assert distinct_partition_parity(1, 1) == 1
    assert distinct_partition_parity(2, 3) == -1
    assert distinct_partition_parity(3, 6) == 1
    assert distinct_partition_parity(5, 3) == 0  # weight below largest part


def test_partition_parity_rejects_bad_args():
    with pytest.raises(ParameterError):
        distinct_partition_parity(0, 3)


def test_dump_format():
    m = FishburnMatrix(((1, 1), (0, 1)))
    assert m.dump() == "n=2\n1 1\n0 1"
