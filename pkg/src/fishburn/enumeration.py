"""Brute-force enumeration of Fishburn-type matrices.

These generators are the independent oracle for every series coefficient:
they know nothing about q-series and count by exhaustive backtracking over
matrix entries (row-major, with budget and coverage pruning), which is exact
and fast enough for sizes up to ~9.

Conventions: matrices are 0-indexed internally; `size` is the sum of all
entries; the empty matrix is the unique object of size 0 and is counted in
refined tables but not emitted by the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class FishburnMatrix:
    """Upper-triangular nonnegative integer matrix (full square storage)."""

    rows: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def first_row_sum(self) -> int:
        return sum(self.rows[0])

    @property
    def last_column_sum(self) -> int:
        return sum(row[-1] for row in self.rows)

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0
                   for i in range(self.dim) for j in range(i))

    def rows_all_positive(self) -> bool:
        return all(any(v > 0 for v in row) for row in self.rows)

    def columns_all_positive(self) -> bool:
        return all(any(self.rows[i][j] > 0 for i in range(self.dim))
                   for j in range(self.dim))

    def is_row_fishburn(self) -> bool:
        return self.is_upper_triangular() and self.rows_all_positive()

    def is_fishburn(self) -> bool:
        return self.is_row_fishburn() and self.columns_all_positive()

    def reverse_transpose(self) -> "FishburnMatrix":
        """Reflection through the north-east diagonal: (i,j) -> (n-1-j, n-1-i).

        An involution on Fishburn matrices that swaps first-row and
        last-column sums.
        """
        n = self.dim
        return FishburnMatrix(tuple(
            tuple(self.rows[n - 1 - j][n - 1 - i] for j in range(n))
            for i in range(n)))

    def is_self_dual(self) -> bool:
        return self.rows == self.reverse_transpose().rows

    def dump(self) -> str:
        lines = [f"n={self.dim}"]
        lines.extend(" ".join(str(v) for v in row) for row in self.rows)
        return "\n".join(lines)


@dataclass(frozen=True)
class SelfDualMatrix:
    """Self-dual Fishburn matrix stored by its south-east entries.

    `southeast` maps 0-based (i, j) with i <= j and i + j >= dim - 1 to the
    entry; the full matrix is recovered via M[i][j] = M[n-1-j][n-1-i].
    The reduced size is the sum of the stored entries; the diagonal entries
    are those on the anti-diagonal i + j = dim - 1.
    """

    dim: int
    southeast: tuple  # sorted tuple of ((i, j), value), zero entries omitted

    @property
    def reduced_size(self) -> int:
        return sum(v for _, v in self.southeast)

    @property
    def diagonal_entries(self) -> tuple:
        n = self.dim
        se = dict(self.southeast)
        out = []
        for i in range(n):
            j = n - 1 - i
            if i <= j:
                out.append(se.get((i, j), 0))
        return tuple(out)

    def has_zero_diagonal(self) -> bool:
        return all(v == 0 for v in self.diagonal_entries)

    def completed(self) -> FishburnMatrix:
        n = self.dim
        se = dict(self.southeast)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if j < i:
                    row.append(0)
                elif i + j >= n - 1:
                    row.append(se.get((i, j), 0))
                else:
                    row.append(se.get((n - 1 - j, n - 1 - i), 0))
            rows.append(tuple(row))
        return FishburnMatrix(tuple(rows))

    @property
    def last_column_sum(self) -> int:
        # the whole last column lies in the south-east region
        se = dict(self.southeast)
        return sum(se.get((i, self.dim - 1), 0) for i in range(self.dim))


# ---------------------------------------------------------------------------
# generic backtracking over cells


def _fill_cells(cells, budget, conditions, kind_overlap):
    """Yield value assignments (tuples) for `cells` summing to `budget` such
    that every condition receives a positive entry somewhere in its cells.

    `conditions` is a list of (kind, cell-index set); `kind_overlap[kind]` is
    the maximum number of same-kind conditions one cell can satisfy.  The
    remaining budget must cover max over kinds of ceil(unsat/overlap), which
    prunes hopeless branches.  Values are enumerated ascending, so the output
    order is lexicographic in the row-major entry vector.
    """
    ncells = len(cells)
    kinds = sorted(kind_overlap)
    cond_kind = [k for k, _ in conditions]
    cond_cells = [sorted(members) for _, members in conditions]
    if any(not members for members in cond_cells):
        return  # a condition with no cells is unsatisfiable
    cell_conds = [[] for _ in range(ncells)]
    for ci, members in enumerate(cond_cells):
        for idx in members:
            cell_conds[idx].append(ci)
    # conditions freezing after cell `pos` (their last cell is pos)
    freeze_at = [[] for _ in range(ncells)]
    for ci, members in enumerate(cond_cells):
        freeze_at[max(members)].append(ci)
    values = [0] * ncells
    satisfied = [False] * len(cond_cells)
    unsat = {k: sum(1 for ck in cond_kind if ck == k) for k in kinds}

    def rec(pos, left):
        if pos == ncells:
            if left == 0 and not any(unsat.values()):
                yield tuple(values)
            return
        need = 0
        for k in kinds:
            u = unsat[k]
            if u:
                need = max(need, -(-u // kind_overlap[k]))
        if left < need:
            return
        frozen = freeze_at[pos]
        for v in range(left + 1):
            values[pos] = v
            touched = []
            if v > 0:
                for ci in cell_conds[pos]:
                    if not satisfied[ci]:
                        satisfied[ci] = True
                        unsat[cond_kind[ci]] -= 1
                        touched.append(ci)
            if all(satisfied[ci] for ci in frozen):
                yield from rec(pos + 1, left - v)
            for ci in touched:
                satisfied[ci] = False
                unsat[cond_kind[ci]] += 1
        values[pos] = 0

    yield from rec(0, budget)


def _upper_cells(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def _triangular_matrices(size, need_columns):
    for dim in range(1, size + 1):
        cells = _upper_cells(dim)
        index = {cell: k for k, cell in enumerate(cells)}
        conditions = [("row", [index[(i, j)] for j in range(i, dim)])
                      for i in range(dim)]
        overlap = {"row": 1}
        if need_columns:
            conditions += [("col", [index[(i, j)] for i in range(j + 1)])
                           for j in range(dim)]
            overlap["col"] = 1
        for assignment in _fill_cells(cells, size, conditions, overlap):
            rows = [[0] * dim for _ in range(dim)]
            for (i, j), v in zip(cells, assignment):
                rows[i][j] = v
            yield FishburnMatrix(tuple(tuple(r) for r in rows))


def fishburn_matrices(size: int):
    """All Fishburn matrices of the given size, by ascending dimension then
    row-major lexicographic entry order.  size 0 yields the empty stream."""
    if size < 0:
        raise ParameterError("size must be nonnegative")
    return _triangular_matrices(size, need_columns=True)


def row_fishburn_matrices(size: int):
    """All row-Fishburn matrices (rows positive, columns unconstrained)."""
    if size < 0:
        raise ParameterError("size must be nonnegative")
    return _triangular_matrices(size, need_columns=False)


def self_dual_matrices(reduced_size: int):
    """All self-dual Fishburn matrices of the given reduced size.

    Enumerates south-east entries; the completed matrix must be Fishburn,
    which for self-dual matrices reduces to the row conditions (columns are
    their mirror images).  Dimensions range over 1..2*reduced_size.
    """
    if reduced_size < 0:
        raise ParameterError("reduced size must be nonnegative")
    for dim in range(1, 2 * reduced_size + 1):
        cells = [(i, j) for i in range(dim) for j in range(i, dim)
                 if i + j >= dim - 1]
        index = {cell: k for k, cell in enumerate(cells)}
        conditions = []
        for i in range(dim):
            members = set()
            for j in range(max(i, dim - 1 - i), dim):
                members.add(index[(i, j)])
            # mirrored part of row i: south-east column dim-1-i, rows i+1..dim-1-i
            for a in range(i + 1, dim - i):
                cell = (a, dim - 1 - i)
                if cell in index:
                    members.add(index[cell])
            conditions.append(("row", members))
        for assignment in _fill_cells(cells, reduced_size, conditions, {"row": 2}):
            stored = tuple(sorted(
                (cell, v) for cell, v in zip(cells, assignment) if v))
            yield SelfDualMatrix(dim, stored)


# ---------------------------------------------------------------------------
# refined counting


@dataclass
class CountTable:
    """Counts keyed by a statistic tuple; totals include the empty object."""

    family: str
    size: int
    counts: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def marginal(self, axis: int) -> dict:
        out = {}
        for key, c in self.counts.items():
            k = key[axis]
            out[k] = out.get(k, 0) + c
        return out


def refined_counts(family: str, size: int) -> CountTable:
    """Statistic tables: fishburn -> (firstRowSum, lastColumnSum) joint;
    rowFishburn -> (lastColumnSum,); selfDual (keyed by REDUCED size)
    -> (lastColumnSum, allDiagonalZero)."""
    if size < 0:
        raise ParameterError("size must be nonnegative")
    counts = {}

    def bump(key):
        counts[key] = counts.get(key, 0) + 1

    if family == "fishburn":
        if size == 0:
            bump((0, 0))
        for m in fishburn_matrices(size):
            bump((m.first_row_sum, m.last_column_sum))
    elif family == "rowFishburn":
        if size == 0:
            bump((0,))
        for m in row_fishburn_matrices(size):
            bump((m.last_column_sum,))
    elif family == "selfDual":
        if size == 0:
            bump((0, True))
        for m in self_dual_matrices(size):
            bump((m.last_column_sum, m.has_zero_diagonal()))
    else:
        raise ParameterError(
            f"unknown matrix family {family!r}; use fishburn, rowFishburn or selfDual")
    return CountTable(family, size, counts)


@dataclass
class FactsReport:
    """Outcome of the zero-diagonal / row-Fishburn halving checks."""

    m_max: int
    checked: list
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_facts(m_max: int) -> FactsReport:
    """For 1 <= m <= m_max and every last-column sum l, check that self-dual
    matrices of reduced size m split evenly by zero diagonal, and that the
    zero-diagonal half equals the row-Fishburn count r_{m,l}."""
    if m_max < 0:
        raise ParameterError("m_max must be nonnegative")
    checked, failures = [], []
    for m in range(1, m_max + 1):
        sd = refined_counts("selfDual", m)
        rf = refined_counts("rowFishburn", m)
        ells = {key[0] for key in sd.counts} | {key[0] for key in rf.counts}
        for ell in sorted(ells):
            zero_diag = sd.counts.get((ell, True), 0)
            nonzero_diag = sd.counts.get((ell, False), 0)
            s_total = zero_diag + nonzero_diag
            r_count = rf.counts.get((ell,), 0)
            checked.append((m, ell))
            if not (2 * zero_diag == s_total and 2 * r_count == s_total):
                failures.append({
                    "m": m, "ell": ell, "zero_diagonal": zero_diag,
                    "self_dual_total": s_total, "row_fishburn": r_count,
                })
    return FactsReport(m_max, checked, failures)


def self_dual_count_by_full_size(n: int) -> int:
    """Self-dual Fishburn matrices of full (non-reduced) size n, found by
    filtering the plain enumeration; independent of self_dual_matrices."""
    return sum(1 for m in fishburn_matrices(n) if m.is_self_dual())


def distinct_partition_parity(largest: int, weight: int) -> int:
    """(#odd - #even) part counts over partitions of `weight` into distinct
    parts with largest part exactly `largest`, by literal enumeration."""
    if largest < 1 or weight < 1:
        raise ParameterError("arguments must be >= 1")
    rest = weight - largest
    if rest < 0:
        return 0
    total = 0
    pool = range(1, largest)
    for k in range(0, largest):
        for combo in itertools.combinations(pool, k):
            if sum(combo) == rest:
                # part count is k + 1; odd count means k even
                total += 1 if k % 2 == 0 else -1
    return total
