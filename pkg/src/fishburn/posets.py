"""Unlabeled posets, interval orders, and ascent sequences.

Small-scale (n <= 6) isomorph-free generation: all naturally labeled strict
orders are produced by choosing downward-closed predecessor sets, then
deduplicated by a canonical form.  Canonicalization minimizes the relation
matrix over relabelings, restricted to permutations compatible with an
iterated degree-refinement invariant, which keeps the search tiny without a
canonical-labeling dependency.

A poset is an interval order iff it avoids an induced 2+2 (two disjoint
2-chains with all four cross-pairs incomparable); these are counted here as
the independent cross-check for the Fishburn numbers.
"""

from __future__ import annotations

from itertools import permutations

from .errors import BoundExceededError, ParameterError

POSET_SIZE_BOUND = 6


class Poset:
    """Finite strict order; rel[i] is the bitmask of elements above i."""

    __slots__ = ("n", "rel", "_canon")

    def __init__(self, n: int, rel, validate: bool = True):
        self.n = n
        self.rel = tuple(rel)
        self._canon = None
        if validate:
            self._validate()

    def _validate(self):
        n, rel = self.n, self.rel
        if len(rel) != n:
            raise ParameterError("relation row count must equal n")
        for i in range(n):
            if rel[i] >> i & 1:
                raise ParameterError(f"relation is not irreflexive at {i}")
            for j in range(n):
                if rel[i] >> j & 1:
                    if rel[j] >> i & 1:
                        raise ParameterError(f"antisymmetry fails at ({i},{j})")
                    if rel[j] & ~rel[i]:
                        raise ParameterError(f"transitivity fails below ({i},{j})")

    # -- basic structure -----------------------------------------------------

    def less(self, i: int, j: int) -> bool:
        return bool(self.rel[i] >> j & 1)

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and not self.less(i, j) and not self.less(j, i)

    @property
    def maximal_count(self) -> int:
        return sum(1 for i in range(self.n) if self.rel[i] == 0)

    @property
    def minimal_count(self) -> int:
        above = 0
        for mask in self.rel:
            above |= mask
        return sum(1 for i in range(self.n) if not (above >> i & 1))

    def dual(self) -> "Poset":
        rel = [0] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.rel[i] >> j & 1:
                    rel[j] |= 1 << i
        return Poset(self.n, rel, validate=False)

    def relabel(self, perm) -> "Poset":
        """perm[i] is the new name of element i."""
        rel = [0] * self.n
        for i in range(self.n):
            mask = self.rel[i]
            j = 0
            while mask:
                if mask & 1:
                    rel[perm[i]] |= 1 << perm[j]
                mask >>= 1
                j += 1
        return Poset(self.n, rel, validate=False)

    # -- isomorphism ---------------------------------------------------------

    def _refined_keys(self):
        n = self.n
        succ = [tuple(j for j in range(n) if self.rel[i] >> j & 1) for i in range(n)]
        pred = [tuple(j for j in range(n) if self.rel[j] >> i & 1) for i in range(n)]
        keys = [(len(succ[i]), len(pred[i])) for i in range(n)]
        for _ in range(2):
            keys = [
                (keys[i],
                 tuple(sorted(keys[j] for j in succ[i])),
                 tuple(sorted(keys[j] for j in pred[i])))
                for i in range(n)
            ]
        return keys

    def canonical_form(self) -> tuple:
        """Lexicographically minimal relation matrix over all relabelings."""
        if self._canon is not None:
            return self._canon
        keys = self._refined_keys()
        order = sorted(range(self.n), key=lambda i: (keys[i], i))
        blocks = []
        for i in order:
            if blocks and keys[blocks[-1][-1]] == keys[i]:
                blocks[-1].append(i)
            else:
                blocks.append([i])
        best = None
        for arrangement in _block_arrangements(blocks):
            perm = [0] * self.n  # old index -> position
            for pos, old in enumerate(arrangement):
                perm[old] = pos
            cand = self.relabel(perm).rel
            if best is None or cand < best:
                best = cand
        self._canon = best
        return best

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.n == other.n and self.canonical_form() == other.canonical_form()

    def is_self_dual(self) -> bool:
        return self.canonical_form() == self.dual().canonical_form()

    def is_interval_order(self) -> bool:
        """2+2-free test: no disjoint chains a<b, c<d with all cross pairs
        incomparable."""
        edges = [(i, j) for i in range(self.n) for j in range(self.n)
                 if self.rel[i] >> j & 1]
        for a, b in edges:
            for c, d in edges:
                if len({a, b, c, d}) == 4 \
                        and self.incomparable(a, c) and self.incomparable(a, d) \
                        and self.incomparable(b, c) and self.incomparable(b, d):
                    return False
        return True

    def __repr__(self):
        pairs = [(i, j) for i in range(self.n) for j in range(self.n)
                 if self.rel[i] >> j & 1]
        return f"Poset(n={self.n}, pairs={pairs})"


def _block_arrangements(blocks):
    def rec(idx):
        if idx == len(blocks):
            yield []
            return
        for tail in rec(idx + 1):
            for perm in permutations(blocks[idx]):
                yield list(perm) + tail
    # build from the back so the first block varies fastest
    for arrangement in rec(0):
        yield arrangement


def _naturally_labeled_orders(n):
    """All strict orders on 0..n-1 with i < j in P implying i < j as ints,
    generated by downward-closed predecessor sets."""
    preds = [0] * n

    def closed_subsets(k):
        # subsets D of {0..k-1} with: i in D implies preds[i] subset of D
        for mask in range(1 << k):
            ok = True
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                if preds[i] & ~mask:
                    ok = False
                    break
                m &= m - 1
            if ok:
                yield mask
        return

    def rec(k):
        if k == n:
            rel = [0] * n
            for j in range(n):
                m = preds[j]
                while m:
                    i = (m & -m).bit_length() - 1
                    rel[i] |= 1 << j
                    m &= m - 1
            yield Poset(n, rel, validate=False)
            return
        for mask in closed_subsets(k):
            preds[k] = mask
            yield from rec(k + 1)
        preds[k] = 0

    yield from rec(0)


def _check_bound(n):
    if n < 1:
        raise ParameterError("poset size must be >= 1")
    if n > POSET_SIZE_BOUND:
        raise BoundExceededError(
            f"poset generation is configured for n <= {POSET_SIZE_BOUND}")


def unlabeled_posets(n: int):
    """All unlabeled posets on n elements (canonical-form deduplication)."""
    _check_bound(n)
    seen = {}
    for p in _naturally_labeled_orders(n):
        seen.setdefault(p.canonical_form(), p)
    return [seen[k] for k in sorted(seen)]


def interval_orders(n: int):
    """All unlabeled 2+2-free posets on n elements, deterministically ordered
    by canonical form."""
    _check_bound(n)
    seen = {}
    for p in _naturally_labeled_orders(n):
        if p.is_interval_order():
            seen.setdefault(p.canonical_form(), p)
    return [seen[k] for k in sorted(seen)]


def interval_order_statistics(n: int) -> dict:
    """Count plus (minimal, maximal)-element joint distribution."""
    joint = {}
    count = 0
    for p in interval_orders(n):
        count += 1
        key = (p.minimal_count, p.maximal_count)
        joint[key] = joint.get(key, 0) + 1
    return {"count": count, "joint": joint,
            "maximal": _marginal(joint, 1), "minimal": _marginal(joint, 0)}


def _marginal(joint, axis):
    out = {}
    for key, c in joint.items():
        out[key[axis]] = out.get(key[axis], 0) + c
    return out


# ---------------------------------------------------------------------------
# ascent sequences


def ascent_sequences(n: int):
    """All ascent sequences of length n (x1 = 0, each entry at most one more
    than the number of ascents so far), in lexicographic order."""
    if n < 0:
        raise ParameterError("length must be nonnegative")
    if n == 0:
        yield ()
        return
    seq = [0] * n

    def rec(i, ascents):
        if i == n:
            yield tuple(seq)
            return
        for v in range(ascents + 2):
            seq[i] = v
            yield from rec(i + 1, ascents + (1 if v > seq[i - 1] else 0))

    yield from rec(1, 0)


def count_ascent_sequences(n: int) -> int:
    """Number of ascent sequences of length n, by direct recursive generation."""
    if n < 0:
        raise ParameterError("length must be nonnegative")
    if n == 0:
        return 1

    def rec(i, last, ascents):
        if i == n:
            return 1
        total = 0
        for v in range(ascents + 2):
            total += rec(i + 1, v, ascents + (1 if v > last else 0))
        return total

    return rec(1, 0, 0)
