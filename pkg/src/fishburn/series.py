"""Sparse truncated multivariate formal power series over an exact ring.

A series lives in R[[x_1..x_v]] / (total degree > N): operations are exact
below the cut and every monomial above it is discarded.  Truncation is by
TOTAL degree; per-variable views can be derived but are not stored.  Values
are immutable after construction and all operations are pure, so series can
be shared freely across threads.

Multiplication is schoolbook with degree-bound pruning; the orders used here
(N <= 60 univariate, N <= 14 multivariate) do not justify anything fancier.
"""

from __future__ import annotations

from collections import namedtuple

from .errors import (
    NonInvertibleError,
    SeriesCompatibilityError,
    SubstitutionError,
    TruncationError,
)

MatchReport = namedtuple("MatchReport", "equal index left right")
MatchReport.__doc__ = """Outcome of equal_up_to: either equal, or the
lexicographically least differing multi-index with both coefficients."""


class TruncatedSeries:
    __slots__ = ("ring", "nvars", "trunc", "names", "terms")

    def __init__(self, ring, nvars, trunc, terms=None, names=None):
        if not 1 <= nvars <= 3:
            raise ValueError("supported variable counts are 1..3")
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        self.ring = ring
        self.nvars = nvars
        self.trunc = trunc
        self.names = tuple(names) if names else _default_names(nvars)
        if len(self.names) != nvars:
            raise ValueError("one name per variable required")
        self.terms = {} if terms is None else terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, ring, nvars, trunc, value, names=None):
        value = ring.coerce(value)
        terms = {} if ring.is_zero(value) else {(0,) * nvars: value}
        return cls(ring, nvars, trunc, terms, names)

    @classmethod
    def variable(cls, ring, nvars, trunc, index, names=None):
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        terms = {exp: ring.one} if trunc >= 1 else {}
        return cls(ring, nvars, trunc, terms, names)

    @classmethod
    def zero(cls, ring, nvars, trunc, names=None):
        return cls(ring, nvars, trunc, {}, names)

    # -- plumbing ----------------------------------------------------------

    def _compat(self, other):
        if self.ring != other.ring:
            raise SeriesCompatibilityError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.nvars != other.nvars:
            raise SeriesCompatibilityError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.trunc != other.trunc:
            raise SeriesCompatibilityError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def _wrap(self, terms):
        return TruncatedSeries(self.ring, self.nvars, self.trunc, terms, self.names)

    def _as_scalar(self, x):
        try:
            return self.ring.coerce(x)
        except TypeError:
            return None

    @property
    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.ring.zero)

    def coefficient(self, exponents):
        exp = tuple(exponents)
        if len(exp) != self.nvars:
            raise SeriesCompatibilityError(
                f"multi-index arity {len(exp)} does not match {self.nvars} variables")
        if sum(exp) > self.trunc:
            raise TruncationError(
                f"degree {sum(exp)} exceeds truncation order {self.trunc}")
        return self.terms.get(exp, self.ring.zero)

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def restrict(self, new_trunc):
        """Re-truncate to a smaller total degree."""
        if new_trunc > self.trunc:
            raise TruncationError(
                f"cannot extend truncation {self.trunc} to {new_trunc}")
        terms = {e: c for e, c in self.terms.items() if sum(e) <= new_trunc}
        return TruncatedSeries(self.ring, self.nvars, new_trunc, terms, self.names)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        scalar = None if isinstance(other, TruncatedSeries) else self._as_scalar(other)
        if scalar is not None:
            other = TruncatedSeries.constant(self.ring, self.nvars, self.trunc, scalar, self.names)
        elif not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._compat(other)
        terms = dict(self.terms)
        zero = self.ring.zero
        for e, c in other.terms.items():
            acc = terms.get(e, zero) + c
            if self.ring.is_zero(acc):
                terms.pop(e, None)
            else:
                terms[e] = acc
        return self._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        scalar = self._as_scalar(other)
        if scalar is None:
            return NotImplemented
        return self + (-scalar)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        scalar = self.ring.coerce(scalar)
        if self.ring.is_zero(scalar):
            return self._wrap({})
        terms = {}
        for e, c in self.terms.items():
            acc = c * scalar
            if not self.ring.is_zero(acc):
                terms[e] = acc
        return self._wrap(terms)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            scalar = self._as_scalar(other)
            if scalar is None:
                return NotImplemented
            return self.scale(scalar)
        self._compat(other)
        bound = self.trunc
        a = sorted(((sum(e), e, c) for e, c in self.terms.items()))
        b = sorted(((sum(e), e, c) for e, c in other.terms.items()))
        terms = {}
        for da, ea, ca in a:
            for db, eb, cb in b:
                if da + db > bound:
                    break
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if exp in terms:
                    terms[exp] = terms[exp] + prod
                else:
                    terms[exp] = prod
        is_zero = self.ring.is_zero
        return self._wrap({e: c for e, c in terms.items() if not is_zero(c)})

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse up to the truncation order.

        Requires an invertible constant term; computed by the order-by-order
        recurrence b_d = -c0^{-1} * sum_{e>=1} a_e b_{d-e}.
        """
        c0 = self.constant_term
        if self.ring.is_zero(c0):
            raise NonInvertibleError("constant term 0 is not invertible")
        c0inv = self.ring.invert(c0)
        zero_exp = (0,) * self.nvars
        # nonconstant terms of self, grouped by total degree
        by_deg = {}
        for e, c in self.terms.items():
            d = sum(e)
            if d:
                by_deg.setdefault(d, []).append((e, c))
        levels = [{zero_exp: c0inv}]  # inverse coefficients, by total degree
        is_zero = self.ring.is_zero
        for d in range(1, self.trunc + 1):
            acc = {}
            for da, entries in by_deg.items():
                if da > d:
                    continue
                for eb, cb in levels[d - da].items():
                    for ea, ca in entries:
                        exp = tuple(x + y for x, y in zip(ea, eb))
                        prod = ca * cb
                        if exp in acc:
                            acc[exp] = acc[exp] + prod
                        else:
                            acc[exp] = prod
            level = {}
            for e, c in acc.items():
                val = -(c0inv * c)
                if not is_zero(val):
                    level[e] = val
            levels.append(level)
        terms = {}
        for level in levels:
            terms.update(level)
        return self._wrap(terms)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            return self.invert() ** (-k)
        out = TruncatedSeries.constant(self.ring, self.nvars, self.trunc, self.ring.one, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute(self, assignment):
        """Compose with per-variable series (zero constant term required).

        `assignment` maps variable index -> replacement series; unmentioned
        variables are substituted by themselves.
        """
        subs = []
        for i in range(self.nvars):
            s = assignment.get(i)
            if s is None:
                s = TruncatedSeries.variable(self.ring, self.nvars, self.trunc, i, self.names)
            else:
                self._compat(s)
                if not self.ring.is_zero(s.constant_term):
                    raise SubstitutionError(
                        f"substitution for variable {self.names[i]} has nonzero "
                        f"constant term {s.constant_term!r}")
            subs.append(s)
        one = TruncatedSeries.constant(self.ring, self.nvars, self.trunc, self.ring.one, self.names)
        pow_cache = [{0: one} for _ in range(self.nvars)]

        def powi(i, k):
            cache = pow_cache[i]
            if k not in cache:
                cache[k] = powi(i, k - 1) * subs[i]
            return cache[k]

        total = TruncatedSeries.zero(self.ring, self.nvars, self.trunc, self.names)
        for e, c in sorted(self.terms.items()):
            mono = one
            for i, k in enumerate(e):
                if k:
                    mono = mono * powi(i, k)
            total = total + mono.scale(c)
        return total

    def map_coefficients(self, new_ring, fn=None):
        """Same series over `new_ring`; coefficients pass through `fn`
        (default: the new ring's coercion)."""
        if fn is None:
            fn = new_ring.coerce
        terms = {}
        for e, c in self.terms.items():
            val = fn(c)
            if not new_ring.is_zero(val):
                terms[e] = val
        return TruncatedSeries(new_ring, self.nvars, self.trunc, terms, self.names)

    def specialize(self, var: int, scalar, new_trunc: int):
        """Substitute a ring scalar for one variable, returning a series in
        the remaining variables truncated at `new_trunc`.

        Unlike `substitute`, a scalar (nonzero constant) replacement mixes
        contributions across total degrees, so this is exact only when the
        series' support satisfies deg_var <= deg_others for every term --
        then terms lost to the original truncation cannot touch output
        degrees <= trunc // 2.  The stored support is checked; `new_trunc`
        must not exceed trunc // 2.
        """
        if self.nvars < 2:
            raise SeriesCompatibilityError("specialize needs at least 2 variables")
        if not 0 <= var < self.nvars:
            raise ValueError("variable index out of range")
        if new_trunc > self.trunc // 2:
            raise TruncationError(
                f"specialization is exact only up to {self.trunc // 2}, "
                f"requested {new_trunc}")
        scalar = self.ring.coerce(scalar)
        powers = {0: self.ring.one}
        terms = {}
        zero = self.ring.zero
        for e, c in self.terms.items():
            k = e[var]
            rest = sum(e) - k
            if k > rest:
                raise TruncationError(
                    "series support violates deg_var <= deg_others; "
                    f"offending index {e}")
            if rest > new_trunc:
                continue
            if k not in powers:
                p = self.ring.one
                for _ in range(k):
                    p = p * scalar
                powers[k] = p
            exp = e[:var] + e[var + 1:]
            acc = terms.get(exp, zero) + c * powers[k]
            terms[exp] = acc
        terms = {e: c for e, c in terms.items() if not self.ring.is_zero(c)}
        names = self.names[:var] + self.names[var + 1:]
        return TruncatedSeries(self.ring, self.nvars - 1, new_trunc, terms, names)

    # -- comparison ----------------------------------------------------------

    def equal_up_to(self, other, order, tol=None) -> MatchReport:
        """Coefficientwise comparison below `order` (inclusive).

        Returns a MatchReport; on mismatch it carries the lexicographically
        least differing multi-index and both coefficients.  For the complex
        ring the comparison uses the ring's absolute tolerance (or `tol`).
        """
        self._compat_loose(other)
        if order > self.trunc or order > other.trunc:
            raise TruncationError(
                f"comparison order {order} exceeds truncation "
                f"({self.trunc}, {other.trunc})")
        keys = set(self.terms) | set(other.terms)
        zero = self.ring.zero
        for e in sorted(keys):
            if sum(e) > order:
                continue
            left = self.terms.get(e, zero)
            right = other.terms.get(e, zero)
            if not self.ring.eq(left, right, tol):
                return MatchReport(False, e, left, right)
        return MatchReport(True, None, None, None)

    def _compat_loose(self, other):
        # comparison allows different truncations (order is checked separately)
        if self.ring != other.ring:
            raise SeriesCompatibilityError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.nvars != other.nvars:
            raise SeriesCompatibilityError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ring == other.ring and self.nvars == other.nvars
                and self.trunc == other.trunc and self.terms == other.terms)

    __hash__ = None  # mutable-by-content; not hashable

    # -- display -------------------------------------------------------------

    def __repr__(self):
        shown = []
        for e in self.support()[:8]:
            c = self.terms[e]
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.names, e) if k)
            if mono:
                shown.append(f"{c}*{mono}" if str(c) != "1" else mono)
            else:
                shown.append(str(c))
        body = " + ".join(shown) if shown else "0"
        if len(self.terms) > 8:
            body += " + ..."
        return f"<{body} | N={self.trunc}, {self.ring.tag}>"


def _default_names(nvars):
    return ("x", "y", "r")[:nvars]
