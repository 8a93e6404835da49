"""Exact arithmetic in cyclotomic fields Q(zeta_k).

Elements are residue polynomials in zeta with rational coefficients, reduced
modulo the k-th cyclotomic polynomial Phi_k, so every nonzero element has an
exact inverse (extended gcd over Q[x]).  Conductors stay small here (the
default cap is 12, where the residue degree phi(12) = 4), which keeps the
schoolbook polynomial arithmetic essentially free.

Phi_k itself is computed exactly by iterated division of x^k - 1 by the
cyclotomic polynomials of the proper divisors of k.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd

import mpmath as mp

from .errors import NonInvertibleError

DEFAULT_CONDUCTOR_CAP = 12


def _poly_trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num, den):
    """Exact division of integer/rational coefficient lists (ascending)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        q = c if lead == 1 else Fraction(c, lead)
        out[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
    return out, _poly_trim(num)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple:
    """Coefficients of Phi_k, ascending, as exact integers."""
    if k < 1:
        raise ValueError("conductor must be >= 1")
    poly = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for d in range(1, k):
        if k % d == 0:
            q, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError(f"Phi_{d} does not divide x^{k}-1")
            poly = q
    return tuple(int(c) for c in poly)


def euler_phi(k: int) -> int:
    return sum(1 for j in range(1, k + 1) if gcd(j, k) == 1)


class CyclotomicField:
    """The field Q(zeta_k); produces and operates on CyclotomicElement."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("conductor must be >= 1")
        self.k = k
        self.modulus = cyclotomic_polynomial(k)
        self.degree = len(self.modulus) - 1  # phi(k)
        # x^j mod Phi_k for j = 0 .. 2*degree - 2 (enough for products) and
        # additionally up to k so zeta powers can be written down directly.
        self._xpow = self._power_table(max(2 * self.degree - 1, k + 1))

    def _power_table(self, upto):
        table = []
        d = self.degree
        for j in range(upto):
            if j < d:
                row = [Fraction(0)] * d
                row[j] = Fraction(1)
            else:
                # x^j = x * x^(j-1), reduced
                prev = table[j - 1]
                row = [Fraction(0)] + list(prev[: d - 1])
                lead = prev[d - 1]
                if lead:
                    for i in range(d):
                        row[i] -= lead * self.modulus[i]
            table.append(row)
        return table

    # -- constructors -----------------------------------------------------

    def element(self, coeffs) -> "CyclotomicElement":
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            raise ValueError("residue degree too large")
        vec += [Fraction(0)] * (self.degree - len(vec))
        return CyclotomicElement(self, tuple(vec))

    def from_rational(self, c) -> "CyclotomicElement":
        return self.element([Fraction(c)])

    def zeta(self, power: int = 1) -> "CyclotomicElement":
        row = self._xpow[power % self.k]
        return CyclotomicElement(self, tuple(row))

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    # -- arithmetic kernels ------------------------------------------------

    def _mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        out = [Fraction(0)] * d
        for j, c in enumerate(prod):
            if c:
                row = self._xpow[j]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def _invert(self, a):
        # extended Euclid on (residue poly of a, Phi_k) over Q[x]
        r0 = list(self.modulus)
        r1 = _poly_trim([Fraction(c) for c in a])
        if not r1:
            raise NonInvertibleError("zero has no inverse in Q(zeta_%d)" % self.k)
        s0, s1 = [], [Fraction(1)]  # Bezout coefficients for the second arg
        while True:
            q, rem = _poly_divmod(r0, r1)
            if not rem:
                break
            # s_next = s0 - q*s1
            s_next = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if not qi:
                    continue
                for j, sj in enumerate(s1):
                    s_next[i + j] -= qi * sj
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_trim(s_next)
        if len(r1) != 1:
            # gcd not a unit: cannot happen when Phi_k is irreducible
            raise AssertionError("non-trivial gcd with cyclotomic modulus")
        scale = Fraction(1) / r1[0]
        inv = [c * scale for c in s1]
        inv += [Fraction(0)] * (self.degree - len(inv))
        return tuple(inv[: self.degree])

    def embed(self, a, dps: int = 60):
        """Numerical image of a under zeta_k -> exp(2*pi*i/k)."""
        with mp.workdps(dps):
            zeta = mp.e ** (2j * mp.pi / self.k)
            acc = mp.mpc(0)
            for j, c in enumerate(a.coeffs):
                if c:
                    acc += mp.mpf(c.numerator) / mp.mpf(c.denominator) * zeta**j
            return acc

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.k == self.k

    def __hash__(self):
        return hash(("CyclotomicField", self.k))

    def __repr__(self):
        return f"CyclotomicField({self.k})"


@functools.lru_cache(maxsize=None)
def get_field(k: int) -> CyclotomicField:
    return CyclotomicField(k)


class CyclotomicElement:
    """Residue polynomial in zeta_k with Fraction coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.field.k != self.field.k:
                raise ValueError("conductor mismatch: %d vs %d" % (self.field.k, other.field.k))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        return CyclotomicElement(self.field, self.field._invert(self.coeffs))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def embed(self, dps: int = 60):
        return self.field.embed(self, dps)

    def __repr__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{j}" if c != 1 else f"z^{j}")
        body = " + ".join(parts) if parts else "0"
        return f"({body} : k={self.field.k})"
