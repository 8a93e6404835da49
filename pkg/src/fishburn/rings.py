"""Coefficient rings for truncated series.

Ring elements are plain Python objects supporting the arithmetic operators
(int, Fraction, CyclotomicElement, mpmath.mpc), so series arithmetic works on
them directly.  A ring object supplies everything the operators cannot:
coercion, exact/tolerant equality, inversion, and string serialization.

Integers are the default ring (all coefficients of the interval-order series
are integers); rationals appear where a non-unit inversion is required, the
cyclotomic ring backs root-of-unity expansions, and the complex ring exists
for high-precision cross-checks only.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .cyclotomic import CyclotomicElement, get_field
from .errors import NonInvertibleError


class IntegerRing:
    tag = "ZZ"
    exact = True

    zero = 0
    one = 1

    def from_int(self, n):
        return int(n)

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b, tol=None):
        return a == b

    def invert(self, a):
        if a in (1, -1):
            return a
        raise NonInvertibleError(f"{a} is not a unit in ZZ")

    def coeff_to_str(self, a):
        return str(a)

    def coeff_from_str(self, s):
        return int(s)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "ZZ"


class RationalRing:
    tag = "QQ"
    exact = True

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b, tol=None):
        return a == b

    def invert(self, a):
        if a == 0:
            raise NonInvertibleError("0 is not invertible in QQ")
        return Fraction(1) / a

    def coeff_to_str(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def coeff_from_str(self, s):
        return Fraction(s)

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "QQ"


class CyclotomicRing:
    """Q(zeta_k) as a series coefficient ring."""

    exact = True

    def __init__(self, k: int):
        self.k = k
        self.field = get_field(k)
        self.tag = f"QQ(zeta_{k})"
        self.zero = self.field.zero
        self.one = self.field.one

    def from_int(self, n):
        return self.field.from_rational(n)

    def coerce(self, x):
        if isinstance(x, CyclotomicElement):
            if x.field.k != self.k:
                raise TypeError(f"conductor mismatch: {x.field.k} vs {self.k}")
            return x
        if isinstance(x, (int, Fraction)):
            return self.field.from_rational(x)
        raise TypeError(f"cannot coerce {x!r} into {self.tag}")

    def is_zero(self, a):
        return not a

    def eq(self, a, b, tol=None):
        return a == b

    def invert(self, a):
        if not a:
            raise NonInvertibleError(f"0 is not invertible in {self.tag}")
        return a.inverse()

    def zeta(self, power=1):
        return self.field.zeta(power)

    def coeff_to_str(self, a):
        rat = RationalRing()
        return ",".join(rat.coeff_to_str(c) for c in a.coeffs)

    def coeff_from_str(self, s):
        return self.field.element([Fraction(part) for part in s.split(",")])

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and other.k == self.k

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class ComplexRing:
    """Arbitrary-precision complex coefficients (mpmath), tolerant equality.

    Used for numerical cross-checks; equality is |a - b| <= eps with a
    caller-visible absolute epsilon (default 1e-25 at 60 digits).
    """

    exact = False

    def __init__(self, dps: int = 60, eps=None):
        self.dps = dps
        self.eps = mp.mpf("1e-25") if eps is None else mp.mpf(eps)
        self.tag = f"CC({dps})"
        with mp.workdps(dps):
            self.zero = mp.mpc(0)
            self.one = mp.mpc(1)

    def from_int(self, n):
        with mp.workdps(self.dps):
            return mp.mpc(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            with mp.workdps(self.dps):
                return mp.mpc(mp.mpf(x.numerator) / mp.mpf(x.denominator))
        with mp.workdps(self.dps):
            return mp.mpc(x)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b, tol=None):
        eps = self.eps if tol is None else mp.mpf(tol)
        return abs(a - b) <= eps

    def invert(self, a):
        if a == 0:
            raise NonInvertibleError("0 is not invertible in CC")
        with mp.workdps(self.dps):
            return 1 / a

    def coeff_to_str(self, a):
        return mp.nstr(a, self.dps)

    def coeff_from_str(self, s):
        with mp.workdps(self.dps):
            return mp.mpc(complex(s)) if "j" in s else mp.mpc(mp.mpf(s))

    def __eq__(self, other):
        return isinstance(other, ComplexRing) and other.dps == self.dps

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


ZZ = IntegerRing()
QQ = RationalRing()


def cyclotomic_ring(k: int) -> CyclotomicRing:
    return CyclotomicRing(k)


def ring_from_tag(tag: str):
    """Inverse of the .tag property, for deserialization."""
    if tag == "ZZ":
        return ZZ
    if tag == "QQ":
        return QQ
    if tag.startswith("QQ(zeta_") and tag.endswith(")"):
        return CyclotomicRing(int(tag[len("QQ(zeta_"):-1]))
    if tag.startswith("CC(") and tag.endswith(")"):
        return ComplexRing(int(tag[len("CC("):-1]))
    raise ValueError(f"unknown ring tag {tag!r}")
