"""q-Pochhammer symbols and the named series families.

The six bivariate series F1..F3, G1..G3 (interval orders refined by maximal
elements, and their self-dual/row analogues), the Kitaev-Remmel chain forms,
the gamma-generalized families, and the pentagonal sum/product/theta forms
are all built here on top of TruncatedSeries.

Each family's infinite sum is truncated by a provable summand cutoff: the
n-th summand is skipped once its minimum total degree exceeds the truncation
order.  The bound used per family comes from the Pochhammer factor whose
every monomial has total degree at least n; adding further summands can never
change a coefficient below the cut (the test suite re-checks this).
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .errors import ParameterError, UnknownFamilyError
from .rings import QQ, ZZ
from .series import TruncatedSeries

BIVARIATE_NAMES = ("x", "y")
PENTAGONAL_NAMES = ("w",)


def q_pochhammer(a: TruncatedSeries, q: TruncatedSeries, n) -> TruncatedSeries:
    """(a;q)_n = prod_{k=0}^{n-1} (1 - a*q^k), with (a;q)_0 = 1.

    `n` may be a nonnegative integer or `math.inf`; the infinite product
    requires q to have zero constant term (each extra factor then starts at a
    strictly higher degree, so the truncated product is exact).
    """
    a._compat(q)
    one = TruncatedSeries.constant(a.ring, a.nvars, a.trunc, a.ring.one, a.names)
    if n == inf:
        if not a.ring.is_zero(q.constant_term):
            raise ParameterError(
                "infinite q-Pochhammer product requires q with zero constant term")
        out = one
        apow = a
        while not apow.is_zero():
            out = out * (one - apow)
            apow = apow * q
        return out
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"Pochhammer length must be a nonnegative integer, got {n!r}")
    out = one
    apow = a
    for _ in range(n):
        out = out * (one - apow)
        apow = apow * q
    return out


# ---------------------------------------------------------------------------
# building blocks over (x, y)


def _blocks(N, ring):
    one = TruncatedSeries.constant(ring, 2, N, ring.one, BIVARIATE_NAMES)
    x = TruncatedSeries.variable(ring, 2, N, 0, BIVARIATE_NAMES)
    y = TruncatedSeries.variable(ring, 2, N, 1, BIVARIATE_NAMES)
    u = one - x          # 1-x
    w = one - y          # 1-y
    return one, x, y, u, w


def _family_f1(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    prod = one
    apow = w  # (1-y)*(1-x)^n
    for _ in range(N + 1):
        total = total + prod
        prod = prod * (one - apow)
        apow = apow * u
    return total


def _family_f2(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    ui = u.invert()
    wi = w.invert()
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = wi              # 1/((1-y)(1-x)^n)
    pa = one               # (1/(1-y); 1/(1-x))_n
    pb = one               # (1/(1-x); 1/(1-x))_n
    apow = wi
    bpow = ui
    for _ in range(N + 1):
        total = total + pref * pa * pb
        pa = pa * (one - apow)
        pb = pb * (one - bpow)
        apow = apow * ui
        bpow = bpow * ui
        pref = pref * ui
    return total


def _family_f3(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    ratio = u * w.invert()  # (1-x)/(1-y)
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = ratio            # ratio^(n+1)
    prod = one              # (1-x; 1-x)_n
    apow = u
    for _ in range(N + 1):
        total = total + pref * prod
        prod = prod * (one - apow)
        apow = apow * u
        pref = pref * ratio
    return total


def _family_g1(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    ui = u.invert()
    wi = w.invert()
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    prod = one
    apow = wi
    sign = 1
    for _ in range(N + 1):
        total = total + prod.scale(ring.from_int(sign))
        prod = prod * (one - apow)
        apow = apow * ui
        sign = -sign
    return total


def _family_g2(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = w               # (1-y)(1-x)^n
    pa = one               # (1-y; 1-x)_n
    pb = one               # (-(1-x); 1-x)_n
    apow = w
    bpow = u
    for _ in range(N + 1):
        total = total + pref * pa * pb
        pa = pa * (one - apow)
        pb = pb * (one + bpow)
        apow = apow * u
        bpow = bpow * u
        pref = pref * u
    return total


def _family_g3(N, ring=ZZ):
    one, _, _, u, w = _blocks(N, ring)
    ratio = u * w.invert()
    u2 = u * u
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = one             # ratio^n
    prod = one             # (1-y; (1-x)^2)_n
    apow = w
    for _ in range(N + 1):
        total = total + pref * prod
        prod = prod * (one - apow)
        apow = apow * u2
        pref = pref * ratio
    return total


def _family_kr_first(N, ring=ZZ):
    # 1 + sum_{n>=0} y/(1-y)^{n+1} * prod_{k=1}^n (1-(1-x)^k)
    one, _, y, u, w = _blocks(N, ring)
    wi = w.invert()
    total = one
    pref = y * wi          # y/(1-y)^{n+1}
    prod = one             # (1-x; 1-x)_n
    apow = u
    n = 0
    while n + 1 <= N:
        total = total + pref * prod
        prod = prod * (one - apow)
        apow = apow * u
        pref = pref * wi
        n += 1
    return total


def _gamma_blocks(N, gamma):
    if gamma is None:
        raise ParameterError("gamma-family requires a gamma parameter")
    gamma = Fraction(gamma)
    if gamma == 1:
        raise ParameterError(
            "gamma = 1 makes the denominator factors non-invertible")
    return gamma


def _family_gamma1_lhs(N, gamma, r):
    # sum_n r^n (gamma/(r(1-x)); 1-x)_n (1/(1-y); 1/(1-x))_n / (gamma; 1-x)_n
    gamma = _gamma_blocks(N, gamma)
    if r is None or Fraction(r) == 0:
        raise ParameterError("gamma1 family requires a nonzero rational r")
    r = Fraction(r)
    ring = QQ
    one, _, _, u, w = _blocks(N, ring)
    ui = u.invert()
    wi = w.invert()
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    num1 = one             # (gamma/(r(1-x)); 1-x)_n
    num2 = one             # (1/(1-y); 1/(1-x))_n
    deninv = one           # 1/(gamma; 1-x)_n
    cpow = ui.scale(gamma / r)   # (gamma/r)(1-x)^{k-1}, k = 0, 1, ...
    apow = wi
    gpow = one.scale(gamma)      # gamma*(1-x)^k
    rpow = Fraction(1)
    for _ in range(N + 1):
        total = total + (num1 * num2 * deninv).scale(rpow)
        num1 = num1 * (one - cpow)
        num2 = num2 * (one - apow)
        deninv = deninv * (one - gpow).invert()
        cpow = cpow * u
        apow = apow * ui
        gpow = gpow * u
        rpow *= r
    return total


def _family_gamma1_rhs(N, gamma, r):
    # sum_n (1-y)(1-x)^n (1-y; 1-x)_n (r(1-x); 1-x)_n / (gamma; 1-x)_n
    gamma = _gamma_blocks(N, gamma)
    if r is None:
        raise ParameterError("gamma1 family requires a rational r")
    r = Fraction(r)
    ring = QQ
    one, _, _, u, w = _blocks(N, ring)
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = w
    pa = one               # (1-y; 1-x)_n
    pb = one               # (r(1-x); 1-x)_n
    deninv = one
    apow = w
    bpow = u.scale(r)
    gpow = one.scale(gamma)
    for _ in range(N + 1):
        total = total + (pref * pa * pb * deninv)
        pa = pa * (one - apow)
        pb = pb * (one - bpow)
        deninv = deninv * (one - gpow).invert()
        apow = apow * u
        bpow = bpow * u
        gpow = gpow * u
        pref = pref * u
    return total


def _family_gamma2_lhs(N, gamma):
    # sum_n (-1)^n (1/(1-y); 1/(1-x))_n / (gamma; 1/(1-x)^2)_{floor(n/2)}
    gamma = _gamma_blocks(N, gamma)
    ring = QQ
    one, _, _, u, w = _blocks(N, ring)
    ui = u.invert()
    ui2 = ui * ui
    wi = w.invert()
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    prod = one
    apow = wi
    deninv = one           # 1/(gamma; 1/(1-x)^2)_{floor(n/2)}
    gpow = one.scale(gamma)  # gamma * (1/(1-x)^2)^k
    sign = 1
    for n in range(N + 1):
        if n >= 2 and n % 2 == 0:
            deninv = deninv * (one - gpow).invert()
            gpow = gpow * ui2
        total = total + (prod * deninv).scale(ring.from_int(sign))
        prod = prod * (one - apow)
        apow = apow * ui
        sign = -sign
    return total


def _family_gamma2_rhs(N, gamma):
    # sum_n ((1-x)/(1-y))^n (1-y; (1-x)^2)_n (gamma(1-x)(1-y); 1/(1-x)^2)_n
    #       / (gamma; 1/(1-x)^2)_n
    gamma = _gamma_blocks(N, gamma)
    ring = QQ
    one, _, _, u, w = _blocks(N, ring)
    ui = u.invert()
    ui2 = ui * ui
    u2 = u * u
    ratio = u * w.invert()
    total = TruncatedSeries.zero(ring, 2, N, BIVARIATE_NAMES)
    pref = one
    pa = one               # (1-y; (1-x)^2)_n
    pb = one               # (gamma(1-x)(1-y); 1/(1-x)^2)_n
    deninv = one
    apow = w
    bpow = (u * w).scale(gamma)
    gpow = one.scale(gamma)
    for _ in range(N + 1):
        total = total + (pref * pa * pb * deninv)
        pa = pa * (one - apow)
        pb = pb * (one - bpow)
        deninv = deninv * (one - gpow).invert()
        apow = apow * u2
        bpow = bpow * ui2
        gpow = gpow * ui2
        pref = pref * ratio
    return total


# ---------------------------------------------------------------------------
# pentagonal forms (univariate in w)


def _pentagonal_sum(N, ring=ZZ):
    # sum_{n>=0} w^{n+1} (w; w)_n
    one = TruncatedSeries.constant(ring, 1, N, ring.one, PENTAGONAL_NAMES)
    wv = TruncatedSeries.variable(ring, 1, N, 0, PENTAGONAL_NAMES)
    total = TruncatedSeries.zero(ring, 1, N, PENTAGONAL_NAMES)
    pref = wv
    prod = one
    apow = wv
    n = 0
    while n + 1 <= N:
        total = total + pref * prod
        prod = prod * (one - apow)
        apow = apow * wv
        pref = pref * wv
        n += 1
    return total


def _pentagonal_product(N, ring=ZZ):
    # prod_{n>=1} (1 - w^n) = (w; w)_infinity
    wv = TruncatedSeries.variable(ring, 1, N, 0, PENTAGONAL_NAMES)
    return q_pochhammer(wv, wv, inf)


def _pentagonal_theta(N, ring=ZZ):
    # sum_{n=-inf}^{inf} (-1)^n w^{n(3n-1)/2}
    terms = {}
    n = 0
    while True:
        exps = [n * (3 * n - 1) // 2, n * (3 * n + 1) // 2]  # n and -n
        if min(exps) > N:
            break
        sign = ring.from_int(1 if n % 2 == 0 else -1)
        for e in exps if n else exps[:1]:
            if e <= N:
                terms[(e,)] = terms.get((e,), ring.zero) + sign
        n += 1
    terms = {e: c for e, c in terms.items() if not ring.is_zero(c)}
    return TruncatedSeries(ring, 1, N, terms, PENTAGONAL_NAMES)


# ---------------------------------------------------------------------------
# family registry

_PLAIN = {
    "F1": _family_f1,
    "F2": _family_f2,
    "F3": _family_f3,
    "G1": _family_g1,
    "G2": _family_g2,
    "G3": _family_g3,
    "F3-KR-first-form": _family_kr_first,
    "F3-KR-second-form": _family_f3,  # the telescoped chain closes into F3 itself
    "pentagonal-sum": _pentagonal_sum,
    "pentagonal-product": _pentagonal_product,
    "pentagonal-theta": _pentagonal_theta,
}

_GAMMA_R = {"gamma1-lhs": _family_gamma1_lhs, "gamma1-rhs": _family_gamma1_rhs}
_GAMMA = {"gamma2-lhs": _family_gamma2_lhs, "gamma2-rhs": _family_gamma2_rhs}

FAMILY_IDS = tuple(sorted(list(_PLAIN) + list(_GAMMA_R) + list(_GAMMA)))


def expand_family(family: str, order: int, gamma=None, r=None) -> TruncatedSeries:
    """Expand a named series family to the given total-degree order.

    F/G families expand over the integers; gamma families take exact rational
    parameters (gamma != 1) and expand over the rationals.  Pentagonal forms
    are univariate in w.
    """
    if order < 0:
        raise ParameterError("order must be nonnegative")
    if family in _PLAIN:
        if gamma is not None or r is not None:
            raise ParameterError(f"family {family} takes no parameters")
        return _PLAIN[family](order)
    if family in _GAMMA_R:
        return _GAMMA_R[family](order, gamma, r)
    if family in _GAMMA:
        if r is not None:
            raise ParameterError(f"family {family} takes only gamma")
        return _GAMMA[family](order, gamma)
    raise UnknownFamilyError(
        f"unknown series family {family!r}; known: {', '.join(FAMILY_IDS)}")


# ---------------------------------------------------------------------------
# dense univariate fast path


def _poly_mul(a, b, n):
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j > n:
                    break
                if bj:
                    out[i + j] += ai * bj
    return out


def fishburn_numbers(n_max: int) -> list:
    """f_0..f_{n_max} via Zagier's sum_n ((1-x); (1-x))_n, dense arithmetic."""
    total = [0] * (n_max + 1)
    total[0] = 1
    prod = [1] + [0] * n_max
    upow = [1] + [0] * n_max          # (1-x)^k
    one_minus_x = [1, -1] + [0] * (n_max - 1) if n_max >= 1 else [1]
    for k in range(1, n_max + 1):
        upow = _poly_mul(upow, one_minus_x, n_max)
        factor = [-c for c in upow]
        factor[0] += 1                # 1 - (1-x)^k
        prod = _poly_mul(prod, factor, n_max)
        for i, c in enumerate(prod):
            total[i] += c
    return total


def row_fishburn_numbers(n_max: int) -> list:
    """r_0..r_{n_max} via sum_n prod_{k=1}^n (1/(1-x)^k - 1)."""
    total = [0] * (n_max + 1)
    total[0] = 1
    prod = [1] + [0] * n_max
    geom = [1] * (n_max + 1)          # 1/(1-x)
    gpow = [1] + [0] * n_max          # 1/(1-x)^k
    for k in range(1, n_max + 1):
        gpow = _poly_mul(gpow, geom, n_max)
        factor = list(gpow)
        factor[0] -= 1                # 1/(1-x)^k - 1
        prod = _poly_mul(prod, factor, n_max)
        for i, c in enumerate(prod):
            total[i] += c
    return total


def univariate_fishburn_series(which: str, order: int) -> TruncatedSeries:
    """F1(x,x) resp. G1(x,x) as a one-variable series; coefficient of x^m is
    the Fishburn number f_m resp. the row-Fishburn number r_m."""
    if which == "fishburn":
        coeffs = fishburn_numbers(order)
    elif which == "rowFishburn":
        coeffs = row_fishburn_numbers(order)
    else:
        raise UnknownFamilyError(
            f"unknown univariate sequence {which!r}; use fishburn or rowFishburn")
    terms = {(i,): c for i, c in enumerate(coeffs) if c}
    return TruncatedSeries(ZZ, 1, order, terms, ("x",))


# ---------------------------------------------------------------------------
# partition side table


class PartitionParityTable:
    """a_{r,s}: (odd - even)-part-count surplus of distinct partitions of s
    with largest part exactly r, for 1 <= r <= R, 1 <= s <= S.

    Built by formally expanding sum_n (pw)^{n+1} (w; w)_n in p and w: the
    summand n carries p-degree exactly n+1, so the p^r slice is w^r (w;w)_{r-1}
    with no truncation effects in p.
    """

    def __init__(self, max_part: int, max_weight: int, entries: dict):
        self.max_part = max_part
        self.max_weight = max_weight
        self.entries = entries

    def a(self, r: int, s: int) -> int:
        if not (1 <= r <= self.max_part and 1 <= s <= self.max_weight):
            raise ParameterError(
                f"(r, s) = ({r}, {s}) outside table bounds "
                f"({self.max_part}, {self.max_weight})")
        return self.entries.get((r, s), 0)


def partition_parity_table(max_part: int, max_weight: int) -> PartitionParityTable:
    if max_part < 1 or max_weight < 1:
        raise ParameterError("table bounds must be >= 1")
    entries = {}
    for r in range(1, max_part + 1):
        # w^r * (w; w)_{r-1}, truncated at w^max_weight
        slice_poly = [0] * r + [1] + [0] * max(0, max_weight - r)
        slice_poly = slice_poly[: max_weight + 1]
        for k in range(1, r):
            factor = [1] + [0] * max_weight
            if k <= max_weight:
                factor[k] = -1
            slice_poly = _poly_mul(slice_poly, factor, max_weight)
        for s, c in enumerate(slice_poly):
            if c and s >= 1:
                entries[(r, s)] = c
    return PartitionParityTable(max_part, max_weight, entries)
