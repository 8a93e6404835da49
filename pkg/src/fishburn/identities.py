"""The identity registry and verification engine.

Every identity carries its own comparison mode, matching the hypotheses under
which it holds: `formal` identities are checked as exact truncated power
series, `terminating-exact` ones as finite sums over exact fields, and
`numeric` ones (the Rogers-Fine circle) by high-precision summation with a
decay guard.  An analytic identity is never "proved" by truncation alone.

Mismatches always carry a reproducible witness (the first differing
multi-index or parameter point with both values).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicElement
from .enumeration import refined_counts
from .errors import CertificateError, ParameterError, UnknownFamilyError
from .qseries import BIVARIATE_NAMES, expand_family
from .rings import ZZ
from .series import TruncatedSeries

FORMAL_BIVARIATE_CAP = 14
FORMAL_TRIVARIATE_CAP = 10
TERMINATING_SCAN_CAP = 512

TRIVARIATE_NAMES = ("x", "y", "r")


@dataclass
class VerificationReport:
    """Outcome of one identity check, with a reproducible witness on failure."""

    id: str
    mode: str
    order: object = None
    outcome: str = "verified"
    witness: dict = None
    timing_ms: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.outcome in ("verified", "agreement")

    def to_json_dict(self) -> dict:
        out = {
            "id": self.id,
            "mode": self.mode,
            "order": self.order,
            "outcome": self.outcome,
            "timing_ms": round(self.timing_ms, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = {k: _jsonable(v) for k, v in self.detail.items()}
        return out


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def _timed(report, t0):
    report.timing_ms = (time.perf_counter() - t0) * 1000.0
    return report


def _series_pair_report(ident, mode, order, left, right, extra=None, t0=None):
    if t0 is None:
        t0 = time.perf_counter()
    match = left.equal_up_to(right, order)
    rep = VerificationReport(ident, mode, order)
    if not match.equal:
        rep.outcome = "mismatch"
        rep.witness = {
            "index": list(match.index),
            "left": str(match.left),
            "right": str(match.right),
        }
    if extra:
        rep.detail.update(extra)
    return _timed(rep, t0)


# ---------------------------------------------------------------------------
# trivariate Proposition builders: r as a third formal variable


def _trivariate_blocks(order):
    one = TruncatedSeries.constant(ZZ, 3, order, 1, TRIVARIATE_NAMES)
    x = TruncatedSeries.variable(ZZ, 3, order, 0, TRIVARIATE_NAMES)
    y = TruncatedSeries.variable(ZZ, 3, order, 1, TRIVARIATE_NAMES)
    rv = TruncatedSeries.variable(ZZ, 3, order, 2, TRIVARIATE_NAMES)
    return one, (one - x), (one - y), rv


def proposition_lhs(order: int) -> TruncatedSeries:
    """sum_n (1/(1-y); 1/(1-x))_n r^n with formal r."""
    one, u, w, rv = _trivariate_blocks(order)
    ui, wi = u.invert(), w.invert()
    total = TruncatedSeries.zero(ZZ, 3, order, TRIVARIATE_NAMES)
    prod = one
    rpow = one
    apow = wi
    for _ in range(order + 1):
        total = total + prod * rpow
        prod = prod * (one - apow)
        apow = apow * ui
        rpow = rpow * rv
    return total


def proposition_rhs(order: int) -> TruncatedSeries:
    """sum_n (1-y)(1-x)^n (1-y; 1-x)_n (r(1-x); 1-x)_n with formal r."""
    one, u, w, rv = _trivariate_blocks(order)
    total = TruncatedSeries.zero(ZZ, 3, order, TRIVARIATE_NAMES)
    pref = w
    pa = one
    pb = one
    apow = w
    bpow = rv * u
    for _ in range(order + 1):
        total = total + pref * pa * pb
        pa = pa * (one - apow)
        pb = pb * (one - bpow)
        apow = apow * u
        bpow = bpow * u
        pref = pref * u
    return total


def verify_proposition(order: int) -> VerificationReport:
    if order > FORMAL_TRIVARIATE_CAP:
        raise ParameterError(
            f"trivariate order capped at {FORMAL_TRIVARIATE_CAP} (got {order})")
    t0 = time.perf_counter()
    return _series_pair_report("prop12", "formal", order,
                               proposition_lhs(order), proposition_rhs(order),
                               t0=t0)


def verify_proposition_specializations(order: int) -> VerificationReport:
    """Specialize the formal-r identity at r = -1 (row/self-dual pair) and,
    after x -> -x/(1-x), y -> -y/(1-y), at r = 1 (interval-order pair)."""
    if order > FORMAL_TRIVARIATE_CAP:
        raise ParameterError(
            f"trivariate order capped at {FORMAL_TRIVARIATE_CAP} (got {order})")
    t0 = time.perf_counter()
    m = order // 2
    lhs, rhs = proposition_lhs(order), proposition_rhs(order)
    targets = [
        (lhs.specialize(2, -1, m), expand_family("G1", m), "r=-1 lhs vs G1"),
        (rhs.specialize(2, -1, m), expand_family("G2", m), "r=-1 rhs vs G2"),
    ]
    one = TruncatedSeries.constant(ZZ, 2, m, 1, BIVARIATE_NAMES)
    x = TruncatedSeries.variable(ZZ, 2, m, 0, BIVARIATE_NAMES)
    y = TruncatedSeries.variable(ZZ, 2, m, 1, BIVARIATE_NAMES)
    shift = {0: -x * (one - x).invert(), 1: -y * (one - y).invert()}
    targets += [
        (lhs.specialize(2, 1, m).substitute(shift), expand_family("F1", m),
         "r=1 substituted lhs vs F1"),
        (rhs.specialize(2, 1, m).substitute(shift), expand_family("F2", m),
         "r=1 substituted rhs vs F2"),
    ]
    rep = VerificationReport("prop12-specializations", "formal", order)
    for got, want, label in targets:
        match = got.equal_up_to(want, m)
        if not match.equal:
            rep.outcome = "mismatch"
            rep.witness = {"index": list(match.index), "left": str(match.left),
                           "right": str(match.right), "case": label}
            break
    rep.detail["specialized_order"] = m
    return _timed(rep, t0)


# ---------------------------------------------------------------------------
# coefficient oracle


def verify_coefficient_oracle(family: str, m_max: int) -> VerificationReport:
    """Check series coefficients of x^{m-l} y^l against brute-force matrix
    counts: F1 against Fishburn tables, G1 against row-Fishburn tables."""
    if family not in ("F1", "G1"):
        raise UnknownFamilyError("coefficient oracle covers F1 and G1")
    if m_max > 7:
        raise ParameterError(
            f"coefficient oracle capped at size 7 (got {m_max}); larger sizes "
            "make the exhaustive enumeration disproportionately slow")
    t0 = time.perf_counter()
    series = expand_family(family, m_max)
    matrix_family = "fishburn" if family == "F1" else "rowFishburn"
    rep = VerificationReport(f"{family}-coefficients", "formal", m_max)
    checked = 0
    for m in range(m_max + 1):
        table = refined_counts(matrix_family, m)
        by_ell = {}
        for key, c in table.counts.items():
            ell = key[-1] if matrix_family == "fishburn" else key[0]
            by_ell[ell] = by_ell.get(ell, 0) + c
        for ell in range(m + 1):
            want = by_ell.get(ell, 0)
            got = series.coefficient((m - ell, ell))
            checked += 1
            if got != want:
                rep.outcome = "mismatch"
                rep.witness = {"index": [m - ell, ell], "left": str(got),
                               "right": str(want), "m": m, "ell": ell}
                return _timed(rep, t0)
    rep.detail["coefficients_checked"] = checked
    return _timed(rep, t0)


# ---------------------------------------------------------------------------
# terminating evaluations of the compact p,q identities


def _unit_like(p):
    if isinstance(p, CyclotomicElement):
        return p.field.one
    return Fraction(1)


def _terminating_exponent(p, q, even_only: bool, cap: int = TERMINATING_SCAN_CAP):
    """Smallest j (restricted to even j when even_only) with p*q^j = 1."""
    one = _unit_like(p)
    t = p
    for j in range(cap + 1):
        if t == one and (not even_only or j % 2 == 0):
            return j
        t = t * q
    return None


TERMINATING_EXPRS = ("comp1-left", "comp1-mid", "comp2-first", "comp2-mid",
                     "comp2-right")


def evaluate_terminating(expr: str, p, q):
    """Exact value of a terminating sum at scalar (p, q), both rational or
    both cyclotomic.  Requires the appropriate termination certificate
    (p*q^k = 1 for the comp1 pair; p*q^{2k} = 1 for the comp2 family) and
    refuses to evaluate otherwise."""
    if expr not in TERMINATING_EXPRS:
        raise UnknownFamilyError(
            f"unknown terminating expression {expr!r}; known: "
            f"{', '.join(TERMINATING_EXPRS)} (the comp1 right-hand side does "
            "not terminate at generic points and is excluded)")
    one = _unit_like(p)
    if not p or not q:
        raise ParameterError("p and q must be nonzero")
    even_only = expr.startswith("comp2")
    j0 = _terminating_exponent(p, q, even_only)
    if j0 is None:
        kind = "p*q^(2k) = 1" if even_only else "p*q^k = 1"
        raise CertificateError(
            f"no termination certificate {kind} found for {expr} at "
            f"p={p!r}, q={q!r} (scanned k <= {TERMINATING_SCAN_CAP}); "
            "refusing to evaluate a non-terminating sum")
    pinv, qinv = one / p, one / q

    if expr in ("comp1-left", "comp2-first"):
        sign_flip = expr == "comp2-first"
        total = one * 0
        prod = one
        qpow = one  # (1/q)^j
        sign = one
        for n in range(j0 + 1):
            total = total + sign * prod
            prod = prod * (one - pinv * qpow)
            qpow = qpow * qinv
            if sign_flip:
                sign = -sign
        return total

    if expr in ("comp1-mid", "comp2-mid"):
        minus = expr == "comp2-mid"
        total = one * 0
        pa = one  # (p; q)_n
        pb = one  # (q; q)_n  or (-q; q)_n
        qpow = one
        pref = p  # p * q^n
        for n in range(j0 + 1):
            total = total + pref * pa * pb
            pa = pa * (one - p * qpow)
            qn1 = qpow * q
            pb = pb * (one + qn1) if minus else pb * (one - qn1)
            qpow = qn1
            pref = pref * q
        return total

    # comp2-right: sum_n (q/p)^n (p; q^2)_n, terminates at n = j0/2
    total = one * 0
    prod = one
    q2 = q * q
    q2pow = one
    pref = one
    ratio = q * pinv
    for n in range(j0 // 2 + 1):
        total = total + pref * prod
        prod = prod * (one - p * q2pow)
        q2pow = q2pow * q2
        pref = pref * ratio
    return total


def verify_terminating(family: str, p, q) -> VerificationReport:
    """Evaluate all terminating expressions of a compact identity at (p, q)
    and assert exact equality."""
    t0 = time.perf_counter()
    if family == "comp1":
        exprs = ("comp1-left", "comp1-mid")
    elif family == "comp2":
        exprs = ("comp2-first", "comp2-mid", "comp2-right")
    else:
        raise UnknownFamilyError("terminating families are comp1 and comp2")
    values = [(e, evaluate_terminating(e, p, q)) for e in exprs]
    rep = VerificationReport(f"{family}-terminating", "terminating-exact",
                             detail={"p": _fmt_scalar(p), "q": _fmt_scalar(q),
                                     "values": {e: _fmt_scalar(v) for e, v in values}})
    base = values[0][1]
    for e, v in values[1:]:
        if v != base:
            rep.outcome = "mismatch"
            rep.witness = {"index": e, "left": _fmt_scalar(base),
                           "right": _fmt_scalar(v)}
            break
    return _timed(rep, t0)


def _fmt_scalar(v):
    if isinstance(v, CyclotomicElement):
        return repr(v)
    return str(v)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    mode: str
    description: str
    runner: object  # callable(**kwargs) -> VerificationReport


def _pair_runner(ident, left_family, right_family, default_order, cap=FORMAL_BIVARIATE_CAP,
                 univariate=False):
    def run(order=None, **kwargs):
        n = default_order if order is None else order
        if not univariate and n > cap:
            raise ParameterError(f"order capped at {cap} for {ident} (got {n})")
        t0 = time.perf_counter()
        gamma = kwargs.get("gamma")
        r = kwargs.get("r")
        left = expand_family(left_family, n, gamma=gamma, r=r)
        right = expand_family(right_family, n, gamma=gamma, r=r)
        extra = {}
        if gamma is not None:
            extra["gamma"] = str(gamma)
        if r is not None:
            extra["r"] = str(r)
        return _series_pair_report(ident, "formal", n, left, right, extra, t0=t0)
    return run


def _pentagonal_runner(order=None, **_):
    n = 30 if order is None else order
    t0 = time.perf_counter()
    one = TruncatedSeries.constant(ZZ, 1, n, 1, ("w",))
    s = expand_family("pentagonal-sum", n)
    prod = expand_family("pentagonal-product", n)
    theta = expand_family("pentagonal-theta", n)
    rep = VerificationReport("pentagonal-3way", "formal", n)
    for label, left, right in (("sum vs 1-product", s, one - prod),
                               ("sum vs 1-theta", s, one - theta)):
        match = left.equal_up_to(right, n)
        if not match.equal:
            rep.outcome = "mismatch"
            rep.witness = {"index": list(match.index), "left": str(match.left),
                           "right": str(match.right), "case": label}
            break
    return _timed(rep, t0)


def _gamma_defaults(kwargs):
    return {
        "gamma": kwargs.get("gamma", Fraction(2, 3)),
        "r": kwargs.get("r", Fraction(-3, 5)),
    }


def _terminating_suite_runner(family):
    ks = (1, 2, 3)
    qs = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))

    def run(order=None, **_):
        t0 = time.perf_counter()
        rep = VerificationReport(f"{family}-terminating", "terminating-exact")
        points = []
        for q in qs:
            for k in ks:
                exponent = 2 * k if family == "comp2" else k
                p = q ** (-exponent)
                sub = verify_terminating(family, p, q)
                points.append({"p": str(p), "q": str(q),
                               "values": sub.detail["values"]})
                if not sub.ok:
                    rep.outcome = sub.outcome
                    rep.witness = sub.witness
                    rep.witness["p"] = str(p)
                    rep.witness["q"] = str(q)
                    break
            if not rep.ok:
                break
        rep.detail["points"] = points
        return _timed(rep, t0)
    return run


def _build_registry():
    reg = {}

    def add(ident, mode, description, runner):
        reg[ident] = IdentityDescriptor(ident, mode, description, runner)

    pairs = [
        ("F1=F2", "F1", "F2"), ("F2=F3", "F2", "F3"), ("F1=F3", "F1", "F3"),
        ("G1=G2", "G1", "G2"), ("G2=G3", "G2", "G3"), ("G1=G3", "G1", "G3"),
    ]
    for ident, lf, rf in pairs:
        add(ident, "formal",
            f"interval-order series equality {ident} as bivariate formal series",
            _pair_runner(ident, lf, rf, default_order=8))
    add("KR-first=F3", "formal",
        "first Kitaev-Remmel chain form equals the closed form",
        _pair_runner("KR-first=F3", "F3-KR-first-form", "F3", default_order=8))
    add("prop12", "formal",
        "generating identity with a formal third variable r",
        lambda order=None, **_: verify_proposition(8 if order is None else order))
    add("prop12-specializations", "formal",
        "r = -1 and substituted r = 1 respecializations",
        lambda order=None, **_: verify_proposition_specializations(
            8 if order is None else order))

    def gamma1_run(order=None, **kwargs):
        params = _gamma_defaults(kwargs)
        return _pair_runner("gamma1", "gamma1-lhs", "gamma1-rhs", 8)(
            order=order, **params)

    def gamma2_run(order=None, **kwargs):
        gamma = kwargs.get("gamma", Fraction(2, 3))
        return _pair_runner("gamma2", "gamma2-lhs", "gamma2-rhs", 8)(
            order=order, gamma=gamma)

    add("gamma1", "formal", "gamma-generalized identity (rational gamma, r)", gamma1_run)
    add("gamma2", "formal", "gamma-generalized even-step identity (rational gamma)", gamma2_run)
    add("pentagonal-3way", "formal",
        "pentagonal sum = 1 - product = 1 - theta", _pentagonal_runner)
    add("F1-coefficients", "formal",
        "F1 coefficients equal Fishburn matrix counts",
        lambda order=None, **_: verify_coefficient_oracle("F1", 5 if order is None else order))
    add("G1-coefficients", "formal",
        "G1 coefficients equal row-Fishburn matrix counts",
        lambda order=None, **_: verify_coefficient_oracle("G1", 5 if order is None else order))
    add("comp1-terminating", "terminating-exact",
        "left = mid of the first compact identity at terminating points",
        _terminating_suite_runner("comp1"))
    add("comp2-terminating", "terminating-exact",
        "three-way second compact identity at terminating points",
        _terminating_suite_runner("comp2"))

    # numeric entries are registered lazily to keep import costs flat
    from . import hypergeom

    add("rogers-fine", "numeric", "Rogers-Fine identity at sampled parameters",
        hypergeom.registry_rf_runner)
    add("generalized-rf", "numeric",
        "generalized Rogers-Fine identity at sampled parameters",
        hypergeom.registry_grf_runner)
    add("watson-limit", "numeric",
        "Watson limit identity at sampled parameters",
        hypergeom.registry_watson_limit_runner)
    add("watson-exact", "terminating-exact",
        "terminating Watson identity at exact rational parameters",
        hypergeom.registry_watson_exact_runner)
    return reg


_REGISTRY = None

THM_MAIN_IDS = ("F1=F2", "F2=F3", "F1=F3", "G1=G2", "G2=G3", "G1=G3")


def registry():
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


PARAMETRIC_IDS = ("gamma1", "gamma2")


def verify(ident: str, order=None, **kwargs):
    """Run one registry identity (or the thm-main / all aggregates); returns
    a list of VerificationReport.  gamma/r parameters are routed only to the
    identities that take them."""
    reg = registry()
    if ident == "all":
        ids = list(reg)
    elif ident == "thm-main":
        ids = list(THM_MAIN_IDS)
    elif ident in reg:
        ids = [ident]
    else:
        raise UnknownFamilyError(
            f"unknown identity {ident!r}; known: thm-main, all, {', '.join(sorted(reg))}")
    reports = []
    for i in ids:
        params = kwargs if i in PARAMETRIC_IDS else {}
        reports.append(reg[i].runner(order=order, **params))
    return reports
