"""Asymptotic trend checks for the Fishburn and row-Fishburn sequences.

The closed-form main terms are
    f_n ~ n! (6/pi^2)^n sqrt(n) * alpha,   alpha = 12*sqrt(3) * pi^(-5/2) * e^(pi^2/12)
    r_m ~ m! (12/pi^2)^m        * beta,    beta  = 6*sqrt(2)  * pi^(-2)   * e^(pi^2/24)
with O(1/n) relative corrections whose constants are unspecified, so the
checks here are trend assertions (deviation shrinking, n * deviation staying
in a bounded band), never absolute thresholds.
"""

from __future__ import annotations

from collections import namedtuple

import mpmath as mp

from .errors import ParameterError
from .qseries import fishburn_numbers, row_fishburn_numbers

N_MAX_CAP = 120

TrendRow = namedtuple("TrendRow", "n ratio deviation")


def alpha_constant(dps: int = 50):
    """12*sqrt(3) * pi^(-5/2) * e^(pi^2/12), to the requested precision."""
    with mp.workdps(dps):
        return 12 * mp.sqrt(3) * mp.pi ** mp.mpf("-2.5") * mp.e ** (mp.pi**2 / 12)


def beta_constant(dps: int = 50):
    """6*sqrt(2) * pi^(-2) * e^(pi^2/24), to the requested precision."""
    with mp.workdps(dps):
        return 6 * mp.sqrt(2) / mp.pi**2 * mp.e ** (mp.pi**2 / 24)


def trend(which: str, n_max: int, dps: int = 50):
    """Exact coefficients divided by the closed-form main term, for
    n = 1..n_max; returns TrendRow(n, ratio, |ratio - 1|) entries."""
    if not 1 <= n_max <= N_MAX_CAP:
        raise ParameterError(f"n_max must be within 1..{N_MAX_CAP}")
    if which == "fishburn":
        coeffs = fishburn_numbers(n_max)
    elif which == "rowFishburn":
        coeffs = row_fishburn_numbers(n_max)
    else:
        raise ParameterError("trend families are fishburn and rowFishburn")
    rows = []
    with mp.workdps(dps):
        if which == "fishburn":
            const = alpha_constant(dps)
            base = 6 / mp.pi**2
        else:
            const = beta_constant(dps)
            base = 12 / mp.pi**2
        for n in range(1, n_max + 1):
            main = mp.factorial(n) * base**n * const
            if which == "fishburn":
                main *= mp.sqrt(n)
            ratio = mp.mpf(coeffs[n]) / main
            rows.append(TrendRow(n, ratio, abs(ratio - 1)))
    return rows


def deviation_band(rows, n_lo: int, n_hi: int):
    """(min, max) of n * deviation over the window [n_lo, n_hi]."""
    scaled = [row.n * row.deviation for row in rows if n_lo <= row.n <= n_hi]
    if not scaled:
        raise ParameterError("window contains no rows")
    return min(scaled), max(scaled)
