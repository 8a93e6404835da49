"""Walkthrough: the six series, their equalities, and the formal machinery.

Expands F1..F3 and G1..G3 as exact bivariate series, checks the pairwise
equalities, the Kitaev-Remmel chain, the formal-parameter identity and its
respecializations, a gamma-generalized instance, and the pentagonal forms.
"""

from fractions import Fraction

from fishburn import expand_family, verify, verify_proposition
from fishburn.identities import verify_proposition_specializations

N = 8

print("=== the six series at total degree", N, "===")
series = {fid: expand_family(fid, N) for fid in ("F1", "F2", "F3", "G1", "G2", "G3")}
for fid in ("F1", "G1"):
    print(f"{fid}: {series[fid]!r}")

print()
print("coefficient of x^2 y in F1 (interval orders of size 3 with 1 maximal "
      "element):", series["F1"].coefficient((2, 1)))
print("coefficient of y^2  in G1 (row-Fishburn matrices of size 2, last "
      "column sum 2):", series["G1"].coefficient((0, 2)))

print()
print("=== theorem: all six pairwise equal ===")
for rep in verify("thm-main", order=N):
    print(f"  {rep.id}: {rep.outcome} ({rep.timing_ms:.1f} ms)")

print()
print("=== the Kitaev-Remmel chain form agrees with the closed form ===")
(rep,) = verify("KR-first=F3", order=N)
print(f"  KR-first=F3: {rep.outcome}")

print()
print("=== the identity with a formal parameter r, and its specializations ===")
print("  trivariate check:", verify_proposition(8).outcome)
spec = verify_proposition_specializations(8)
print("  r = -1 reproduces G1 = G2, substituted r = 1 reproduces F1 = F2:",
      spec.outcome)

print()
print("=== a gamma-generalized instance (exact rationals) ===")
gamma, r = Fraction(2, 3), Fraction(-3, 5)
(rep,) = verify("gamma1", order=6, gamma=gamma, r=r)
print(f"  gamma = {gamma}, r = {r}: {rep.outcome}")
(rep,) = verify("gamma2", order=6, gamma=gamma)
print(f"  gamma = {gamma} (even-step family): {rep.outcome}")

print()
print("=== pentagonal forms in w ===")
prod = expand_family("pentagonal-product", 30)
print("  product:", repr(prod))
(rep,) = verify("pentagonal-3way", order=30)
print("  sum = 1 - product = 1 - theta:", rep.outcome)
