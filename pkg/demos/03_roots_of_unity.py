"""Walkthrough: terminating sums and expansions at roots of unity.

Evaluates the compact p,q identities exactly where they terminate (rational
and cyclotomic points), expands them as power series in (p-p0, q-q0) over
Q(zeta_k), and runs the conjecture explorer, including a refused point with
no convergence certificate.
"""

from fractions import Fraction

from fishburn import (RootContext, conjecture_explore, evaluate_terminating,
                      expand_at_root, get_field, root_terminating_check)
from fishburn.errors import CertificateError

print("=== terminating evaluations at rational points ===")
p, q = Fraction(4), Fraction(1, 2)   # p q^2 = 1
for expr in ("comp2-first", "comp2-mid", "comp2-right"):
    print(f"  {expr}({p}, {q}) = {evaluate_terminating(expr, p, q)}")
p, q = Fraction(2), Fraction(1, 2)   # p q = 1
for expr in ("comp1-left", "comp1-mid"):
    print(f"  {expr}({p}, {q}) = {evaluate_terminating(expr, p, q)}")

print()
print("=== the same, at cyclotomic points (exact, with complex cross-check) ===")
F4 = get_field(4)
rep = root_terminating_check("comp2-three-way", F4.zeta(2), F4.zeta(1))
print(f"  p = zeta_4^2 = -1, q = zeta_4 = i: {rep.outcome}")
for name, val in rep.detail["values"].items():
    print(f"    {name} = {val}")
print(f"    embedding cross-check |diff| = {rep.detail['embedding_diff']}")

print()
print("=== expansion around (p0, q0) = (-1, -1) ===")
ctx = RootContext(k=2, a=1, b=1, order=6)
left = expand_at_root("comp1-left", ctx)
print(f"  constant term of the left side: {left.constant_term!r} "
      "(= 1 + 2, the terminating value)")
report = conjecture_explore(ctx)
print(f"  left vs right expansions to order {ctx.order}: {report.conj1.outcome}")
print(f"  q-only comparison (p formal): {report.conj2.outcome}")

print()
print("=== k = 1 restates the theorem ===")
report = conjecture_explore(RootContext(k=1, a=0, b=0, order=8))
print(f"  agreement to order 8: {report.conj1.outcome}")

print()
print("=== a point with no convergence certificate is refused ===")
try:
    expand_at_root("comp1-left", RootContext(k=4, a=1, b=2, order=4))
except CertificateError as exc:
    print(f"  refused: {exc}")
