#!/usr/bin/env python3
"""Print the full small-characteristic enumeration as a readable table.

Every admissible (p, D, c1, c2) with p <= 5 is listed with the group
order N = P(1) and its p-divisibility; rows with c2 != 0 and p² | N
would be counterexamples to the trivial-or-order-p claim.
"""

from g2cm import verify_lemma2

report = verify_lemma2()
print(f"{'p':>2} {'D':>3} {'c1':>3} {'c2':>3} {'N':>6}  p|N  p²|N  note")
for r in report.rows:
    note = ""
    if r.c2 == 0 and r.div_p2:
        note = "excluded (c2 = 0 forces non-primitive field)"
    elif r.is_counterexample():
        note = "COUNTEREXAMPLE"
    print(f"{r.p:>2} {r.D:>3} {r.c1:>3} {r.c2:>3} {r.N:>6}  "
          f"{'y' if r.div_p else '.':>3}  {'y' if r.div_p2 else '.':>4}  {note}")
print(f"\n{len(report.rows)} rows, {len(report.counterexamples)} counterexamples")
raise SystemExit(0 if report.holds() else 1)
