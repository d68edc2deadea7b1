#!/usr/bin/env python3
"""Sweep random genus-2 curves per prime, cross-checking the two oracles.

For each curve the Jacobian order from full divisor enumeration must
equal P(1) recovered from point counts over F_p and F_{p²}.
"""

import argparse
import random

from g2cm import (
    GenusTwoCurve,
    char_poly_from_counts,
    count_points,
    enumerate_jacobian,
    group_order,
)
from g2cm.oracle import poly_derivative, poly_gcd

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
parser.add_argument("--count", type=int, default=25, help="curves per prime")
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

rng = random.Random(args.seed)
mismatches = 0
for p in args.primes:
    done = 0
    while done < args.count:
        f = tuple(rng.randrange(p) for _ in range(5)) + (rng.randrange(1, p),)
        if len(poly_gcd(f, poly_derivative(f, p), p)) != 1:
            continue
        curve = GenusTwoCurve(p=p, f=f)
        g = enumerate_jacobian(curve)
        P = char_poly_from_counts(count_points(curve, 1),
                                  count_points(curve, 2), p)
        ok = g.order == group_order(P)
        mismatches += not ok
        print(f"p={p} f={list(f)} order={g.order} P(1)={group_order(P)} "
              f"invariants={list(g.invariant_factors)} "
              f"{'ok' if ok else 'MISMATCH'}")
        done += 1
print(f"\nmismatches: {mismatches}")
raise SystemExit(0 if mismatches == 0 else 1)
