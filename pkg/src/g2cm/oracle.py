"""Brute-force ground truth for genus-2 Jacobians over small prime fields.

Point counts over F_p and F_{p²} recover the Frobenius quartic through
the Weil relations, and full divisor enumeration with Cantor's group
law recovers the group order and abelian structure directly.  The two
routes are independent of the CM machinery and of each other.

Polynomials over F_p are plain tuples of ints, low degree first, with
no trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import sympy

from .errors import BudgetExceededError, InvalidCurveError
from .frobenius import FrobeniusPoly

Poly = tuple[int, ...]

DEFAULT_BUDGET = 4096


# ---------------------------------------------------------------- F_p[x]

def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_neg(a: Poly, p: int) -> Poly:
    return tuple((-c) % p for c in a)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    return poly_add(a, poly_neg(b, p), p)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] * inv_lead % p
        k = len(r) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            r[k + i] = (r[k + i] - c * bi) % p
    return _trim(q), _trim(r)


def poly_mod(a: Poly, b: Poly, p: int) -> Poly:
    return poly_divmod(a, b, p)[1]


def poly_monic(a: Poly, p: int) -> Poly:
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return tuple(c * inv % p for c in a)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, poly_mod(a, b, p)
    return poly_monic(a, p)


def poly_xgcd(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with g = s·a + t·b and g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], p - 2, p)
        scale = (inv,)
        r0 = poly_mul(scale, r0, p)
        s0 = poly_mul(scale, s0, p)
        t0 = poly_mul(scale, t0, p)
    return r0, s0, t0


def poly_eval(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def poly_derivative(a: Poly, p: int) -> Poly:
    return _trim([i * a[i] % p for i in range(1, len(a))])


# ------------------------------------------------------------------ curve

@dataclass(frozen=True)
class GenusTwoCurve:
    """y² = f(x) over F_p with f squarefree of degree 5 or 6, p odd."""

    p: int
    f: Poly

    def __post_init__(self) -> None:
        if self.p < 3 or not sympy.isprime(self.p):
            raise InvalidCurveError(f"p must be an odd prime, got {self.p}")
        f = _trim([c % self.p for c in self.f])
        object.__setattr__(self, "f", f)
        if len(f) - 1 not in (5, 6):
            raise InvalidCurveError(
                f"deg f must be 5 or 6, got {len(f) - 1 if f else '-inf'}"
            )
        if len(poly_gcd(f, poly_derivative(f, self.p), self.p)) > 1:
            raise InvalidCurveError("f has a repeated root over F_p")

    @property
    def degree(self) -> int:
        return len(self.f) - 1


def smallest_non_residue(p: int) -> int:
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise ValueError(f"no quadratic non-residue mod {p}")


def _sqrt_counts_fp(p: int) -> list[int]:
    """counts[z] = number of y in F_p with y² = z."""
    counts = [0] * p
    for y in range(p):
        counts[y * y % p] += 1
    return counts


def count_points(curve: GenusTwoCurve, k: int) -> int:
    """#C(F_{p^k}) for the smooth projective model, k ∈ {1, 2}.

    Affine solutions of y² = f(x) plus the points at infinity: one for
    deg f = 5, and the number of square roots of the leading
    coefficient for deg f = 6.  F_{p²} is realized as F_p[t]/(t² − n)
    with n the smallest quadratic non-residue mod p.
    """
    p, f = curve.p, curve.f
    lead = f[-1]
    if k == 1:
        counts = _sqrt_counts_fp(p)
        total = sum(counts[poly_eval(f, x, p)] for x in range(p))
        return total + (1 if curve.degree == 5 else counts[lead])
    if k != 2:
        raise ValueError(f"k must be 1 or 2, got {k}")
    n = smallest_non_residue(p)

    def mul2(a, b):
        a0, a1 = a
        b0, b1 = b
        return ((a0 * b0 + a1 * b1 * n) % p, (a0 * b1 + a1 * b0) % p)

    counts2: dict[tuple[int, int], int] = {}
    for y0 in range(p):
        for y1 in range(p):
            z = mul2((y0, y1), (y0, y1))
            counts2[z] = counts2.get(z, 0) + 1
    total = 0
    for x0 in range(p):
        for x1 in range(p):
            acc = (0, 0)
            for c in reversed(f):
                acc = mul2(acc, (x0, x1))
                acc = ((acc[0] + c) % p, acc[1])
            total += counts2.get(acc, 0)
    return total + (1 if curve.degree == 5 else counts2.get((lead % p, 0), 0))


def char_poly_from_counts(N1: int, N2: int, p: int) -> FrobeniusPoly:
    """Recover P(X) from #C(F_p) and #C(F_{p²}) via the Weil relations.

    s1 = p + 1 − N1 and s2 = (s1² − (p² + 1 − N2)) / 2 give
    P(X) = X⁴ − s1X³ + s2X² − p·s1·X + p².
    """
    s1 = p + 1 - N1
    twice_s2 = s1 * s1 - (p * p + 1 - N2)
    if twice_s2 % 2 != 0:
        raise InvalidCurveError(
            f"inconsistent counts N1={N1}, N2={N2} (odd 2·s2 = {twice_s2})"
        )
    s2 = twice_s2 // 2
    return FrobeniusPoly(a0=p * p, a1=-p * s1, a2=s2, a3=-s1, p=p)


# --------------------------------------------------------- Mumford/Cantor

@dataclass(frozen=True)
class MumfordDivisor:
    """Reduced divisor (u, v) with u monic, deg u ≤ 2, v² ≡ f (mod u)."""

    u: Poly
    v: Poly

    @staticmethod
    def identity() -> MumfordDivisor:
        return MumfordDivisor(u=(1,), v=())

    def is_identity(self) -> bool:
        return self.u == (1,)


IDENTITY = MumfordDivisor.identity()


def _on_curve(d: MumfordDivisor, curve: GenusTwoCurve) -> bool:
    if not d.u or d.u[-1] != 1 or len(d.u) - 1 > 2:
        return False
    if len(d.v) >= len(d.u):
        return False
    vv = poly_mul(d.v, d.v, curve.p)
    return poly_mod(poly_sub(vv, curve.f, curve.p), d.u, curve.p) == ()


def _compose_reduce(d1: MumfordDivisor, d2: MumfordDivisor,
                    curve: GenusTwoCurve) -> MumfordDivisor:
    p, f = curve.p, curve.f
    u1, v1 = d1.u, d1.v
    u2, v2 = d2.u, d2.v
    # composition (Cantor): d = s1·u1 + s2·u2 + s3·(v1 + v2)
    d0, e1, e2 = poly_xgcd(u1, u2, p)
    d, c1, c2 = poly_xgcd(d0, poly_add(v1, v2, p), p)
    s1 = poly_mul(c1, e1, p)
    s2 = poly_mul(c1, e2, p)
    s3 = c2
    u, rem = poly_divmod(poly_mul(u1, u2, p), poly_mul(d, d, p), p)
    assert rem == ()
    num = poly_add(
        poly_add(poly_mul(s1, poly_mul(u1, v2, p), p),
                 poly_mul(s2, poly_mul(u2, v1, p), p), p),
        poly_mul(s3, poly_add(poly_mul(v1, v2, p), f, p), p), p)
    v, rem = poly_divmod(num, d, p)
    assert rem == ()
    v = poly_mod(v, u, p)
    # reduction to deg u <= 2
    while len(u) - 1 > 2:
        u, rem = poly_divmod(poly_sub(f, poly_mul(v, v, p), p), u, p)
        assert rem == ()
        u = poly_monic(u, p)
        v = poly_mod(poly_neg(v, p), u, p)
    return MumfordDivisor(u=poly_monic(u, p), v=v)


def cantor_add(d1: MumfordDivisor, d2: MumfordDivisor,
               curve: GenusTwoCurve) -> MumfordDivisor:
    """Group law on Jac(C)(F_p) for the odd-degree (deg f = 5) model."""
    if curve.degree != 5:
        raise InvalidCurveError(
            "divisor arithmetic requires the degree-5 model"
        )
    for d in (d1, d2):
        if not _on_curve(d, curve):
            raise InvalidCurveError(f"divisor (u={d.u}, v={d.v}) not on curve")
    return _compose_reduce(d1, d2, curve)


def cantor_neg(d: MumfordDivisor, curve: GenusTwoCurve) -> MumfordDivisor:
    return MumfordDivisor(u=d.u, v=poly_mod(poly_neg(d.v, curve.p), d.u, curve.p))


def _scalar_mul(k: int, d: MumfordDivisor, curve: GenusTwoCurve) -> MumfordDivisor:
    acc = IDENTITY
    base = d
    while k:
        if k & 1:
            acc = _compose_reduce(acc, base, curve)
        k >>= 1
        if k:
            base = _compose_reduce(base, base, curve)
    return acc


def enumerate_divisors(curve: GenusTwoCurve) -> list[MumfordDivisor]:
    """All reduced Mumford divisors on a degree-5 curve."""
    p, f = curve.p, curve.f
    out = [IDENTITY]
    counts = _sqrt_counts_fp(p)
    for a in range(p):
        fa = poly_eval(f, a, p)
        for b in range(p):
            if b * b % p == fa:
                out.append(MumfordDivisor(u=((-a) % p, 1), v=(b,) if b else ()))
    # deg u = 2: u = x² + u1x + u0; f mod u is linear, v = v1x + v0 must
    # satisfy v² ≡ f (mod u), i.e. with x² ≡ −u1x − u0:
    #   2·v1·v0 − v1²·u1 = (f mod u)[1],  v0² − v1²·u0 = (f mod u)[0]
    for u1 in range(p):
        for u0 in range(p):
            u = (u0, u1, 1)
            fm = poly_mod(f, u, p)
            fm0 = fm[0] if len(fm) > 0 else 0
            fm1 = fm[1] if len(fm) > 1 else 0
            for v1 in range(p):
                w1 = v1 * v1 % p
                t1 = w1 * u1 % p
                t0 = w1 * u0 % p
                for v0 in range(p):
                    if (2 * v1 * v0 - t1) % p == fm1 and (v0 * v0 - t0) % p == fm0:
                        out.append(MumfordDivisor(u=u, v=_trim([v0, v1])))
    return out


@dataclass(frozen=True)
class GroupStructure:
    """Abelian invariants of Jac(C)(F_p).

    invariant_factors is ascending with each factor dividing the next;
    p_sylow_factors are the p-parts for the curve's characteristic.
    """

    order: int
    invariant_factors: tuple[int, ...]
    p_sylow_factors: tuple[int, ...]


def p_sylow_structure(invariant_factors: tuple[int, ...] | list[int],
                      p: int) -> list[int]:
    """p-parts of the invariant factors, trivial parts dropped."""
    out = []
    for n in invariant_factors:
        q = 1
        while n % p == 0:
            n //= p
            q *= p
        if q > 1:
            out.append(q)
    return out


def _element_order(d: MumfordDivisor, N: int, curve: GenusTwoCurve,
                   n_factors: dict[int, int]) -> int:
    """Order of d given that it divides N = |Jac|."""
    order = N
    for q in n_factors:
        while order % q == 0 and _scalar_mul(order // q, d, curve).is_identity():
            order //= q
    return order


def _invariant_factors(orders: list[int], N: int) -> tuple[int, ...]:
    """Invariant factors from the multiset of element orders.

    Peels cyclic factors greedily, largest first: the exponent of the
    remaining part is the smallest m whose "order divides m" count,
    corrected for the factors already peeled, equals the remaining
    group order.
    """
    exponent = max(orders)
    divs = [int(d) for d in sympy.divisors(exponent)]
    killed = {m: sum(1 for o in orders if m % o == 0) for m in divs}
    factors = []
    remaining = N
    while remaining > 1:
        lam = min(m for m in divs if killed[m] == remaining)
        factors.append(lam)
        remaining //= lam
        for m in divs:
            killed[m] //= math.gcd(m, lam)
    prod = math.prod(factors) if factors else 1
    if prod != N:
        raise InvalidCurveError(
            f"structure recovery failed: product {prod} != order {N}"
        )
    return tuple(sorted(factors))


def enumerate_jacobian(curve: GenusTwoCurve,
                       budget: int = DEFAULT_BUDGET) -> GroupStructure:
    """Full group structure of Jac(C)(F_p) by exhaustive enumeration.

    Requires the degree-5 model and (√p + 1)⁴ within the budget.
    """
    if curve.degree != 5:
        raise InvalidCurveError(
            "full enumeration requires the degree-5 model"
        )
    p = curve.p
    # (√p + 1)^4 <= B  <=>  4(p+1)√p <= B - (p² + 6p + 1), squared exactly
    slack = budget - (p * p + 6 * p + 1)
    if slack < 0 or 16 * (p + 1) ** 2 * p > slack * slack:
        raise BudgetExceededError(
            f"(√{p} + 1)^4 exceeds the enumeration budget {budget}"
        )
    elements = enumerate_divisors(curve)
    N = len(elements)
    n_factors = {int(q): e for q, e in sympy.factorint(N).items()}
    orders = [_element_order(d, N, curve, n_factors) for d in elements]
    inv = _invariant_factors(orders, N)
    return GroupStructure(
        order=N,
        invariant_factors=inv,
        p_sylow_factors=tuple(p_sylow_structure(inv, p)),
    )
