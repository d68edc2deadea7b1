"""Shared fixtures, including the full (field, ω) verification grid.

The grid covers every primitive validated field with D ≤ 20 and
|a|, |b| ≤ 8, and every ω with |c_i| ≤ 6 whose relative norm is a
rational prime.  A numpy prefilter locates the rational-prime-norm
quadruples; every case kept in the grid is re-verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest
import sympy

from g2cm import CMFieldParams, RealQuadElem, validate_field
from g2cm.cm_field import is_squarefree
from g2cm.errors import G2CMError

GRID_D_MAX = 20
GRID_AB_MAX = 8
GRID_C_MAX = 6

SQUAREFREE_D = [d for d in range(2, GRID_D_MAX + 1) if is_squarefree(d)]


def iter_validated_fields(ab_max: int = GRID_AB_MAX, d_max: int = GRID_D_MAX):
    for D in range(2, d_max + 1):
        if not is_squarefree(D):
            continue
        for a in range(-ab_max, ab_max + 1):
            for b in range(-ab_max, ab_max + 1):
                try:
                    yield validate_field(D, a, b)
                except G2CMError:
                    continue


@dataclass(frozen=True)
class GridCase:
    field: CMFieldParams
    c: tuple[int, int, int, int]
    p: int


def _build_grid() -> list[GridCase]:
    c_range = range(-GRID_C_MAX, GRID_C_MAX + 1)
    pairs = [(i, j) for i in c_range for j in c_range]
    prime_limit = 4 * (
        2 * GRID_C_MAX ** 2 * (1 + GRID_D_MAX)
        * (2 * GRID_AB_MAX * (1 + GRID_D_MAX))
    )
    prime_lookup = np.zeros(prime_limit + 1, dtype=bool)
    for q in sympy.primerange(2, prime_limit + 1):
        prime_lookup[q] = True

    cases = []
    for field in iter_validated_fields():
        if not field.primitive():
            continue
        t = field.eta_squared_negated()
        alpha_sq = [RealQuadElem(i, j, field.D) * RealQuadElem(i, j, field.D)
                    for i, j in pairs]
        beta_sq_t = [RealQuadElem(i, j, field.D)
                     * RealQuadElem(i, j, field.D) * t for i, j in pairs]
        ax = np.array([e.x for e in alpha_sq], dtype=np.int64)
        ay = np.array([e.y for e in alpha_sq], dtype=np.int64)
        bx = np.array([e.x for e in beta_sq_t], dtype=np.int64)
        by = np.array([e.y for e in beta_sq_t], dtype=np.int64)
        norm_x = ax[:, None] + bx[None, :]
        norm_y = ay[:, None] + by[None, :]
        candidate = (norm_y == 0) & (norm_x >= 2) & (norm_x <= prime_limit)
        candidate &= prime_lookup[np.clip(norm_x, 0, prime_limit)]
        for i, j in np.argwhere(candidate):
            c1, c2 = pairs[i]
            c3, c4 = pairs[j]
            cases.append(GridCase(field=field,
                                  c=(c1, c2, c3, c4),
                                  p=int(norm_x[i, j])))
    return cases


@pytest.fixture(scope="session")
def frobenius_grid() -> list[GridCase]:
    grid = _build_grid()
    assert grid, "verification grid unexpectedly empty"
    return grid


@pytest.fixture(scope="session")
def lemma2_report():
    from g2cm import verify_lemma2

    return verify_lemma2()
