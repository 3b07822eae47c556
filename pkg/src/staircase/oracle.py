"""Brute-force reference implementations.

Nothing here calls into ``staircase.ideal`` except for the Monomial and
StaircaseIdeal types: the point is to have a second, deliberately naive
route to every answer the fast kernel gives.
"""
from __future__ import annotations

import os
import random

from .errors import ExponentOverflow
from .ideal import Monomial, StaircaseIdeal

_U64_MAX = 2**64 - 1


def _ceiling():
    raw = os.environ.get("STAIRCASE_MAX_EXP")
    return min(int(raw), _U64_MAX) if raw else _U64_MAX


def _divides(g, h):
    return g[0] <= h[0] and g[1] <= h[1]


def naive_minimalize(candidates) -> list[Monomial]:
    """All-pairs divisibility filter, O(n^2).  Output order is unspecified."""
    distinct = list(dict.fromkeys((int(a), int(b)) for a, b in candidates))
    keep = []
    for i, h in enumerate(distinct):
        if not any(j != i and _divides(g, h) for j, g in enumerate(distinct)):
            keep.append(Monomial(*h))
    return keep


def naive_product(I, J) -> list[Monomial]:
    ceiling = _ceiling()
    sums = []
    for ga, gb in I:
        for ha, hb in J:
            a, b = ga + ha, gb + hb
            if a > ceiling or b > ceiling:
                raise ExponentOverflow(f"exponent {max(a, b)} exceeds the ceiling {ceiling}")
            sums.append((a, b))
    return naive_minimalize(sums)


def naive_power(I, k: int) -> list[Monomial]:
    result = naive_minimalize(I)
    for _ in range(k - 1):
        result = naive_product(result, I)
    return result


def naive_contains(gens, m) -> bool:
    return any(_divides(g, m) for g in gens)


def naive_graded_slice(gens, d: int) -> list[int]:
    return [a for a in range(d + 1) if naive_contains(gens, (a, d - a))]


def naive_socle(gens, bound: int) -> list[Monomial]:
    """Monomials u with a, b <= bound, u not in I but x*u and y*u in I."""
    out = []
    for a in range(bound + 1):
        for b in range(bound + 1):
            if naive_contains(gens, (a, b)):
                continue
            if naive_contains(gens, (a + 1, b)) and naive_contains(gens, (a, b + 1)):
                out.append(Monomial(a, b))
    return out


def random_ideal(seed: int, max_gens: int = 30, max_exp: int = 10**6, m_primary: bool = False) -> StaircaseIdeal:
    """Deterministic random staircase.

    Draw a generator count n in [1, max_gens] (capped so enough distinct
    exponents exist), then n distinct x-exponents sorted increasingly and n
    distinct y-exponents sorted decreasingly, all from [0, max_exp], and pair
    them up.  With ``m_primary`` the smallest x- and y-exponents are forced to 0
    so the ideal contains pure powers of both variables.
    """
    if max_gens < 1 or max_exp < 1:
        raise ValueError("max_gens and max_exp must be >= 1")
    rng = random.Random(seed)
    n = rng.randint(1, min(max_gens, max_exp + 1))
    if m_primary:
        if n == 1:
            return StaircaseIdeal([(0, 0)])
        xs = [0] + sorted(rng.sample(range(1, max_exp + 1), n - 1))
        ys = [0] + sorted(rng.sample(range(1, max_exp + 1), n - 1))
    else:
        xs = sorted(rng.sample(range(max_exp + 1), n))
        ys = sorted(rng.sample(range(max_exp + 1), n))
    return StaircaseIdeal(zip(xs, reversed(ys)))


def random_monomials(seed: int, count: int, max_exp: int) -> list[Monomial]:
    rng = random.Random(seed)
    return [Monomial(rng.randint(0, max_exp), rng.randint(0, max_exp)) for _ in range(count)]
