"""Graded pieces, colon by the maximal ideal, and socles of S/I."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMPrimary
from .ideal import (
    Monomial,
    StaircaseIdeal,
    colon_monomial,
    intersection,
    quotient_basis,
)


@dataclass(frozen=True)
class GradedSlice:
    """x-exponents a with x**a * y**(d - a) in I."""

    d: int
    xexps: tuple[int, ...]

    def __len__(self):
        return len(self.xexps)

    def to_json(self) -> dict:
        return {"d": self.d, "xexps": list(self.xexps)}

    @classmethod
    def from_json(cls, obj: dict) -> "GradedSlice":
        d = obj["d"]
        xexps = tuple(obj["xexps"])
        if any(not 0 <= a <= d for a in xexps) or any(p >= q for p, q in zip(xexps, xexps[1:])):
            raise ValueError("slice exponents must be strictly increasing within [0, d]")
        return cls(d, xexps)


def _intervals(I: StaircaseIdeal, d: int):
    # Generator (a, b) covers the x-exponents [a, d - b] of degree d.  Both ends
    # increase along the staircase, so the intervals arrive sorted.
    for a, b in I.gens:
        if a + b <= d:
            yield a, d - b


def graded_dim(I: StaircaseIdeal, d: int) -> int:
    """dim_K of the degree-d part of I."""
    if d < 0:
        return 0
    total = 0
    covered = -1
    for lo, hi in _intervals(I, d):
        lo = max(lo, covered + 1)
        if hi >= lo:
            total += hi - lo + 1
            covered = hi
    return total


def graded_slice(I: StaircaseIdeal, d: int) -> GradedSlice:
    xs = []
    covered = -1
    for lo, hi in _intervals(I, d):
        lo = max(lo, covered + 1)
        if hi >= lo:
            xs.extend(range(lo, hi + 1))
            covered = hi
    return GradedSlice(d, tuple(xs))


def is_m_primary(I: StaircaseIdeal) -> bool:
    return bool(I.gens) and I.gens[0].a == 0 and I.gens[-1].b == 0


def _require_m_primary(I: StaircaseIdeal):
    if not is_m_primary(I):
        if not I.gens:
            why = "it is the zero ideal"
        elif I.gens[0].a != 0:
            why = "it contains no pure power of y"
        else:
            why = "it contains no pure power of x"
        raise NotMPrimary(f"ideal is not (x,y)-primary: {why}; S/I has infinite length")


def socle_monomials(I: StaircaseIdeal) -> list[Monomial]:
    """Monomial basis of the socle of S/I, read off the staircase corners.

    Between consecutive generators (a_i, b_i) and (a_{i+1}, b_{i+1}) the
    staircase has one inner corner x**(a_{i+1} - 1) * y**(b_i - 1).
    """
    _require_m_primary(I)
    g = I.gens
    return [Monomial(g[i + 1].a - 1, g[i].b - 1) for i in range(len(g) - 1)]


def cm_type(I: StaircaseIdeal) -> int:
    """Cohen-Macaulay type of S/I (0 for the unit ideal)."""
    return len(socle_monomials(I))


def colon_by_maximal(I: StaircaseIdeal) -> StaircaseIdeal:
    """I : (x, y) = (I : x) ∩ (I : y)."""
    if not I.gens:
        return I
    return intersection(colon_monomial(I, (1, 0)), colon_monomial(I, (0, 1)))


def socle_via_colon(I: StaircaseIdeal) -> list[Monomial]:
    """Socle basis as the monomials of (I : m) outside I.

    Shares nothing with the corner formula beyond the staircase type.
    """
    _require_m_primary(I)
    return quotient_basis(colon_by_maximal(I), I)
