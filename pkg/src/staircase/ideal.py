"""Monomial ideals of K[x, y] stored as staircases.

A monomial ideal in two variables has a unique minimal monomial generating
set.  Sorted by increasing x-exponent, the y-exponents of that set strictly
decrease, so the whole ideal is a list of lattice points tracing the inner
corners of a staircase.  Every operation here works on that list directly;
the coefficient field never appears.
"""
from __future__ import annotations

import math
import os
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ExponentOverflow, ZeroIdeal

U64_MAX = 2**64 - 1
MAX_EXP_ENV = "STAIRCASE_MAX_EXP"


def max_exponent() -> int:
    """Largest admissible exponent.

    ``STAIRCASE_MAX_EXP`` may lower the ceiling (useful for exercising the
    overflow paths) but can never raise it above the unsigned 64-bit bound.
    """
    raw = os.environ.get(MAX_EXP_ENV)
    if not raw:
        return U64_MAX
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_EXP_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{MAX_EXP_ENV} must be nonnegative")
    return min(value, U64_MAX)


def check_exponent(value: int, what: str = "exponent") -> int:
    ceiling = max_exponent()
    if value > ceiling:
        raise ExponentOverflow(f"{what} {value} exceeds the exponent ceiling {ceiling}")
    return value


class Monomial(NamedTuple):
    """x**a * y**b."""

    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b

    def divides(self, other: Sequence[int]) -> bool:
        return self.a <= other[0] and self.b <= other[1]

    def __str__(self):
        return format_monomial(self)


def format_monomial(m: Sequence[int]) -> str:
    a, b = m
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts) or "1"


def _as_monomial(m) -> Monomial:
    a, b = m
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
        raise TypeError(f"monomial exponents must be integers, got {m!r}")
    if a < 0 or b < 0:
        raise ValueError(f"monomial exponents must be nonnegative, got {m!r}")
    return Monomial(a, b)


class StaircaseIdeal:
    """A monomial ideal given by its canonical minimal generators.

    ``gens`` is sorted by strictly increasing x-exponent (and therefore
    strictly decreasing y-exponent).  The empty tuple is the zero ideal and
    ``((0, 0),)`` the unit ideal.  Use :func:`normalize` to build an ideal
    from arbitrary monomials; the constructor only accepts canonical lists.
    """

    __slots__ = ("gens",)

    def __init__(self, gens: Iterable = (), *, _trusted: bool = False):
        if _trusted:
            self.gens = tuple(gens)
            return
        gens = tuple(_as_monomial(g) for g in gens)
        for prev, cur in zip(gens, gens[1:]):
            if not (prev.a < cur.a and prev.b > cur.b):
                raise ValueError(f"generators are not a canonical staircase at {prev}, {cur}")
        if gens:
            check_exponent(max(gens[-1].a, gens[0].b))
        self.gens = gens

    def __repr__(self):
        return f"StaircaseIdeal({[tuple(g) for g in self.gens]})"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __eq__(self, other):
        if not isinstance(other, StaircaseIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __bool__(self):
        return bool(self.gens)

    def __contains__(self, m):
        return contains_monomial(self, m)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def xexps(self) -> list[int]:
        return [g.a for g in self.gens]

    def to_list(self) -> list[list[int]]:
        return [[g.a, g.b] for g in self.gens]


ZERO = StaircaseIdeal((), _trusted=True)
UNIT = StaircaseIdeal((Monomial(0, 0),), _trusted=True)


def _sweep(pairs: list) -> StaircaseIdeal:
    # pairs must already be sorted by (a, b); keep the strictly decreasing-b frontier
    out = []
    best = None
    for a, b in pairs:
        if best is None or b < best:
            out.append(Monomial(a, b))
            best = b
    return StaircaseIdeal(out, _trusted=True)


def normalize(candidates: Iterable) -> StaircaseIdeal:
    """Minimal generators of the ideal generated by ``candidates``.

    Duplicates and divisible monomials are dropped.

    >>> normalize([(2, 0), (1, 1), (2, 2)]).to_list()
    [[1, 1], [2, 0]]
    """
    pairs = sorted(_as_monomial(c) for c in candidates)
    if pairs:
        check_exponent(max(max(a for a, _ in pairs), max(b for _, b in pairs)))
    return _sweep(pairs)


def normalize_report(candidates: Iterable) -> tuple[StaircaseIdeal, bool]:
    """Like :func:`normalize`, also saying whether the input was already canonical."""
    cands = [_as_monomial(c) for c in candidates]
    ideal = normalize(cands)
    return ideal, tuple(cands) != ideal.gens


def ideal_from_monomial(a: int, b: int) -> StaircaseIdeal:
    return normalize([(a, b)])


def maximal_ideal_power(d: int) -> StaircaseIdeal:
    """(x, y)**d, i.e. every monomial of degree d."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    check_exponent(d)
    return StaircaseIdeal((Monomial(i, d - i) for i in range(d + 1)), _trusted=True)


def ideal_sum(I: StaircaseIdeal, J: StaircaseIdeal) -> StaircaseIdeal:
    if not I.gens:
        return J
    if not J.gens:
        return I
    # both inputs are sorted: merge, then one sweep
    merged = []
    gi, gj = I.gens, J.gens
    i = j = 0
    while i < len(gi) and j < len(gj):
        if gi[i] <= gj[j]:
            merged.append(gi[i])
            i += 1
        else:
            merged.append(gj[j])
            j += 1
    merged.extend(gi[i:])
    merged.extend(gj[j:])
    return _sweep(merged)


def product(I: StaircaseIdeal, J: StaircaseIdeal) -> StaircaseIdeal:
    """Product of two monomial ideals.

    Raises ExponentOverflow before building anything if some exponent sum
    could pass the ceiling.
    """
    if not I.gens or not J.gens:
        return ZERO
    ceiling = max_exponent()
    # gens are sorted: the largest x-exponent is last, the largest y-exponent first
    top_a = I.gens[-1].a + J.gens[-1].a
    top_b = I.gens[0].b + J.gens[0].b
    if top_a > ceiling or top_b > ceiling:
        raise ExponentOverflow(
            f"product exponent {max(top_a, top_b)} exceeds the exponent ceiling {ceiling}"
        )
    pairs = [(ga + ha, gb + hb) for ga, gb in I.gens for ha, hb in J.gens]
    pairs.sort()
    return _sweep(pairs)


def powers(I: StaircaseIdeal, kmax: int) -> Iterator[StaircaseIdeal]:
    """Yield I, I**2, ..., I**kmax by repeated multiplication."""
    if kmax < 1:
        return
    current = I
    yield current
    for _ in range(kmax - 1):
        current = product(current, I)
        yield current


def power(I: StaircaseIdeal, k: int) -> StaircaseIdeal:
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    result = I
    for result in powers(I, k):
        pass
    return result


def mu(I: StaircaseIdeal) -> int:
    return len(I.gens)


def y_threshold(I: StaircaseIdeal, a: int):
    """Smallest b with x**a * y**b in I, or None if no such b exists."""
    gens = I.gens
    # last generator with x-exponent <= a has the smallest y-exponent among those that fit
    i = bisect_right(gens, (a, math.inf)) - 1
    if i < 0:
        return None
    return gens[i].b


def contains_monomial(I: StaircaseIdeal, m) -> bool:
    a, b = m
    threshold = y_threshold(I, a)
    return threshold is not None and threshold <= b


def contains(I: StaircaseIdeal, J: StaircaseIdeal) -> bool:
    """True iff J is a subset of I."""
    return all(contains_monomial(I, g) for g in J.gens)


def equals(I: StaircaseIdeal, J: StaircaseIdeal) -> bool:
    return I.gens == J.gens


def deg_ideal(I: StaircaseIdeal) -> int:
    if not I.gens:
        raise ZeroIdeal("the zero ideal has no homogeneous elements")
    return min(a + b for a, b in I.gens)


def intersection(I: StaircaseIdeal, J: StaircaseIdeal) -> StaircaseIdeal:
    """I ∩ J, generated by the pairwise lcms."""
    if not I.gens or not J.gens:
        return ZERO
    pairs = sorted((max(ga, ha), max(gb, hb)) for ga, gb in I.gens for ha, hb in J.gens)
    return _sweep(pairs)


def colon_monomial(I: StaircaseIdeal, m) -> StaircaseIdeal:
    """I : (x**a * y**b)."""
    a, b = m
    pairs = sorted((max(ga - a, 0), max(gb - b, 0)) for ga, gb in I.gens)
    return _sweep(pairs)


def quotient_basis(J: StaircaseIdeal, I: StaircaseIdeal) -> list[Monomial]:
    """Monomials lying in J but not in I, sorted.

    This is a K-basis of J/I whenever I is contained in J.  Raises
    ValueError when the set is infinite.
    """
    if not J.gens:
        return []
    # finite iff every column of J is eventually cut by I, and beyond the last
    # corner I's floor is no higher than J's
    if not I.gens or I.gens[0].a > J.gens[0].a or I.gens[-1].b > J.gens[-1].b:
        raise ValueError("J \\ I is infinite")
    # both thresholds are step functions of a, constant between generator x-exponents
    cuts = sorted({g.a for g in J.gens} | {g.a for g in I.gens})
    out = []
    for lo, hi in zip(cuts, cuts[1:]):
        tj = y_threshold(J, lo)
        if tj is None:
            continue
        ti = y_threshold(I, lo)
        if tj >= ti:
            continue
        for a in range(lo, hi):
            out.extend(Monomial(a, b) for b in range(tj, ti))
    return out


def standard_monomials(I: StaircaseIdeal) -> list[Monomial]:
    """Monomials outside I (a K-basis of S/I); I must contain x- and y-powers."""
    return quotient_basis(UNIT, I)


@dataclass(frozen=True)
class EquigeneratedSpec:
    """The ideal generated by x**a * y**(d - a) for a in ``xexps``."""

    xexps: tuple[int, ...]
    d: int

    def __post_init__(self):
        xs = tuple(self.xexps)
        object.__setattr__(self, "xexps", xs)
        if self.d < 0:
            raise ValueError("degree must be nonnegative")
        if any(x < 0 for x in xs):
            raise ValueError("x-exponents must be nonnegative")
        if any(p >= q for p, q in zip(xs, xs[1:])):
            raise ValueError(f"x-exponents must be strictly increasing: {xs}")
        if xs and xs[-1] > self.d:
            raise ValueError(f"x-exponent {xs[-1]} exceeds degree {self.d}")

    @classmethod
    def from_ideal(cls, I: StaircaseIdeal) -> "EquigeneratedSpec":
        if not I.gens:
            raise ZeroIdeal("the zero ideal has no generating degree")
        degrees = {g.degree for g in I.gens}
        if len(degrees) != 1:
            raise ValueError(f"ideal is not equigenerated (degrees {sorted(degrees)})")
        return cls(tuple(g.a for g in I.gens), degrees.pop())

    def to_ideal(self) -> StaircaseIdeal:
        check_exponent(self.d)
        return StaircaseIdeal((Monomial(a, self.d - a) for a in self.xexps), _trusted=True)

    def __mul__(self, other: "EquigeneratedSpec") -> "EquigeneratedSpec":
        d = check_exponent(self.d + other.d)
        return EquigeneratedSpec(tuple(sorted({a + b for a in self.xexps for b in other.xexps})), d)
