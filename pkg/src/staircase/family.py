"""The parametric family I = I_1 + ... + I_m whose powers lose generators.

For parameters m, p_1..p_m and a_2..a_m with p_1 = (a_i + 1) p_i:

    I_1 = (x^p1, y^p1) (x^((m+1)p1), y^((m+1)p1))
    I_i = x^(i p1 + p_i) y^((m+2-i) p1 + p_2 + ... + p_i) (x^p_i, y^p_i)^(a_i - 1)

Each I_i is equigenerated, and I**k collapses onto I_1**(k-1) times a shrinking
prefix sum of the components, which makes mu(I**k) decrease for k < m.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParams, VerificationError
from .grading import cm_type
from .ideal import (
    UNIT,
    StaircaseIdeal,
    check_exponent,
    deg_ideal,
    ideal_from_monomial,
    ideal_sum,
    mu,
    power,
    powers,
    product,
)


REPORT_FIELDS = ("k", "mu_computed", "mu_predicted", "structure_ok", "cm_type", "degree")


@dataclass(frozen=True)
class FamilyParams:
    m: int
    p: tuple[int, ...]
    a: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def p1(self) -> int:
        return self.p[0]

    def a_(self, i: int) -> int:
        """a_i with the 1-based indexing of the construction (2 <= i <= m)."""
        return self.a[i - 2]

    def p_(self, i: int) -> int:
        return self.p[i - 1]

    def to_json(self) -> dict:
        return {"m": self.m, "p": list(self.p), "a": list(self.a)}

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyParams":
        try:
            m, p, a = obj["m"], obj["p"], obj.get("a", [])
        except (KeyError, TypeError):
            raise InvalidParams('params must be an object {"m": int, "p": [...], "a": [...]}') from None
        for value in [m, *p, *a]:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParams(f"params must be integers, got {value!r}")
        return cls(m, tuple(p), tuple(a))

    def describe(self) -> str:
        a = ",".join(map(str, self.a)) or "-"
        return f"m={self.m} p={','.join(map(str, self.p))} a={a}"


def validate(params: FamilyParams) -> None:
    """Raise InvalidParams naming the first violated hypothesis."""
    m, p, a = params.m, params.p, params.a
    if m < 1:
        raise InvalidParams(f"m must be >= 1, got {m}")
    if len(p) != m:
        raise InvalidParams(f"expected {m} values of p, got {len(p)}")
    if len(a) != m - 1:
        raise InvalidParams(f"expected {m - 1} values of a (a_2..a_{m}), got {len(a)}")
    for i, pi in enumerate(p, start=1):
        if pi < 2:
            raise InvalidParams(f"p_{i} must be >= 2, got {pi}")
    for i, ai in enumerate(a, start=2):
        if ai < 2:
            raise InvalidParams(f"a_{i} must be >= 2, got {ai}")
    for i in range(2, m + 1):
        if p[0] != (params.a_(i) + 1) * params.p_(i):
            raise InvalidParams(f"p1 != (a_{i}+1)*p_{i}: {p[0]} != {params.a_(i) + 1}*{params.p_(i)}")
    middle = sum(p[1 : m - 1])
    if middle >= p[0]:
        raise InvalidParams(f"p_2+...+p_{m - 1} = {middle} is not < p1 = {p[0]}")


def _xy(a: int, b: int) -> StaircaseIdeal:
    return ideal_from_monomial(check_exponent(a), check_exponent(b))


def _pair(e: int) -> StaircaseIdeal:
    """(x^e, y^e)."""
    check_exponent(e)
    return StaircaseIdeal([(0, e), (e, 0)])


def build_family(params: FamilyParams) -> tuple[list[StaircaseIdeal], StaircaseIdeal]:
    """Return ([I_1, ..., I_m], I)."""
    validate(params)
    m, p1 = params.m, params.p1
    comps = [product(_pair(p1), _pair((m + 1) * p1))]
    for i in range(2, m + 1):
        pi = params.p_(i)
        shift = _xy(i * p1 + pi, (m + 2 - i) * p1 + sum(params.p[1:i]))
        # (x^pi, y^pi)^(a_i - 1) for a_i >= 2
        comps.append(product(shift, power(_pair(pi), params.a_(i) - 1)))
    total = comps[0]
    for comp in comps[1:]:
        total = ideal_sum(total, comp)
    return comps, total


def component_degree(params: FamilyParams, u: int) -> int:
    """d_u = deg(I_u): (m+2)p_1 for u = 1, else d_1 + p_1 + ... + p_(u-1)."""
    if not 1 <= u <= params.m:
        raise IndexError(f"component index {u} outside [1, {params.m}]")
    d1 = (params.m + 2) * params.p1
    return d1 + sum(params.p[: u - 1])


def predicted_mu(params: FamilyParams, k: int) -> int:
    validate(params)
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    return predicted_mu_from_a(params.a, params.m, k)


def predicted_power_structure(params: FamilyParams, k: int, components=None) -> StaircaseIdeal:
    """I_1^(k-1) (I_1 + ... + I_(m+1-k)) for k < m, else I_1^k."""
    validate(params)
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    if components is None:
        components, _ = build_family(params)
    m = params.m
    first = components[0]
    if k >= m:
        return power(first, k)
    head = components[0]
    for comp in components[1 : m + 1 - k]:
        head = ideal_sum(head, comp)
    prefix = UNIT if k == 1 else power(first, k - 1)
    return product(prefix, head)


def mu_differences(a: Sequence[int], n: int) -> list[int]:
    """mu(I^(k+1)) - mu(I^k) for k = 1..n-1, predicted for an m = n family."""
    return [predicted_mu_from_a(a, n, k + 1) - predicted_mu_from_a(a, n, k) for k in range(1, n)]


def predicted_mu_from_a(a: Sequence[int], m: int, k: int) -> int:
    if k <= m - 1:
        return (k + 1) ** 2 + k * sum(a[: m - k])
    return (m + 2) * k + 1


def minimal_p(a: Sequence[int]) -> tuple[int, ...]:
    """Smallest p with p_1 = (a_i+1) p_i and every p_i >= 2.

    p_1 must be a multiple of L = lcm(a_i + 1); L itself works unless some
    quotient drops to 1, in which case 2L does.
    """
    lcm = math.lcm(*(ai + 1 for ai in a)) if a else 1
    p1 = lcm if all(lcm // (ai + 1) >= 2 for ai in a) and lcm >= 2 else 2 * lcm
    return (p1, *(p1 // (ai + 1) for ai in a))


def params_from_a(a: Sequence[int]) -> FamilyParams:
    a = tuple(a)
    return FamilyParams(len(a) + 1, minimal_p(a), a)


def _reciprocal_ok(a: Sequence[int], n: int) -> bool:
    # p_2 + ... + p_(n-1) < p_1, divided through by p_1
    return sum(Fraction(1, ai + 1) for ai in a[: n - 2]) < 1


def _greedy_a(n: int, floor: int) -> list[int]:
    a: list[int] = []
    for k in range(n - 1, 0, -1):
        known = 2 * k + 3 + sum(a)
        # known - k*x <= -1  <=>  x >= (known + 1) / k
        a.append(max(floor, -(-(known + 1) // k)))
    return a


def choose_parameters(n: int) -> FamilyParams:
    """Parameters with mu(I) > mu(I^2) > ... > mu(I^n) = (n+1)^2.

    Each difference mu(I^(k+1)) - mu(I^k) = 2k+3 + a_2+...+a_(n-k) - k a_(n+1-k)
    involves exactly one new a, so the a_i are fixed greedily from k = n-1
    (fixing a_2) down to k = 1 (fixing a_n), each as the least admissible
    value making its difference negative.  If 1/(a_2+1) + ... + 1/(a_(n-1)+1)
    reaches 1, the greedy pass is rerun with a higher lower bound on every a_i.
    n = 1 returns the single-block family (mu(I^k) = 3k + 1).
    """
    if n < 1:
        raise InvalidParams(f"n must be >= 1, got {n}")
    if n == 1:
        return FamilyParams(1, (2,), ())
    floor = 2
    a = _greedy_a(n, floor)
    while not _reciprocal_ok(a, n):
        floor += 1
        a = _greedy_a(n, floor)
    params = params_from_a(a)
    validate(params)
    return params


@dataclass(frozen=True)
class MuReport:
    k: int
    mu_computed: int
    mu_predicted: int
    structure_ok: bool
    cm_type: int
    degree: int

    @property
    def ok(self) -> bool:
        return self.structure_ok and self.mu_computed == self.mu_predicted

    def to_json(self) -> dict:
        return asdict(self)


def mu_reports(params: FamilyParams, kmax: int) -> list[MuReport]:
    """Compute I..I^kmax and compare each against the closed forms."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    comps, ideal = build_family(params)
    reports = []
    for k, Ik in enumerate(powers(ideal, kmax), start=1):
        predicted = predicted_power_structure(params, k, comps)
        reports.append(
            MuReport(
                k=k,
                mu_computed=mu(Ik),
                mu_predicted=predicted_mu(params, k),
                structure_ok=Ik == predicted,
                cm_type=cm_type(Ik),
                degree=deg_ideal(Ik),
            )
        )
    return reports


def sign_sequence(params: FamilyParams, kmax: int) -> list[str]:
    """Signs of mu(I^(k+1)) - mu(I^k) for k = 1..kmax-1, from computed powers."""
    if kmax < 2:
        raise ValueError(f"kmax must be >= 2, got {kmax}")
    _, ideal = build_family(params)
    mus = [mu(Ik) for Ik in powers(ideal, kmax)]
    return signs(mus)


def signs(values: Sequence[int]) -> list[str]:
    return ["+" if b > a else "-" if b < a else "0" for a, b in zip(values, values[1:])]


def verify_headline(n: int, kmax: int, params: FamilyParams | None = None) -> list[MuReport]:
    """Check mu(I) > ... > mu(I^n) = (n+1)^2 and mu(I^k) = (n+2)k + 1 for k >= n.

    ``params`` overrides the greedy chooser (its m must equal n).  Raises
    VerificationError listing every mismatch.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kmax < n:
        raise ValueError(f"kmax must be >= n, got kmax={kmax}, n={n}")
    if params is None:
        params = choose_parameters(n)
    elif params.m != n:
        raise InvalidParams(f"params have m={params.m}, expected m=n={n}")
    reports = mu_reports(params, kmax)
    problems = []
    for r in reports:
        if r.mu_computed != r.mu_predicted:
            problems.append(f"k={r.k}: computed mu {r.mu_computed} != predicted {r.mu_predicted}")
        if not r.structure_ok:
            problems.append(f"k={r.k}: power differs from the predicted structure")
        if r.cm_type != r.mu_computed - 1:
            problems.append(f"k={r.k}: type {r.cm_type} != mu - 1")
        if r.k >= n and r.mu_computed != (n + 2) * r.k + 1:
            problems.append(f"k={r.k}: mu {r.mu_computed} != (n+2)k+1 = {(n + 2) * r.k + 1}")
    mus = [r.mu_computed for r in reports[:n]]
    if any(b >= a for a, b in zip(mus, mus[1:])):
        problems.append(f"mu not strictly decreasing through k={n}: {mus}")
    if reports[n - 1].mu_computed != (n + 1) ** 2:
        problems.append(f"mu(I^{n}) = {reports[n - 1].mu_computed} != {(n + 1) ** 2}")
    if problems:
        raise VerificationError("; ".join(problems), problems)
    return reports


def reports_to_csv(reports: Iterable[MuReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for r in reports:
        writer.writerow([r.k, r.mu_computed, r.mu_predicted, str(r.structure_ok).lower(), r.cm_type, r.degree])
    return buf.getvalue()


def reports_from_csv(text: str) -> list[MuReport]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        out.append(
            MuReport(
                k=int(row["k"]),
                mu_computed=int(row["mu_computed"]),
                mu_predicted=int(row["mu_predicted"]),
                structure_ok=row["structure_ok"] == "true",
                cm_type=int(row["cm_type"]),
                degree=int(row["degree"]),
            )
        )
    return out
