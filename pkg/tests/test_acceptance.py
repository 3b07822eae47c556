"""Exit criteria.  Run with ``pytest tests/test_acceptance.py``; the terminal
summary prints one PASS/FAIL line per criterion."""
import itertools
import time
from fractions import Fraction

import pytest

from staircase.cli import main
from staircase.family import (
    FamilyParams,
    build_family,
    choose_parameters,
    component_degree,
    params_from_a,
    predicted_mu,
    predicted_power_structure,
    verify_headline,
)
from staircase.grading import cm_type, graded_dim, socle_monomials, socle_via_colon
from staircase.ideal import contains, ideal_sum, maximal_ideal_power, mu, normalize, power, powers, product
from staircase.oracle import naive_minimalize, naive_power, naive_product, random_ideal, random_monomials

EXAMPLE = FamilyParams(5, (72, 18, 12, 8, 2), (3, 5, 8, 35))


def grid():
    """m in {2,3,4}, every a_i in {2,3,5}, minimal p, reciprocal-sum condition."""
    out = []
    for m in (2, 3, 4):
        for a in itertools.product((2, 3, 5), repeat=m - 1):
            if sum(Fraction(1, x + 1) for x in a[:-1]) < 1:
                out.append(params_from_a(a))
    return out


@pytest.fixture(scope="module")
def grid_powers():
    """{params: (components, [I, I^2, ..., I^(m+2)])}"""
    table = {}
    for params in grid():
        comps, I = build_family(params)
        table[params] = (comps, list(powers(I, params.m + 2)))
    return table


@pytest.fixture(scope="module")
def headline():
    runs = {}
    for n in (2, 3, 4, 5):
        start = time.perf_counter()
        reports = verify_headline(n, n + 3)
        runs[n] = (reports, time.perf_counter() - start)
    return runs


@pytest.mark.criterion(1, "flagship m=5 reproduction")
def test_c1_flagship(record_property):
    start = time.perf_counter()
    _, I = build_family(EXAMPLE)
    mus = [mu(P) for P in powers(I, 6)]
    elapsed = time.perf_counter() - start
    record_property("detail", f"mu = {mus}, {elapsed:.3f}s")
    assert mus == [55, 41, 40, 37, 36, 43]
    assert elapsed < 5.0


@pytest.mark.criterion(2, "closed-form mu on the m in {2,3,4} grid")
def test_c2_mu_grid(grid_powers, record_property):
    checked = 0
    for params, (_, pows) in grid_powers.items():
        for k, Ik in enumerate(pows, start=1):
            assert mu(Ik) == predicted_mu(params, k), (params, k)
            checked += 1
    record_property("detail", f"{len(grid_powers)} tuples, {checked} powers")
    assert len(grid_powers) >= 20


@pytest.mark.criterion(3, "power structure on the same grid")
def test_c3_structure_grid(grid_powers, record_property):
    checked = 0
    for params, (comps, pows) in grid_powers.items():
        for k, Ik in enumerate(pows, start=1):
            assert Ik == predicted_power_structure(params, k, comps), (params, k)
            checked += 1
    record_property("detail", f"{len(grid_powers)} tuples, {checked} powers")
    assert len(grid_powers) >= 20


@pytest.mark.criterion(4, "strict decrease to (n+1)^2 then (n+2)k+1, n = 2..5")
def test_c4_headline(headline, record_property):
    parts = []
    for n, (reports, elapsed) in headline.items():
        mus = [r.mu_computed for r in reports]
        assert all(x > y for x, y in zip(mus[:n], mus[1:n]))
        assert mus[n - 1] == (n + 1) ** 2
        for k in range(n, n + 4):
            assert mus[k - 1] == (n + 2) * k + 1
        assert all(r.structure_ok and r.mu_computed == r.mu_predicted for r in reports)
        parts.append(f"n={n}: {mus} ({elapsed:.2f}s)")
    assert headline[5][1] < 60.0
    record_property("detail", "; ".join(parts))


@pytest.mark.criterion(5, "socle size = mu - 1, corners agree with the colon route")
def test_c5_type_identity(grid_powers, headline, record_property):
    checked = 0
    for seed in range(500):
        I = random_ideal(seed, max_gens=30, max_exp=10**6, m_primary=True)
        corners = socle_monomials(I)
        assert len(corners) == mu(I) - 1
        assert corners == socle_via_colon(I)
        checked += 1
    family_ideals = list(powers(build_family(EXAMPLE)[1], 6))
    for _, pows in grid_powers.values():
        family_ideals.extend(pows)
    for n in headline:
        family_ideals.extend(powers(build_family(choose_parameters(n))[1], n + 3))
    for I in family_ideals:
        corners = socle_monomials(I)
        assert len(corners) == mu(I) - 1
        assert corners == socle_via_colon(I)
        checked += 1
    record_property("detail", f"{checked} ideals")


@pytest.mark.criterion(6, "descending Cohen-Macaulay types and the n=2 spot check")
def test_c6_corollary(record_property):
    parts = []
    for n in (2, 3, 4, 5):
        _, I = build_family(choose_parameters(n))
        types = [cm_type(P) for P in powers(I, n)]
        assert all(x > y for x, y in zip(types, types[1:]))
        assert types[-1] == (n + 1) ** 2 - 1
        parts.append(f"n={n}: {types}")
    _, I = build_family(choose_parameters(2))
    assert mu(I) == 10 >= 6
    assert mu(power(I, 2)) == 9
    record_property("detail", "; ".join(parts) + "; n=2 mu(I)=10, mu(I^2)=9")


def _prefix(comps, k, u):
    head = comps[0]
    for c in comps[1:u]:
        head = ideal_sum(head, c)
    return head if k == 1 else product(power(comps[0], k - 1), head)


@pytest.mark.criterion(7, "graded dimension jumps k*a_u and containment of m-powers")
def test_c7_dimensions(grid_powers, record_property):
    jumps = contained = 0
    for params in grid_powers:
        comps, _ = grid_powers[params]
        m = params.m
        d1 = component_degree(params, 1)
        for k in range(1, m + 3):
            for u in range(2, m + 1):
                deg = (k - 1) * d1 + component_degree(params, u)
                smaller = _prefix(comps, k, u - 1)
                if u <= m + 1 - k:
                    bigger = _prefix(comps, k, u)
                    assert graded_dim(bigger, deg) - graded_dim(smaller, deg) == k * params.a_(u)
                    jumps += 1
                else:
                    assert graded_dim(smaller, deg) == deg + 1
                    assert contains(smaller, maximal_ideal_power(deg))
                    contained += 1
    record_property("detail", f"{jumps} dimension jumps, {contained} containments")
    assert jumps > 0 and contained > 0


@pytest.mark.criterion(8, "fast kernel equals the naive oracle on 1000 instances")
def test_c8_oracle(record_property):
    counts = {"normalize": 0, "product": 0, "power": 0}
    for i in range(1000):
        kind = i % 3
        if kind == 0:
            cands = random_monomials(i, 30, 10**6)
            assert set(normalize(cands).gens) == set(naive_minimalize(cands))
            counts["normalize"] += 1
        elif kind == 1:
            I = random_ideal(i, max_gens=30, max_exp=10**6)
            J = random_ideal(i + 10**6, max_gens=30, max_exp=10**6)
            assert set(product(I, J).gens) == set(naive_product(I.gens, J.gens))
            counts["product"] += 1
        else:
            I = random_ideal(i, max_gens=30, max_exp=10**6)
            k = 2 + i % 2
            assert set(power(I, k).gens) == set(naive_power(I.gens, k))
            counts["power"] += 1
    record_property("detail", ", ".join(f"{v} {k}" for k, v in counts.items()))


@pytest.mark.criterion(9, "overflow exits 4 with no output")
def test_c9_overflow(capsys, monkeypatch, tmp_path, record_property):
    # p_1 = 2^62 puts deg(I) = 3 * 2^62 under the bound but I^2 over it
    code = main(["table", "--m", "1", "--p", str(2**62), "--kmax", "2"])
    out, err = capsys.readouterr()
    assert code == 4 and out == "" and "overflow" in err

    code = main(["construct", "--m", "1", "--p", str(2**63)])
    out, err = capsys.readouterr()
    assert code == 4 and out == ""

    monkeypatch.setenv("STAIRCASE_MAX_EXP", "3000")
    target = tmp_path / "table.csv"
    code = main(["table", "--m", "5", "--p", "72,18,12,8,2", "--a", "3,5,8,35", "--kmax", "6", "--out", str(target)])
    out, err = capsys.readouterr()
    assert code == 4 and out == "" and not target.exists()
    record_property("detail", "u64 bound and lowered ceiling both exit 4")
