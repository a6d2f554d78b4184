"""Acceptance criteria 1-10, each printing one PASS/FAIL line with its runtime."""

import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import pytest

from rif.bounds import bound_report, hoffman_bound
from rif.construct import (
    brace_daykin,
    extend_family,
    neq2k_construction,
    product_family,
    projective_plane,
    prop3_construction,
)
from rif.core import inner_distribution, is_intersecting, is_regular, meet_profile
from rif.scheme import (
    OPTIMAL,
    dual_eigenvalue_closed,
    eigenvalue_P,
    eigenvalue_P_alt,
    gamma_coefficients,
    gamma_from_tables,
    lp_max_regular_intersecting,
    macwilliams_transform,
    scheme_tables,
)
from rif.search import cyclic_orbit_search, dfs_search, verify_certificate


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, budget):
        start = time.perf_counter()
        info = {}
        status = "FAIL"
        try:
            yield info
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            detail = info.get("detail", "")
            with capsys.disabled():
                print(f"\n{status} criterion {number}: {title} [{elapsed:.2f}s / {budget}s] {detail}".rstrip())

    return run


WITNESSES = {
    "projective_plane(2)": (lambda: projective_plane(2), 7, 7, 3),
    "projective_plane(3)": (lambda: projective_plane(3), 13, 13, 4),
    "neq2k_construction(4)": (lambda: neq2k_construction(4), 8, 32, 16),
    "brace_daykin(3)": (lambda: brace_daykin(3), 6, 10, 5),
    "brace_daykin(5)": (lambda: brace_daykin(5), 10, 126, 63),
    "neq2k_construction(8)": (lambda: neq2k_construction(8), 16, 6432, 3216),
}

_built = {}


def witness(name):
    if name not in _built:
        _built[name] = WITNESSES[name][0]()
    return _built[name]


def test_criterion_01_general_bound_row(criterion):
    with criterion(1, "general bound row k=4, n=8..13", 1.0) as info:
        values = [bound_report(n, 4, with_lp=False).get("general").value for n in range(8, 14)]
        info["detail"] = f"got {values}"
        assert values == [34, 36, 35, 33, 33, 13]


def test_criterion_02_hoffman_row(criterion):
    with criterion(2, "hoffman_bound(2k+1, k, 1) for k=3..6", 1.0) as info:
        values = [hoffman_bound(2 * k + 1, k, 1) for k in range(3, 7)]
        info["detail"] = f"got {[str(v) for v in values]}"
        assert values == [7, 36, 154, 624]
        assert all(isinstance(v, Fraction) and v.denominator == 1 for v in values)


def test_criterion_03_construction_witnesses(criterion):
    with criterion(3, "construction witnesses", 30.0) as info:
        got = []
        for name, (_, n, size, delta) in WITNESSES.items():
            fam = witness(name)
            ok = (fam.n, len(fam), is_regular(fam), is_intersecting(fam)) == (n, size, (True, delta), True)
            got.append(f"{name}={'ok' if ok else 'BAD'}")
            assert ok, name
        info["detail"] = ", ".join(got)


def test_criterion_04_exhaustive_tiny(criterion):
    with criterion(4, "exhaustive DFS at (6,3), (7,3), (8,3)", 300.0) as info:
        a, b, c = dfs_search(6, 3), dfs_search(7, 3), dfs_search(8, 3)
        info["detail"] = (
            f"(6,3)->{a.size} exh={a.exhaustive}; (7,3)->{b.size} exh={b.exhaustive}; "
            f"(8,3)->{'absent' if c.family is None else c.size} exh={c.exhaustive}"
        )
        assert (a.size, a.exhaustive) == (10, True) and verify_certificate(a).passed
        assert (b.size, b.exhaustive) == (7, True) and verify_certificate(b).passed
        assert c.family is None and c.exhaustive


@pytest.mark.parametrize("n, k, value", [(7, 3, 7), (13, 4, 13), (9, 4, 36)])
def test_criterion_05_lp_sharpness(criterion, n, k, value):
    with criterion(5, f"regular Delsarte LP at ({n},{k})", 1.0) as info:
        res = lp_max_regular_intersecting(n, k)
        info["detail"] = f"status {res.status}, optimum {res.optimum}"
        assert res.status == OPTIMAL
        assert isinstance(res.optimum, Fraction) and res.optimum == value


def test_criterion_06_scheme_identities(criterion):
    # every pair 2k <= n <= 20 is checked, which covers the whole stated domain
    pairs = [(n, k) for n in range(2, 21) for k in range(1, n // 2 + 1)]
    with criterion(6, "Johnson scheme identities for all 2k <= n <= 20", 60.0) as info:
        for n, k in pairs:
            t = scheme_tables(n, k)
            rng = range(k + 1)
            for a in rng:
                for b in rng:
                    assert sum(t.P[a][c] * t.Q[c][b] for c in rng) == (t.v if a == b else 0), (n, k)
            for i in rng:
                for j in rng:
                    assert t.r[i] * t.Q[i][j] == t.f[j] * t.P[j][i], (n, k)
                    assert eigenvalue_P(n, k, j, i) == eigenvalue_P_alt(n, k, j, i), (n, k)
            for j in (1, 2):
                if j <= k:
                    for i in rng:
                        assert dual_eigenvalue_closed(n, k, i, j) == t.Q[i][j], (n, k, i, j)
            if k >= 3:
                assert gamma_from_tables(n, k) == gamma_coefficients(n, k), (n, k)
            for j in range(1, k + 1):
                assert sum(t.P[j]) == 0, (n, k)
        info["detail"] = f"{len(pairs)} (n,k) pairs"


def test_criterion_07_regularity_macwilliams(criterion):
    with criterion(7, "MacWilliams entry 1 = 0 and nonnegative on witnesses", 60.0) as info:
        out = []
        for name in WITNESSES:
            fam = witness(name)
            mw = macwilliams_transform(scheme_tables(fam.n, fam.k), inner_distribution(fam))
            assert mw[1] == 0 and all(x >= 0 for x in mw), name
            if name.startswith("projective_plane"):
                assert mw[2] == 0, name
            out.append(f"{name}:{[str(x) for x in mw]}")
        info["detail"] = "; ".join(out[:2]) + f"; +{len(out) - 2} more"


def test_criterion_08_combinator_laws(criterion):
    with criterion(8, "extend, prop3 and product laws", 5.0) as info:
        fano = projective_plane(2)
        ext = extend_family(fano, 1)
        p3 = prop3_construction(2, 1)
        prod = product_family(fano, fano)
        info["detail"] = (
            f"extend {len(ext)} δ={is_regular(ext)[1]}; prop3 {len(p3)} ratio {p3.ratio()}; "
            f"product {len(prod)} δ={is_regular(prod)[1]}"
        )
        assert len(ext) == 28 and is_regular(ext) == (True, 16) and is_intersecting(ext)
        assert len(p3) == 245 and p3.ratio() == Fraction(3, 7) and is_intersecting(p3)
        assert len(prod) == 49 and is_regular(prod) == (True, 9) and is_intersecting(prod)


def test_criterion_09_search_9_4(criterion):
    with criterion(9, "search finds a size-36 family at (9,4)", 600.0) as info:
        cyc = cyclic_orbit_search(9, 4)
        res = cyc if cyc.size == 36 else dfs_search(9, 4, 36, time_limit=590)
        info["detail"] = f"cyclic best {cyc.size}; {res.strategy} size {res.size} δ={res.delta} nodes {res.explored_nodes}"
        assert res.size == 36 and res.delta == 16
        assert verify_certificate(res).passed


@pytest.mark.parametrize("n, k", [(11, 5), (13, 6)])
def test_criterion_09_best_found_rows(criterion, n, k):
    with criterion(9, f"best found at ({n},{k}) reported non-exhaustive", 120.0) as info:
        res = cyclic_orbit_search(n, k)
        info["detail"] = f"size {res.size} δ={res.delta} exhaustive={res.exhaustive}"
        assert res.family is not None and not res.exhaustive
        assert verify_certificate(res).passed


def test_criterion_10_fano_meet_counts(criterion):
    with criterion(10, "Fano non-line 3-sets meet 3 lines in 2 points", 1.0) as info:
        fano = projective_plane(2)
        lines = set(fano.sets)
        probes = [c for c in combinations(range(1, 8), 3) if c not in lines]
        counts = {meet_profile(fano, p)[1] for p in probes}
        info["detail"] = f"{len(probes)} probes, counts {sorted(counts)}"
        assert len(probes) == 28 and counts == {3}
