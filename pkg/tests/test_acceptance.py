"""Acceptance gate: every advertised guarantee, one verdict line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the verdicts;
each test prints exactly one line and enforces its runtime budget.
"""

import math
import random
import time

from sumconn.enumeration import all_bicyclic, all_bicyclic_filter
from sumconn.graph import to_graph6
from sumconn.invariants import (
    matching_number,
    matching_number_bruteforce,
    sum_connectivity,
)
from sumconn.transforms import (
    contract_and_pendant,
    merge_paths,
    random_contract_instance,
    random_merge_instance,
    random_rewire_instance,
    rewire_to_path_end,
)
from sumconn.verify import (
    check_scalar_lemmas,
    closed_form,
    verify_max_over_class,
    verify_min_over_class,
)


def _verdict(num: int, ok: bool, detail: str) -> None:
    print(f"acceptance criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_01_enumeration_ground_truth():
    t0 = time.monotonic()
    n4 = len(list(all_bicyclic(4)))
    n5 = len(list(all_bicyclic(5)))
    agree = all(
        sorted(to_graph6(g) for g in all_bicyclic_filter(n))
        == [to_graph6(g) for g in all_bicyclic(n)]
        for n in range(4, 9)
    )
    dt = time.monotonic() - t0
    _verdict(
        1,
        n4 == 1 and n5 == 5 and agree and dt <= 300,
        f"|B(4)|={n4} |B(5)|={n5} dual-route agreement n=4..8 in {dt:.1f}s",
    )


def test_criterion_02_minimum_by_matching_number():
    t0 = time.monotonic()
    pairs = [(n, m) for n in range(6, 13) for m in range(3, n // 2 + 1)]
    ok = True
    for n, m in pairs:
        rep = verify_min_over_class(n, m)
        ok = ok and rep.passed and len(rep.argext) == 1
    dt = time.monotonic() - t0
    _verdict(
        2,
        ok and len(pairs) == 16 and dt <= 1800,
        f"unique exact minimum at every (n,m), {len(pairs)} pairs in {dt:.1f}s",
    )


def test_criterion_03_perfect_matching_case():
    ok = True
    for m in range(3, 7):
        rep = verify_min_over_class(2 * m, m)
        ok = ok and rep.passed and rep.value == closed_form("th1", m=m)
    _verdict(3, ok, "n=2m minimum matches the m-only formula for m=3..6")


def test_criterion_04_matching_number_two():
    ok = True
    for n in range(6, 13):
        rep = verify_min_over_class(n, 2)
        ok = ok and rep.passed
    _verdict(4, ok, "unique min and second-min over matching-number-2, n=6..12")


def test_criterion_05_global_minimum():
    ok = True
    for n in range(5, 13):
        rep = verify_min_over_class(n)
        ok = ok and rep.passed
    _verdict(5, ok, "global min and case-split second-min, n=5..12")


def test_criterion_06_global_maximum():
    ok = True
    for n in range(5, 13):
        rep = verify_max_over_class(n)
        ok = ok and rep.passed
    _verdict(6, ok, "max/second-max tie sets exact, shared-vertex class below, n=5..12")


def test_criterion_07_scalar_inequalities():
    t0 = time.monotonic()
    reports = check_scalar_lemmas(1000)
    failures = sum(len(r["failures"]) for r in reports)
    dt = time.monotonic() - t0
    _verdict(
        7,
        failures == 0 and all(r["pass"] for r in reports) and dt <= 60,
        f"{sum(r['checked'] for r in reports)} scalar checks, {failures} failures in {dt:.1f}s",
    )


def test_criterion_08_transform_inequalities():
    rng = random.Random(1234)
    counts = {"merge": 0, "contract": 0, "i": 0, "ii": 0, "iii": 0}
    ok = True
    for _ in range(100):
        q, u, a, b = random_merge_instance(rng)
        g1, g2 = merge_paths(q, u, a, b)
        ok = ok and sum_connectivity(g1).cmp(sum_connectivity(g2)) < 0
        counts["merge"] += 1
    for _ in range(100):
        g, u, v = random_contract_instance(rng)
        ok = ok and sum_connectivity(g).cmp(sum_connectivity(contract_and_pendant(g, u, v))) > 0
        counts["contract"] += 1
    for case in ("i", "ii", "iii"):
        for _ in range(100):
            h, u, u2, u_prime = random_rewire_instance(rng, case)
            h2 = rewire_to_path_end(h, u, u2, u_prime)
            ok = ok and sum_connectivity(h2).cmp(sum_connectivity(h)) > 0
            counts[case] += 1
    _verdict(
        8,
        ok and all(c >= 100 for c in counts.values()),
        f"strict inequalities on seeded instances {counts}",
    )


def test_criterion_09_matching_oracle():
    t0 = time.monotonic()
    checked = 0
    ok = True
    for n in range(4, 11):
        for g in all_bicyclic(n):
            ok = ok and matching_number(g) == matching_number_bruteforce(g)
            checked += 1
    dt = time.monotonic() - t0
    _verdict(9, ok and dt <= 600, f"{checked} graphs vs subset oracle in {dt:.1f}s")


def test_criterion_10_float_consistency():
    worst = 0.0
    for n in range(4, 11):
        for g in all_bicyclic(n):
            naive = sum(
                1.0 / math.sqrt(g.degree(u) + g.degree(v)) for u, v in g.edges()
            )
            worst = max(worst, abs(sum_connectivity(g).to_float() - naive))
    _verdict(10, worst <= 1e-9, f"max |exact - naive| = {worst:.2e} over n<=10")
