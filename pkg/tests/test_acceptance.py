"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are also collected
into an "acceptance criteria" section at the end of the pytest report.
"""
import itertools
import math
import random
import time

import pytest

from topolab import families as fam
from topolab import polyprops as pp
from topolab import verify as ver
from topolab.enumeration import EnumConfig, count_topologies, iter_topologies
from topolab.topology import PartitionType, open_polynomial, partition_blocks, partition_topology

from .conftest import ACCEPTANCE_LINES
from .oracles import oracle_real_rooted, random_factored


def record(number: int, ok: bool, summary: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {summary}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _labeled_posets(k: int) -> int:
    """Reflexive antisymmetric transitive relations, brute force over 3^C(k,2) choices."""
    pairs = list(itertools.combinations(range(k), 2))
    count = 0
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        less = set()
        for (a, b), s in zip(pairs, states):
            if s == 1:
                less.add((a, b))
            elif s == 2:
                less.add((b, a))
        if all((a, d) in less for a, b in less for c, d in less if b == c and a != d):
            count += 1
    return count


def _stirling2(n: int, k: int) -> int:
    return sum((-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k + 1)) // math.factorial(k)


def _topologies_via_posets(n: int) -> int:
    # a preorder is an equivalence relation plus a partial order on its classes
    return sum(_stirling2(n, k) * _labeled_posets(k) for k in range(1, n + 1))


@pytest.fixture(scope="module")
def shared_n6():
    """One shared enumeration pass over n <= 6 with four workers."""
    keys = ["unimodal-above-6x2n4", "missing-size-max-card", "implication-chain"]
    start = time.perf_counter()
    reports = {r.id: r for r in ver.run_many(keys, 6, threads=4)}
    return reports, time.perf_counter() - start


def test_criterion_1_enumeration_cross_oracle():
    start = time.perf_counter()
    preorder = [count_topologies(n) for n in range(1, 6)]
    closure = [count_topologies(n, strategy="closure") for n in range(1, 5)]
    elapsed = time.perf_counter() - start
    via_posets = _topologies_via_posets(5)
    ok = (
        preorder == [1, 4, 29, 355, 6942]
        and closure == preorder[:4]
        and via_posets == preorder[4] == 6942
        and elapsed < 10
    )
    record(1, ok, f"preorder {preorder}, closure {closure}, posets path n=5 {via_posets}, "
                  f"{elapsed:.1f}s")


def test_criterion_2_real_roots_iff_discrete():
    start = time.perf_counter()
    r = ver.run("real-roots-iff-discrete", 5)
    rooted_per_n = {}
    for n in range(1, 6):
        found = {open_polynomial(t) for t in iter_topologies(EnumConfig(n))
                 if pp.is_real_rooted(open_polynomial(t))}
        rooted_per_n[n] = found == {tuple(math.comb(n, k) for k in range(n + 1))}
    elapsed = time.perf_counter() - start
    ok = r.verdict == ver.VERIFIED and all(rooted_per_n.values()) and elapsed < 60
    record(2, ok, f"{r.verdict}, {r.checked_count} topologies, binomial row only: "
                  f"{all(rooted_per_n.values())}, {elapsed:.1f}s")


def test_criterion_3_unimodal_above(shared_n6):
    reports, elapsed = shared_n6
    r = reports["unimodal-above-6x2n4"]
    per_n = r.details.get("per_n", {})
    ok = r.verdict == ver.VERIFIED and elapsed < 300
    first = r.witnesses[0]["polynomial"] if r.witnesses else None
    record(3, ok, f"{r.verdict}, per n {per_n}, first witness {first}, {elapsed:.1f}s")


def test_criterion_4_counterexample():
    r = ver.run("counterexample-nonunimodal", 10)
    rows = []
    for n in range(5, 11):
        rep = fam.check(fam.instantiate("counterexample", n))
        rows.append(rep.computed_card == 2 ** (n - 2) + 3 and not rep.unimodal)
    n5 = fam.check(fam.instantiate("counterexample", 5)).computed
    ok = r.verdict == ver.VERIFIED and all(rows) and n5 == (1, 3, 3, 1, 2, 1)
    record(4, ok, f"{r.verdict}, {r.checked_count} instances, n=5 polynomial {n5}")


def test_criterion_5_partition_product():
    reports = [ver.run("partition-product", 9), ver.run("coeff-composition", 9)]
    mismatches = 0
    total = 0
    for n in range(1, 10):
        for parts in pp.integer_partitions(n):
            alpha = PartitionType.from_block_sizes(parts)
            a = open_polynomial(partition_topology(partition_blocks(alpha)))
            b = pp.expand_binomial_product(alpha)
            c = tuple(pp.partition_coefficient(alpha, m) for m in range(n + 1))
            total += 1
            mismatches += not (a == b == c)
    printed = (
        pp.expand_binomial_product((1, 2)) == (1, 1, 2, 2, 1, 1)
        and pp.expand_binomial_product((0, 1, 1)) == (1, 0, 1, 1, 0, 1)
    )
    ok = all(r.verdict == ver.VERIFIED for r in reports) and mismatches == 0 and printed
    record(5, ok, f"{[r.verdict for r in reports]}, {total} partitions, "
                  f"{mismatches} mismatches, printed expansions ok: {printed}")


def test_criterion_6_cotopology_partition():
    r = ver.run("cotopology-partition", 5)
    ok = r.verdict == ver.VERIFIED and r.checked_count == 1 + 4 + 29 + 355 + 6942
    record(6, ok, f"{r.verdict}, {r.checked_count} topologies")


def test_criterion_7_missing_size_max_card(shared_n6):
    reports, _ = shared_n6
    r = reports["missing-size-max-card"]
    table = r.details["table"]
    complete = sorted((row["n"], row["j"]) for row in table) == [
        (n, j) for n in range(2, 7) for j in range(1, n)
    ]
    attained = sum(row["attained"] for row in table)
    ok = r.verdict == ver.VERIFIED and complete and all(row["max_card"] <= row["bound"] for row in table)
    record(7, ok, f"{r.verdict}, {len(table)} (n, j) rows, bound attained in {attained}")


def test_criterion_8_families_match():
    r = ver.run("families-match", 9)
    crashes = []
    card_failures = []
    for f in fam.catalog():
        for n in range(max(4, f.min_n), 10):
            for params in f.param_grid(n):
                try:
                    rep = fam.check(fam.instantiate(f.key, n, **params))
                except Exception as exc:  # noqa: BLE001
                    crashes.append((f.key, n, params, repr(exc)))
                    continue
                if not rep.card_match:
                    card_failures.append((f.key, n))
    ok = r.verdict != ver.REFUTED and not crashes and not card_failures
    failing = sorted({w["explanation"].split()[0] for w in r.witnesses})
    record(8, ok, f"{r.verdict}, {r.details.get('failure_count', 0)} theorem failures, "
                  f"{len(card_failures)} cardinality mismatches in {sorted({k for k, _ in card_failures})}, "
                  f"{len(crashes)} crashes; claims failing in {failing}")


def test_criterion_9_property_suite(shared_n6):
    reports, _ = shared_n6
    chain = reports["implication-chain"]
    extra = [fam.check(fam.instantiate(f.key, n, **p)).computed
             for f in fam.catalog() for n in range(max(4, f.min_n), 10) for p in f.param_grid(n)]
    extra_violations = [p for p in extra if ver.implication_chain_violation(p)]
    conv = ver.run("convolution-laws", 6, seed=0)
    rng = random.Random(9)
    sturm_disagree = 0
    for _ in range(1000):
        p = random_factored(rng)
        sturm_disagree += pp.is_real_rooted(tuple(p)) != oracle_real_rooted(p)
    ok = (
        chain.verdict == ver.VERIFIED
        and not extra_violations
        and conv.verdict == ver.VERIFIED
        and conv.checked_count >= 2 * 10_000
        and sturm_disagree == 0
    )
    record(9, ok, f"chain {chain.verdict} on {chain.checked_count} + {len(extra)} polynomials, "
                  f"convolution {conv.verdict} ({conv.checked_count} trials), "
                  f"Sturm vs oracle {sturm_disagree}/1000 disagreements")


def test_criterion_10_dmax_bound():
    r = ver.run("dmax-bound", 5)
    equal = len(r.details.get("strict_bound_violations", []))
    ok = r.verdict == ver.VERIFIED
    record(10, ok, f"{r.verdict}, max d per n {r.details.get('max_d_per_n')}, "
                   f"equality cases {equal}")
