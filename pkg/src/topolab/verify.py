"""Named, exhaustive checks of claims about open-set polynomials.

Each check yields a :class:`TheoremReport` with one of three verdicts:

``verified``     no counterexample among everything examined;
``refuted``      at least one counterexample, listed in ``witnesses``;
``discrepancy``  the mathematical claim holds but a transcribed closed form
                 or formula disagrees with the constructed object.

Checks over all topologies share a single enumeration pass per ``n``.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import families as fam
from . import polyprops as pp
from .enumeration import PREORDER_MAX_N, EnumConfig, iter_topologies
from .errors import StrategyOutOfRange, UnknownTheorem
from .topology import (
    MAX_N,
    PartitionType,
    Topology,
    cotopology,
    is_partition_induced,
    is_t0,
    open_polynomial,
    partition_blocks,
    partition_topology,
)

VERIFIED, REFUTED, DISCREPANCY = "verified", "refuted", "discrepancy"
MAX_WITNESSES = 5
FAMILY_MAX_N = 10
DEFAULT_TRIALS = 10_000


@dataclass
class TheoremReport:
    id: str
    n_range: list[int] | None
    verdict: str
    witnesses: list[dict]
    checked_count: int
    elapsed: float
    details: dict = field(default_factory=dict)

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "id": self.id,
            "n_range": self.n_range,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "checked_count": self.checked_count,
            "details": self.details,
        }
        if include_timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _witness(t: Topology | None, poly, explanation: str, **extra) -> dict:
    w = {"explanation": explanation}
    if t is not None:
        w["topology"] = t.to_json()
    if poly is not None:
        w["polynomial"] = pp.to_json(poly)
    w.update(extra)
    return w


class _Check:
    """Collects failures and discrepancies; subclasses decide what to look at."""

    key = ""
    n_min = 1

    def __init__(self):
        self.failures = 0
        self.discrepancies = 0
        self.witnesses: list[dict] = []
        self.checked = 0
        self.details: dict = {}

    def fail(self, witness: dict) -> None:
        self.failures += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def discrepancy(self, witness: dict) -> None:
        self.discrepancies += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def verdict(self) -> str:
        if self.failures:
            return REFUTED
        if self.discrepancies:
            return DISCREPANCY
        return VERIFIED

    def report(self, n_range, elapsed) -> TheoremReport:
        details = dict(self.details)
        if self.failures:
            details["failure_count"] = self.failures
        if self.discrepancies:
            details["discrepancy_count"] = self.discrepancies
        return TheoremReport(
            self.key, n_range, self.verdict(), list(self.witnesses), self.checked, elapsed, details
        )


# -- checks over all topologies ----------------------------------------------


class _EnumCheck(_Check):
    def begin(self, n: int) -> None:
        pass

    def visit(self, t: Topology, poly: tuple[int, ...]) -> None:
        raise NotImplementedError

    def end(self, n: int) -> None:
        pass


def _all_positive(poly) -> bool:
    return all(poly)


class RealRootsIffDiscrete(_EnumCheck):
    key = "real-roots-iff-discrete"

    def begin(self, n):
        self._rooted = 0

    def visit(self, t, poly):
        rooted = pp.is_real_rooted(poly)
        self._rooted += rooted
        if rooted != t.is_discrete:
            self.fail(_witness(t, poly, f"real-rooted={rooted} but discrete={t.is_discrete}"))

    def end(self, n):
        self.details.setdefault("real_rooted_per_n", {})[str(n)] = self._rooted


class NewtonImpliesDiscrete(_EnumCheck):
    """Newton's inequalities single out the discrete topology.

    Asserted on topologies whose coefficients are all positive; with an
    internal zero the inequalities can hold trivially (the indiscrete
    topology for ``n >= 3``), so those cases are only counted.
    """

    key = "newton-implies-discrete"
    n_min = 2

    def begin(self, n):
        self._counts = {"newton_with_zeros": 0, "log_concave": 0, "log_concave_niz": 0}

    def visit(self, t, poly):
        newton = pp.newton_check(poly)
        lc = pp.is_log_concave(poly)
        self._counts["log_concave"] += lc
        self._counts["log_concave_niz"] += lc and not pp.has_internal_zeros(poly)
        if not _all_positive(poly):
            self._counts["newton_with_zeros"] += newton
            return
        if newton != t.is_discrete:
            self.fail(_witness(t, poly, f"newton={newton} but discrete={t.is_discrete}"))

    def end(self, n):
        self.details.setdefault("per_n", {})[str(n)] = self._counts


def dmax_within_bound(d: Fraction, n: int) -> tuple[bool, bool]:
    """``(d**(n-1) <= n**2, d**(n-1) == n**2)`` by integer cross-multiplication."""
    lhs = d.numerator ** (n - 1)
    rhs = n * n * d.denominator ** (n - 1)
    return lhs <= rhs, lhs == rhs


class DmaxBound(_EnumCheck):
    key = "dmax-bound"
    n_min = 2

    def begin(self, n):
        self._max_d = None

    def visit(self, t, poly):
        if t.is_discrete or not _all_positive(poly):
            return
        n = t.n
        d = pp.max_lc_ratio(poly)
        if d == math.inf:
            return
        ok, equal = dmax_within_bound(d, n)
        if self._max_d is None or d > self._max_d:
            self._max_d = d
        if not ok:
            self.fail(_witness(t, poly, f"d={d} gives d^{n - 1} > {n}^2", d=str(d)))
        elif equal:
            eq = self.details.setdefault("strict_bound_violations", [])
            if len(eq) < MAX_WITNESSES:
                eq.append(_witness(t, poly, f"d^{n - 1} == {n}^2 exactly", d=str(d)))

    def end(self, n):
        self.details.setdefault("max_d_per_n", {})[str(n)] = (
            None if self._max_d is None else str(self._max_d)
        )


class CotopologyPartition(_EnumCheck):
    key = "cotopology-partition"

    def visit(self, t, poly):
        self_dual = cotopology(t) == t
        induced = is_partition_induced(t) is not None
        if self_dual != induced:
            self.fail(_witness(t, poly, f"self-dual={self_dual} but partition-induced={induced}"))


class MissingSizeMaxCard(_EnumCheck):
    key = "missing-size-max-card"
    n_min = 2

    def begin(self, n):
        self._best = [0] * (n + 1)
        self._arg: list[Topology | None] = [None] * (n + 1)

    def visit(self, t, poly):
        for j in range(1, t.n):
            if poly[j] == 0 and len(t) > self._best[j]:
                self._best[j] = len(t)
                self._arg[j] = t

    def end(self, n):
        table = self.details.setdefault("table", [])
        for j in range(1, n):
            bound = 2 ** (j - 1) + 2 ** (n - j - 1)
            row = {"n": n, "j": j, "max_card": self._best[j], "bound": bound,
                   "attained": self._best[j] == bound}
            table.append(row)
            if self._best[j] > bound:
                t = self._arg[j]
                self.fail(_witness(t, open_polynomial(t), f"|tau|={len(t)} > {bound} with u_{j}=0"))


class NonvanishingCorollary(_EnumCheck):
    key = "nonvanishing-corollary"

    def visit(self, t, poly):
        # |tau| >= 2^(n-2) + 2, scaled by 4 to stay integral
        if 4 * len(t) >= 2 ** t.n + 8 and not _all_positive(poly):
            self.fail(_witness(t, poly, "large topology with a vanishing coefficient"))


class UnimodalAbove(_EnumCheck):
    """Topologies with at least ``6 * 2**(n-4)`` opens, checked for ``n >= 4``."""

    key = "unimodal-above-6x2n4"
    n_min = 4

    def begin(self, n):
        self._counts = {"examined": 0, "non_unimodal": 0}

    def visit(self, t, poly):
        if 16 * len(t) < 6 * 2 ** t.n:
            return
        self._counts["examined"] += 1
        if not pp.is_unimodal(poly):
            self._counts["non_unimodal"] += 1
            self.fail(_witness(t, poly, f"|tau|={len(t)} >= 6*2^{t.n - 4} but not unimodal"))

    def end(self, n):
        self.details.setdefault("per_n", {})[str(n)] = self._counts


class T0Nonvanishing(_EnumCheck):
    key = "t0-nonvanishing"

    def visit(self, t, poly):
        if is_t0(t) and not _all_positive(poly):
            self.fail(_witness(t, poly, "T0 topology with a vanishing coefficient"))


class T0SmallUnimodal(_EnumCheck):
    key = "t0-small-unimodal"

    def visit(self, t, poly):
        if len(t) in (t.n + 1, t.n + 2) and is_t0(t) and not pp.is_unimodal(poly):
            self.fail(_witness(t, poly, f"T0 with |tau|={len(t)} but not unimodal"))


class SmallTauGap(_EnumCheck):
    key = "small-tau-gap"

    def visit(self, t, poly):
        if len(t) <= t.n and all(poly[1 : t.n]):
            self.fail(_witness(t, poly, f"|tau|={len(t)} <= n without an internal zero"))


class ImplicationChain(_EnumCheck):
    """real-rooted => Newton => log-concave, and log-concave with NIZ => unimodal."""

    key = "implication-chain"

    def visit(self, t, poly):
        problem = implication_chain_violation(poly)
        if problem:
            self.fail(_witness(t, poly, problem))


def implication_chain_violation(poly) -> str | None:
    rooted = pp.is_real_rooted(poly)
    newton = pp.newton_check(poly) if len(poly) >= 3 else True
    lc = pp.is_log_concave(poly)
    if rooted and not newton:
        return "real-rooted but fails Newton's inequalities"
    if newton and not lc:
        return "satisfies Newton's inequalities but is not log-concave"
    if lc and not pp.has_internal_zeros(poly) and not pp.is_unimodal(poly):
        return "log-concave without internal zeros but not unimodal"
    return None


# -- direct checks -----------------------------------------------------------


def _check_partition_product(n_max: int, seed: int) -> _Check:
    c = _Check()
    c.key = "partition-product"
    for n in range(1, n_max + 1):
        for parts in pp.integer_partitions(n):
            alpha = PartitionType.from_block_sizes(parts)
            c.checked += 1
            t = partition_topology(partition_blocks(alpha))
            computed = open_polynomial(t)
            expanded = pp.expand_binomial_product(alpha)
            if computed != expanded:
                c.fail(_witness(t, computed, f"type {alpha.alpha}: product expands to {list(expanded)}"))
    return c


def _check_coeff_composition(n_max: int, seed: int) -> _Check:
    c = _Check()
    c.key = "coeff-composition"
    for n in range(1, n_max + 1):
        for parts in pp.integer_partitions(n):
            alpha = PartitionType.from_block_sizes(parts)
            c.checked += 1
            expanded = pp.expand_binomial_product(alpha)
            sums = tuple(pp.partition_coefficient(alpha, m) for m in range(n + 1))
            if sums != expanded:
                c.fail(_witness(None, sums, f"type {alpha.alpha}: expansion is {list(expanded)}"))
    return c


def _check_counterexample(n_max: int, seed: int) -> _Check:
    c = _Check()
    c.key = "counterexample-nonunimodal"
    for n in range(5, n_max + 1):
        inst = fam.instantiate("counterexample", n)
        c.checked += 1
        poly = open_polynomial(inst.topology)
        expected_card = 2 ** (n - 2) + 3
        if len(inst.topology) != expected_card:
            c.fail(_witness(inst.topology, poly, f"|tau|={len(inst.topology)} != {expected_card}"))
        elif pp.is_unimodal(poly):
            c.fail(_witness(inst.topology, poly, "polynomial is unimodal"))
        elif poly != inst.claimed_poly:
            c.discrepancy(_witness(inst.topology, poly, f"closed form gives {list(inst.claimed_poly)}"))
    return c


# claims made about the computed polynomials of specific families
UNIMODAL_FAMILIES = ("tau1-P1", "tau1-P2", "tau1-P3", "nm1-singletons")
LOG_CONCAVE_FAMILIES = ("nm1-partition", "nm1-du-chain")


def _check_families(n_max: int, seed: int) -> _Check:
    c = _Check()
    c.key = "families-match"
    hi = min(n_max, FAMILY_MAX_N)
    rows = []
    for r in fam.sweep(4, hi):
        c.checked += 1
        topo = fam.instantiate(r.family, r.n, **r.params).topology
        if r.family in UNIMODAL_FAMILIES and not r.unimodal:
            c.fail(_witness(topo, r.computed, f"{r.family} {r.params} is not unimodal"))
        if r.family in LOG_CONCAVE_FAMILIES and not r.log_concave:
            c.fail(_witness(topo, r.computed, f"{r.family} {r.params} is not log-concave"))
        if not r.clean:
            problems = [
                name for name, ok in
                (("card", r.card_match), ("poly", r.poly_match), ("minimal", r.minimal_match))
                if not ok
            ]
            c.discrepancy(_witness(
                topo, r.computed, f"{r.family} n={r.n} {r.params}: mismatch in {', '.join(problems)}",
                report=r.to_json(),
            ))
            rows.append({"family": r.family, "n": r.n, "params": r.params, "mismatch": problems,
                         "variant_matches": r.variant_matches})
    c.details["mismatches"] = rows
    c.details["n_max_used"] = hi
    return c


def random_log_concave(rng: random.Random, max_len: int = 8) -> tuple[int, ...]:
    """Random positive log-concave sequence, optionally padded with outer zeros.

    Built from nonincreasing rational ratios ``a_j / a_{j-1}`` and scaled to
    integers, so log-concavity holds by construction.
    """
    length = rng.randint(1, max_len)
    ratios = sorted(
        (Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(length - 1)), reverse=True
    )
    seq = [Fraction(rng.randint(1, 5))]
    for r in ratios:
        seq.append(seq[-1] * r)
    scale = math.lcm(*(x.denominator for x in seq))
    body = [int(x * scale) for x in seq]
    return (0,) * rng.randint(0, 2) + tuple(body) + (0,) * rng.randint(0, 2)


def random_unimodal(rng: random.Random, max_len: int = 8) -> tuple[int, ...]:
    up = sorted(rng.randint(0, 20) for _ in range(rng.randint(0, max_len // 2)))
    peak = rng.randint(max(up, default=0), 25)
    down = sorted((rng.randint(0, peak) for _ in range(rng.randint(0, max_len // 2))), reverse=True)
    return tuple(up) + (peak,) + tuple(down)


def _check_convolution(n_max: int, seed: int, trials: int = DEFAULT_TRIALS) -> _Check:
    c = _Check()
    c.key = "convolution-laws"
    rng = random.Random(seed)
    for _ in range(trials):
        a, b = random_log_concave(rng), random_log_concave(rng)
        prod = pp.convolve(a, b)
        c.checked += 1
        if not pp.is_log_concave(prod) or pp.has_internal_zeros(prod):
            c.fail(_witness(None, prod, f"log-concave {list(a)} * {list(b)} lost log-concavity"))
    for _ in range(trials):
        a, b = random_unimodal(rng), random_log_concave(rng)
        prod = pp.convolve(a, b)
        c.checked += 1
        if not pp.is_unimodal(prod):
            c.fail(_witness(None, prod, f"unimodal {list(a)} * log-concave {list(b)} not unimodal"))
    c.details["trials_per_law"] = trials
    c.details["seed"] = seed
    return c


# -- registry ----------------------------------------------------------------

_ENUM_CHECKS = {
    cls.key: cls
    for cls in (
        RealRootsIffDiscrete,
        NewtonImpliesDiscrete,
        DmaxBound,
        CotopologyPartition,
        MissingSizeMaxCard,
        NonvanishingCorollary,
        UnimodalAbove,
        T0Nonvanishing,
        T0SmallUnimodal,
        SmallTauGap,
        ImplicationChain,
    )
}
_DIRECT_CHECKS = {
    "partition-product": (_check_partition_product, 1),
    "coeff-composition": (_check_coeff_composition, 1),
    "counterexample-nonunimodal": (_check_counterexample, 5),
    "families-match": (_check_families, 4),
    "convolution-laws": (_check_convolution, None),
}
REGISTRY = (
    "real-roots-iff-discrete",
    "newton-implies-discrete",
    "dmax-bound",
    "cotopology-partition",
    "partition-product",
    "coeff-composition",
    "missing-size-max-card",
    "nonvanishing-corollary",
    "counterexample-nonunimodal",
    "unimodal-above-6x2n4",
    "t0-nonvanishing",
    "t0-small-unimodal",
    "small-tau-gap",
    "families-match",
    "convolution-laws",
    "implication-chain",
)


def _run_enum(keys: list[str], n_max: int, threads: int) -> dict[str, TheoremReport]:
    if n_max > PREORDER_MAX_N:
        raise StrategyOutOfRange(f"exhaustive checks support n_max <= {PREORDER_MAX_N}")
    checks = [_ENUM_CHECKS[k]() for k in keys]
    timing = {k: 0.0 for k in keys}
    for n in range(1, n_max + 1):
        active = [c for c in checks if c.n_min <= n]
        if not active:
            continue
        for c in active:
            c.begin(n)
        for t in iter_topologies(EnumConfig(n, threads=threads)):
            poly = open_polynomial(t)
            for c in active:
                c.checked += 1
                c.visit(t, poly)
        for c in active:
            c.end(n)
    out = {}
    for c in checks:
        lo = c.n_min
        n_range = list(range(lo, n_max + 1)) if lo <= n_max else []
        out[c.key] = c.report(n_range, timing[c.key])
    return out


def _run_direct(key: str, n_max: int, seed: int) -> TheoremReport:
    func, lo = _DIRECT_CHECKS[key]
    if n_max > MAX_N:
        raise StrategyOutOfRange(f"n_max {n_max} exceeds the ground-size cap {MAX_N}")
    start = time.perf_counter()
    c = func(n_max, seed)
    if lo is None:
        n_range = None
    else:
        hi = min(n_max, FAMILY_MAX_N) if key == "families-match" else n_max
        n_range = list(range(lo, hi + 1))
    return c.report(n_range, time.perf_counter() - start)


def run_many(keys, n_max: int, seed: int = 0, threads: int = 1) -> list[TheoremReport]:
    """Run the named checks, sharing one enumeration per ``n``; registry order."""
    keys = list(keys)
    for k in keys:
        if k not in REGISTRY:
            raise UnknownTheorem(f"unknown theorem check {k!r}")
    if n_max < 1:
        raise StrategyOutOfRange("n_max must be at least 1")
    enum_keys = [k for k in keys if k in _ENUM_CHECKS]
    reports: dict[str, TheoremReport] = {}
    if enum_keys:
        start = time.perf_counter()
        reports.update(_run_enum(enum_keys, n_max, threads))
        shared = time.perf_counter() - start
        for k in enum_keys:
            reports[k].elapsed = shared
    for k in keys:
        if k in _DIRECT_CHECKS:
            reports[k] = _run_direct(k, n_max, seed)
    return [reports[k] for k in REGISTRY if k in reports]


def run(key: str, n_max: int, seed: int = 0, threads: int = 1) -> TheoremReport:
    return run_many([key], n_max, seed, threads)[0]


def run_all(n_max: int, seed: int = 0, threads: int = 1) -> list[TheoremReport]:
    return run_many(REGISTRY, n_max, seed, threads)


def exit_code(reports: list[TheoremReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if REFUTED in verdicts:
        return 2
    if DISCREPANCY in verdicts:
        return 3
    return 0
