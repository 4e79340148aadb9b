"""Exhaustive enumeration of the topologies on ``n`` labeled points.

Two independent strategies are provided:

``preorder``
    Every finite topology is the family of up-closed sets of a unique
    preorder (its specialization preorder).  Preorders are built one point at
    a time: point ``k`` joins with a down-set ``D`` (points below it) and an
    up-set ``U`` (points above it).  The extension is transitive exactly when
    ``D`` is down-closed, ``U`` is up-closed, and every point of ``D`` already
    lies below every point of ``U``, so the search never backtracks out of a
    dead branch.  The open sets are carried along and updated in ``O(|opens|)``
    per child.

``closure``
    Test every family of subsets containing the empty and the full set for
    closure under union and intersection.  Only feasible for ``n <= 4`` and
    kept as an oracle for the first strategy.

Visitor contract: visitors are always invoked from the calling thread, one at
a time, in an order that depends only on the strategy and ``n``.  Workers
(separate processes when ``threads > 1``) expand disjoint subtrees of the
search and their results are merged back in tree order, so emission order and
statistics are identical for every thread count.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import GroundSizeOutOfRange, StrategyOutOfRange
from .topology import (
    MAX_N,
    Topology,
    canonical_form,
    full_mask,
    mask_key,
)

CLOSURE_MAX_N = 4
PREORDER_MAX_N = 7
SEEN_SET_MAX_N = 5
STRATEGIES = ("closure", "preorder", "both")


@dataclass(frozen=True)
class EnumConfig:
    n: int
    min_card: int | None = None
    require_t0: bool = False
    up_to_iso: bool = False
    strategy: str = "preorder"
    threads: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_N:
            raise GroundSizeOutOfRange(f"ground size {self.n!r} outside 1..{MAX_N}")
        if self.strategy not in STRATEGIES:
            raise StrategyOutOfRange(f"unknown strategy {self.strategy!r}")
        limit = PREORDER_MAX_N if self.strategy == "preorder" else CLOSURE_MAX_N
        if self.n > limit:
            raise StrategyOutOfRange(f"strategy {self.strategy!r} supports n <= {limit}")
        if self.threads < 1:
            raise ValueError("threads must be positive")


@dataclass
class EnumStats:
    total: int = 0
    by_cardinality: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "by_cardinality": {str(k): v for k, v in sorted(self.by_cardinality.items())},
            "elapsed": round(self.elapsed, 6),
        }


# -- preorder strategy -------------------------------------------------------

# A search node: up-sets of the points placed so far and the current opens.
Node = tuple[tuple[int, ...], tuple[int, ...]]


def _children(k: int, up: tuple[int, ...], opens: tuple[int, ...], t0: bool):
    """Extensions of a preorder on points ``0..k-1`` by the point ``k``."""
    full = full_mask(k)
    bit = 1 << k
    # down-closed sets are complements of up-closed (open) sets
    for closed in opens:
        down = full ^ closed
        meet = full
        rest = down
        while rest:
            low = rest & -rest
            meet &= up[low.bit_length() - 1]
            rest ^= low
        for above in opens:
            if above & ~meet:
                continue
            if t0 and above & down:
                continue
            new_up = tuple(
                (u | bit) if (down >> i) & 1 else u for i, u in enumerate(up)
            ) + (above | bit,)
            new_opens = tuple(s for s in opens if not s & down) + tuple(
                s | bit for s in opens if above & ~s == 0
            )
            yield new_up, new_opens


def _expand(node: Node, k: int, n: int, t0: bool, min_card: int) -> Iterator[tuple[int, ...]]:
    up, opens = node
    if k == n:
        if len(opens) >= min_card:
            yield opens
        return
    for child in _children(k, up, opens, t0):
        # each added point at most doubles the number of opens
        if len(child[1]) << (n - k - 1) >= min_card:
            yield from _expand(child, k + 1, n, t0, min_card)


def _frontier(n: int, depth: int, t0: bool, min_card: int) -> list[Node]:
    nodes: list[Node] = [((1,), (0, 1))]
    for k in range(1, depth):
        nodes = [
            c
            for node in nodes
            for c in _children(k, *node, t0)
            if len(c[1]) << (n - k - 1) >= min_card
        ]
    return nodes


def _subtree(args) -> list[tuple[int, ...]]:
    node, depth, n, t0, min_card = args
    return [tuple(sorted(o, key=mask_key)) for o in _expand(node, depth, n, t0, min_card)]


def _preorder_opens(n: int, t0: bool, min_card: int, threads: int) -> Iterator[tuple[int, ...]]:
    depth = min(n, 4)
    frontier = _frontier(n, depth, t0, min_card)
    tasks = [(node, depth, n, t0, min_card) for node in frontier]
    if threads == 1:
        for task in tasks:
            yield from _subtree(task)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for batch in pool.map(_subtree, tasks, chunksize=4):
            yield from batch


# -- closure-brute strategy --------------------------------------------------


def _closure_opens(n: int) -> Iterator[tuple[int, ...]]:
    full = full_mask(n)
    proper = list(range(1, full))
    for choice in range(1 << len(proper)):
        family = [0, full] + [m for k, m in enumerate(proper) if (choice >> k) & 1]
        members = set(family)
        if all(
            (u | v) in members and (u & v) in members
            for i, u in enumerate(family)
            for v in family[i + 1 :]
        ):
            yield tuple(sorted(family, key=mask_key))


def _is_t0_opens(n: int, opens: tuple[int, ...]) -> bool:
    up = [full_mask(n)] * n
    for m in opens:
        for i in range(n):
            if (m >> i) & 1:
                up[i] &= m
    return not any(
        (up[i] >> j) & 1 and (up[j] >> i) & 1 for i in range(n) for j in range(i + 1, n)
    )


# -- public API --------------------------------------------------------------


def iter_topologies(cfg: EnumConfig) -> Iterator[Topology]:
    """Yield every topology on ``cfg.n`` points passing the configured filters."""
    n = cfg.n
    min_card = cfg.min_card or 0
    if cfg.strategy == "closure":
        source = (
            o
            for o in _closure_opens(n)
            if len(o) >= min_card and (not cfg.require_t0 or _is_t0_opens(n, o))
        )
    elif cfg.strategy == "preorder":
        source = _preorder_opens(n, cfg.require_t0, min_card, cfg.threads)
    else:
        source = _cross_checked(cfg, min_card)
    labeled = (Topology._trusted(n, o) for o in source)
    if not cfg.up_to_iso:
        yield from labeled
    elif n <= SEEN_SET_MAX_N:
        seen: set[Topology] = set()
        for t in labeled:
            c = canonical_form(t)
            if c not in seen:
                seen.add(c)
                yield c
    else:
        # orderly: each class is emitted once, at its canonical labeling
        for t in labeled:
            if canonical_form(t) == t:
                yield t


def _cross_checked(cfg: EnumConfig, min_card: int) -> Iterator[tuple[int, ...]]:
    n = cfg.n
    brute = [
        o
        for o in _closure_opens(n)
        if len(o) >= min_card and (not cfg.require_t0 or _is_t0_opens(n, o))
    ]
    fast = list(_preorder_opens(n, cfg.require_t0, min_card, cfg.threads))
    if sorted(brute) != sorted(fast):
        raise AssertionError(f"closure and preorder strategies disagree at n={n}")
    yield from fast


def enumerate_topologies(
    cfg: EnumConfig, visitor: Callable[[Topology], None] | None = None
) -> EnumStats:
    """Call ``visitor`` once per matching topology and return summary statistics."""
    start = time.perf_counter()
    hist: Counter[int] = Counter()
    for t in iter_topologies(cfg):
        hist[len(t)] += 1
        if visitor is not None:
            visitor(t)
    return EnumStats(
        total=sum(hist.values()),
        by_cardinality=dict(sorted(hist.items())),
        elapsed=time.perf_counter() - start,
    )


def count_topologies(
    n: int,
    min_card: int | None = None,
    *,
    require_t0: bool = False,
    up_to_iso: bool = False,
    strategy: str = "preorder",
    threads: int = 1,
) -> int:
    cfg = EnumConfig(n, min_card, require_t0, up_to_iso, strategy, threads)
    return enumerate_topologies(cfg).total
