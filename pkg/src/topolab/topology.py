"""Finite topologies on ground sets {0, ..., n-1} encoded as bit masks.

A subset of the ground set is an ``int`` whose bit ``i`` is set when element
``i`` belongs to it.  A :class:`Topology` keeps its open sets as a tuple of
masks sorted by ``(popcount, value)``, which makes the open-set polynomial a
single pass and gives every topology one serialized form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BlocksNotAPartition,
    GroundSizeOutOfRange,
    InvalidPartitionType,
    InvalidPermutation,
    MaskOutOfRange,
    MissingEmptyOrFull,
    NotClosed,
)

MAX_N = 16
CANONICAL_MAX_N = 8


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_key(m: int) -> tuple[int, int]:
    return (m.bit_count(), m)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << i
    return m


def elements_of(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def render_mask(m: int) -> str:
    """Human-readable form such as ``{x1,x3}``; never parsed back."""
    return "{" + ",".join(f"x{i + 1}" for i in elements_of(m)) + "}"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise GroundSizeOutOfRange(f"ground size {n!r} outside 1..{MAX_N}")


def _check_masks(n: int, masks: Iterable[int]) -> list[int]:
    full = full_mask(n)
    out = []
    for m in masks:
        if not isinstance(m, int) or m < 0 or m & ~full:
            raise MaskOutOfRange(f"mask {m!r} uses bits outside 0..{n - 1}")
        out.append(m)
    return out


class Topology:
    """An immutable, validated topology on ``n`` points.

    Build instances with :func:`validate`, :func:`generate_from_subbasis` or
    the other constructors in this module; calling the class directly also
    validates unless ``check=False`` is passed by trusted internal code.
    """

    __slots__ = ("_n", "_opens")

    def __init__(self, n: int, opens: Iterable[int], *, check: bool = True):
        if check:
            t = validate(n, list(opens))
            opens = t.opens
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_opens", tuple(opens))

    def __setattr__(self, name, value):
        raise AttributeError("Topology is immutable")

    @classmethod
    def _trusted(cls, n: int, sorted_opens: Sequence[int]) -> "Topology":
        t = object.__new__(cls)
        object.__setattr__(t, "_n", n)
        object.__setattr__(t, "_opens", tuple(sorted_opens))
        return t

    @property
    def n(self) -> int:
        return self._n

    @property
    def opens(self) -> tuple[int, ...]:
        return self._opens

    @property
    def full(self) -> int:
        return full_mask(self._n)

    def __len__(self) -> int:
        return len(self._opens)

    def __iter__(self):
        return iter(self._opens)

    def __contains__(self, m: int) -> bool:
        return m in self._opens

    def __eq__(self, other):
        if not isinstance(other, Topology):
            return NotImplemented
        return self._n == other._n and self._opens == other._opens

    def __lt__(self, other: "Topology") -> bool:
        return (self._n, [mask_key(m) for m in self._opens]) < (
            other._n,
            [mask_key(m) for m in other._opens],
        )

    def __hash__(self) -> int:
        return hash((self._n, self._opens))

    def __repr__(self) -> str:
        return f"Topology(n={self._n}, opens={list(self._opens)})"

    @property
    def is_discrete(self) -> bool:
        return len(self._opens) == 1 << self._n

    def to_json(self) -> dict:
        return {"n": self._n, "opens": list(self._opens)}

    @classmethod
    def from_json(cls, obj: dict) -> "Topology":
        try:
            n, opens = obj["n"], obj["opens"]
        except (KeyError, TypeError) as exc:
            raise ValueError("topology JSON needs 'n' and 'opens'") from exc
        if not isinstance(opens, list):
            raise ValueError("'opens' must be a list of integers")
        return validate(n, opens)


def validate(n: int, masks: Iterable[int]) -> Topology:
    """Check that ``masks`` is a topology on ``n`` points and normalize it."""
    _check_n(n)
    opens = sorted(set(_check_masks(n, masks)), key=mask_key)
    full = full_mask(n)
    members = set(opens)
    if 0 not in members or full not in members:
        raise MissingEmptyOrFull("a topology must contain the empty set and the ground set")
    for i, u in enumerate(opens):
        for v in opens[i + 1 :]:
            if u | v not in members:
                raise NotClosed(u, v, "union")
            if u & v not in members:
                raise NotClosed(u, v, "intersection")
    return Topology._trusted(n, opens)


def generate_from_subbasis(n: int, masks: Iterable[int]) -> Topology:
    """Smallest topology on ``n`` points containing every mask in ``masks``.

    Worklist closure under pairwise union and intersection over a membership
    table of size ``2**n``; each mask enters the worklist at most once.
    """
    _check_n(n)
    full = full_mask(n)
    seen = bytearray(1 << n)
    present: list[int] = []
    work = [0, full, *_check_masks(n, masks)]
    while work:
        m = work.pop()
        if seen[m]:
            continue
        seen[m] = 1
        for other in present:
            for r in (m | other, m & other):
                if not seen[r]:
                    work.append(r)
        present.append(m)
    present.sort(key=mask_key)
    return Topology._trusted(n, present)


def open_polynomial(t: Topology) -> tuple[int, ...]:
    """Coefficients ``(u_0, ..., u_n)``; ``u_j`` counts opens with ``j`` points."""
    u = [0] * (t.n + 1)
    for m in t.opens:
        u[m.bit_count()] += 1
    return tuple(u)


def cotopology(t: Topology) -> Topology:
    full = t.full
    return Topology._trusted(t.n, sorted((full ^ m for m in t.opens), key=mask_key))


def minimal_open_sets(t: Topology) -> list[int]:
    out = []
    for a in t.opens:
        if a and all((a & u) in (0, a) for u in t.opens):
            out.append(a)
    return sorted(out, key=mask_key)


def minimal_neighborhoods(t: Topology) -> list[int]:
    """For each point, the smallest open set containing it.

    These are the up-sets of the specialization preorder: ``j`` is in entry
    ``i`` exactly when every open containing ``i`` also contains ``j``.
    """
    up = [t.full] * t.n
    for m in t.opens:
        for i in elements_of(m):
            up[i] &= m
    return up


def alexandrov_topology(n: int, up: Sequence[int]) -> Topology:
    """Topology whose opens are the up-closed sets of a preorder.

    ``up[i]`` lists the points above ``i`` (and must contain ``i``); the
    relation must be transitive, which is checked.
    """
    _check_n(n)
    if len(up) != n:
        raise ValueError("need one up-set per point")
    for i, ui in enumerate(up):
        if not (ui >> i) & 1:
            raise ValueError(f"relation is not reflexive at {i}")
        for j in elements_of(ui):
            if up[j] & ~ui:
                raise ValueError(f"relation is not transitive at {i} <= {j}")
    # closure[S] = union of up[i] over i in S, built from S without its low bit
    size = 1 << n
    closure = [0] * size
    opens = [0]
    for s in range(1, size):
        low = s & -s
        closure[s] = closure[s ^ low] | up[low.bit_length() - 1]
        if closure[s] == s:
            opens.append(s)
    opens.sort(key=mask_key)
    return Topology._trusted(n, opens)


@dataclass(frozen=True)
class PartitionType:
    """Block-size profile of a set partition: ``alpha[i-1]`` blocks of size ``i``."""

    alpha: tuple[int, ...]

    def __post_init__(self):
        alpha = tuple(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if not alpha or any((not isinstance(a, int)) or a < 0 for a in alpha):
            raise InvalidPartitionType(f"bad partition type {alpha!r}")
        if alpha[-1] == 0:
            raise InvalidPartitionType("partition type must not end with a zero count")

    @property
    def n(self) -> int:
        return sum(i * a for i, a in enumerate(self.alpha, start=1))

    @property
    def blocks(self) -> int:
        return sum(self.alpha)

    @classmethod
    def from_block_sizes(cls, sizes: Iterable[int]) -> "PartitionType":
        sizes = list(sizes)
        if not sizes or min(sizes) < 1:
            raise InvalidPartitionType("block sizes must be positive")
        alpha = [0] * max(sizes)
        for s in sizes:
            alpha[s - 1] += 1
        return cls(tuple(alpha))

    def block_sizes(self) -> list[int]:
        return [i for i, a in enumerate(self.alpha, start=1) for _ in range(a)]


def partition_blocks(alpha: PartitionType) -> list[int]:
    """Consecutive blocks realizing ``alpha``, smallest blocks on the lowest bits."""
    blocks, start = [], 0
    for size in alpha.block_sizes():
        blocks.append(((1 << size) - 1) << start)
        start += size
    return blocks


def partition_topology(blocks: Sequence[int]) -> Topology:
    """Topology whose opens are all unions of the given blocks."""
    blocks = list(blocks)
    if not blocks or any(b <= 0 for b in blocks):
        raise BlocksNotAPartition("blocks must be nonempty")
    union = 0
    for b in blocks:
        if union & b:
            raise BlocksNotAPartition("blocks overlap")
        union |= b
    n = union.bit_length()
    _check_n(n)
    if union != full_mask(n):
        raise BlocksNotAPartition("blocks do not cover 0..n-1")
    opens = []
    for choice in range(1 << len(blocks)):
        opens.append(mask_of_blocks(blocks, choice))
    opens.sort(key=mask_key)
    return Topology._trusted(n, opens)


def mask_of_blocks(blocks: Sequence[int], choice: int) -> int:
    m = 0
    for k, b in enumerate(blocks):
        if (choice >> k) & 1:
            m |= b
    return m


def is_partition_induced(t: Topology) -> PartitionType | None:
    """Partition type of ``t`` if its opens are exactly the unions of its minimal opens."""
    minimal = minimal_open_sets(t)
    union = 0
    for a in minimal:
        union |= a
    if union != t.full or len(t.opens) != 1 << len(minimal):
        return None
    # minimal opens are pairwise disjoint, so 2**l distinct unions fill t exactly
    return PartitionType.from_block_sizes(a.bit_count() for a in minimal)


def disjoint_union(t1: Topology, t2: Topology) -> Topology:
    """Topology on ``n1 + n2`` points; ``t2``'s points are shifted above ``t1``'s."""
    n = t1.n + t2.n
    _check_n(n)
    shift = t1.n
    opens = [u | (v << shift) for u in t1.opens for v in t2.opens]
    opens.sort(key=mask_key)
    return Topology._trusted(n, opens)


def is_t0(t: Topology) -> bool:
    """True when every two distinct points are separated by some open set."""
    up = minimal_neighborhoods(t)
    for i in range(t.n):
        for j in range(i + 1, t.n):
            # i and j are inseparable iff each lies in the other's minimal open
            if (up[i] >> j) & 1 and (up[j] >> i) & 1:
                return False
    return True


def discrete(n: int) -> Topology:
    _check_n(n)
    return Topology._trusted(n, sorted(range(1 << n), key=mask_key))


def indiscrete(n: int) -> Topology:
    _check_n(n)
    return Topology._trusted(n, (0, full_mask(n)))


def _check_perm(n: int, perm: Sequence[int]) -> list[int]:
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise InvalidPermutation(f"{perm!r} is not a permutation of 0..{n - 1}")
    return perm


def relabel_mask(m: int, perm: Sequence[int]) -> int:
    out = 0
    for i in elements_of(m):
        out |= 1 << perm[i]
    return out


def relabel(t: Topology, perm: Sequence[int]) -> Topology:
    """Move point ``i`` to ``perm[i]`` in every open set."""
    perm = _check_perm(t.n, perm)
    return Topology._trusted(t.n, sorted((relabel_mask(m, perm) for m in t.opens), key=mask_key))


@lru_cache(maxsize=None)
def _relabel_keys(n: int) -> np.ndarray:
    """Array ``K[p, m]``: sort key of mask ``m`` relabeled by the ``p``-th permutation."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    relabeled = bits @ (np.int64(1) << perms.T)
    keys = (bits.sum(axis=1)[None, :] << n) | relabeled.T
    return np.ascontiguousarray(keys.astype(np.int32))


def canonical_form(t: Topology) -> Topology:
    """Representative of the homeomorphism class of ``t``.

    The lexicographically least sorted opens-list over all ``n!``
    relabelings, so two topologies are homeomorphic exactly when their
    canonical forms are equal.
    """
    n = t.n
    if n > CANONICAL_MAX_N:
        raise GroundSizeOutOfRange(f"canonical_form supports n <= {CANONICAL_MAX_N}")
    keys = _relabel_keys(n)[:, list(t.opens)]
    keys.sort(axis=1)
    rows = np.arange(keys.shape[0])
    for col in range(keys.shape[1]):
        column = keys[rows, col]
        rows = rows[column == column.min()]
        if len(rows) == 1:
            break
    best = keys[rows[0]] & full_mask(n)
    return Topology._trusted(n, [int(m) for m in best])


def is_homeomorphic(t1: Topology, t2: Topology) -> bool:
    return t1.n == t2.n and len(t1) == len(t2) and canonical_form(t1) == canonical_form(t2)
