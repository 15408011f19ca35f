"""Exact census of represented sets and forbidden-subsum counts.

Every partition of ``n`` in a class is walked once, its subset-sum mask built
incrementally along the prefix tree (one shift-or per tree edge). The walk
feeds a *tally*: a dict from mask to the number of partitions having it.
Everything else is read off a tally:

* distinct represented sets = ``len(tally)``
* partitions = ``sum(tally.values())``
* partitions avoiding ``a`` = sum of multiplicities of masks lacking bit ``a``

Tallies of different shards merge by pointwise addition, which is commutative
and associative, so any sharding gives the same result.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from .partitions import UNRESTRICTED, PartitionClass, count, work_units
from .subsum import RepresentedSet, WORD_BITS, subset_sum_mask

__all__ = [
    "DEFAULT_CAP",
    "ResourceCapError",
    "CensusResult",
    "ForbidResult",
    "check_cap",
    "mask_tally",
    "census",
    "census_range",
    "forbid_count",
    "forbid_scan",
    "distinct_sets",
]

DEFAULT_CAP = 60
# rough per-entry cost of a dict slot plus a small int object
_ENTRY_OVERHEAD = 100


class ResourceCapError(RuntimeError):
    """Raised when ``n`` exceeds the configured census cap."""

    def __init__(self, n: int, cap: int, cls: PartitionClass):
        self.n, self.cap, self.cls = n, cap, cls
        self.estimate = count(n, cls)
        mask_bytes = -(-(n + 1) // WORD_BITS) * (WORD_BITS // 8)
        self.memory_bytes = self.estimate * (mask_bytes + _ENTRY_OVERHEAD)
        super().__init__(
            f"n={n} exceeds census cap {cap} for class {cls}: "
            f"{self.estimate} partitions to walk, up to ~{self.memory_bytes / 2**20:.1f} MiB "
            f"of mask storage; raise the cap to proceed"
        )


@dataclass(frozen=True)
class CensusResult:
    n: int
    cls: PartitionClass
    partition_count: int
    distinct_set_count: int


@dataclass(frozen=True)
class ForbidResult:
    n: int
    a: int
    cls: PartitionClass
    count: int


def check_cap(n: int, cls: PartitionClass, cap: int | None) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if cap is not None and n > cap:
        raise ResourceCapError(n, cap, cls)


def _tally_from(parts: tuple[int, ...], rem: int, mult: int, cap: int, tally: dict) -> None:
    """Add every completion of the prefix ``parts`` to ``tally``."""
    get = tally.get
    stack = [(parts[-1] if parts else 0, mult, rem, subset_sum_mask(parts))]
    pop, push = stack.pop, stack.append
    while stack:
        last, mult, rem, mask = pop()
        if rem == 0:
            tally[mask] = get(mask, 0) + 1
            continue
        start = last if (last and mult < cap) else last + 1
        for p in range(start, rem // 2 + 1):
            m = mult + 1 if p == last else 1
            r = rem - p
            if r > p or (r == p and m < cap):
                push((p, m, r, mask | mask << p))
        if rem >= start:
            leaf = mask | mask << rem
            tally[leaf] = get(leaf, 0) + 1


def _shard_tally(n: int, cls: PartitionClass, shard: int, shards: int) -> dict[int, int]:
    cap = cls.cap_for(n)
    tally: dict[int, int] = {}
    for i, unit in enumerate(work_units(n, cls)):
        if i % shards == shard:
            _tally_from(unit.parts, unit.rem, unit.mult, cap, tally)
    return tally


def _merge(into: dict[int, int], part: Mapping[int, int]) -> dict[int, int]:
    for mask, c in part.items():
        into[mask] = into.get(mask, 0) + c
    return into


def mask_tally(
    n: int,
    cls: PartitionClass = UNRESTRICTED,
    *,
    shards: int = 1,
    workers: int | None = 1,
) -> dict[int, int]:
    """Map each represented-set mask of ``n`` to its number of partitions.

    ``shards`` splits the partition stream deterministically; ``workers > 1``
    runs shards in a process pool. Neither affects the result.
    """
    if shards < 1:
        raise ValueError("shards must be >= 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    if shards == 1:
        tally: dict[int, int] = {}
        _tally_from((), n, 0, cls.cap_for(n), tally)
        return tally
    workers = min(workers or os.cpu_count() or 1, shards)
    if workers <= 1:
        parts = [_shard_tally(n, cls, s, shards) for s in range(shards)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard_tally, [n] * shards, [cls] * shards,
                                  range(shards), [shards] * shards))
    merged: dict[int, int] = {}
    for part in parts:
        _merge(merged, part)
    return merged


@lru_cache(maxsize=8)
def _cached_tally(n: int, cls: PartitionClass) -> Mapping[int, int]:
    return MappingProxyType(mask_tally(n, cls))


def census(
    n: int,
    cls: PartitionClass = UNRESTRICTED,
    *,
    cap: int | None = DEFAULT_CAP,
    shards: int = 1,
    workers: int | None = 1,
) -> CensusResult:
    """Partition count and number of distinct represented sets for ``n``."""
    check_cap(n, cls, cap)
    tally = mask_tally(n, cls, shards=shards, workers=workers)
    return CensusResult(n, cls, sum(tally.values()), len(tally))


def census_range(
    n_max: int, cls: PartitionClass = UNRESTRICTED, *, cap: int | None = DEFAULT_CAP
) -> list[CensusResult]:
    """Census for every ``n`` in ``0..n_max`` from one walk.

    Each node of the tree of non-decreasing part sequences with sum at most
    ``n_max`` is itself a partition of its sum, so visiting the tree once
    covers all ``n`` together.
    """
    check_cap(n_max, cls, cap)
    cap_k = cls.cap_for(n_max)
    seen: list[set[int]] = [set() for _ in range(n_max + 1)]
    totals = [0] * (n_max + 1)
    seen[0].add(1)
    totals[0] = 1
    stack = [(0, 0, 0, 1)]
    pop, push = stack.pop, stack.append
    while stack:
        last, mult, s, mask = pop()
        start = last if (last and mult < cap_k) else last + 1
        for p in range(start, n_max - s + 1):
            t = s + p
            m2 = mask | mask << p
            seen[t].add(m2)
            totals[t] += 1
            if t + p <= n_max:
                push((p, mult + 1 if p == last else 1, t, m2))
    return [CensusResult(n, cls, totals[n], len(seen[n])) for n in range(n_max + 1)]


def forbid_count(
    n: int, a: int, cls: PartitionClass = UNRESTRICTED, *, cap: int | None = DEFAULT_CAP
) -> ForbidResult:
    """Number of partitions of ``n`` in ``cls`` with no subset summing to ``a``.

    Out-of-range ``a`` is never represented, so the whole class counts.
    """
    check_cap(n, cls, cap)
    if a < 0 or a > n:
        return ForbidResult(n, a, cls, count(n, cls))
    bit = 1 << a
    total = sum(c for mask, c in _cached_tally(n, cls).items() if not mask & bit)
    return ForbidResult(n, a, cls, total)


def forbid_scan(
    n: int, cls: PartitionClass = UNRESTRICTED, *, cap: int | None = DEFAULT_CAP
) -> list[ForbidResult]:
    """``forbid_count`` for every ``a`` in ``0..n`` from a single pass."""
    check_cap(n, cls, cap)
    full = (1 << (n + 1)) - 1
    missing = [0] * (n + 1)
    for mask, c in _cached_tally(n, cls).items():
        gaps = ~mask & full
        while gaps:
            low = gaps & -gaps
            missing[low.bit_length() - 1] += c
            gaps ^= low
    return [ForbidResult(n, a, cls, missing[a]) for a in range(n + 1)]


def distinct_sets(n: int, cls: PartitionClass = UNRESTRICTED) -> list[RepresentedSet]:
    """The distinct represented sets themselves, for debugging small ``n``."""
    check_cap(n, cls, 20)
    return [RepresentedSet(n, m) for m in sorted(_cached_tally(n, cls))]
