"""Integer partitions under part-multiplicity caps.

A partition is stored as a non-decreasing tuple of positive parts. The
``k``-reduced class allows each part value at most ``k`` times (``k == 1`` is
partitions into distinct parts).

Enumeration walks the tree of non-decreasing prefixes with an explicit stack,
pruning every prefix that cannot be completed, so each yielded partition costs
amortised O(1) stack operations. The canonical order is lexicographic on the
part tuple; for ``n == 4``::

    (1, 1, 1, 1) < (1, 1, 2) < (1, 3) < (2, 2) < (4,)

Sharding splits the stream into *work units*: the prefixes of a fixed length
(plus the complete partitions shorter than that), listed in canonical order.
Shard ``s`` of ``S`` owns every unit whose index is ``s mod S``; concatenating
unit streams in unit order reproduces the canonical stream exactly.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "Partition",
    "PartitionClass",
    "UNRESTRICTED",
    "DISTINCT",
    "enumerate_partitions",
    "count",
    "count_table",
    "asymptotic_log_count",
    "work_units",
]


class Partition(tuple):
    """Non-decreasing tuple of positive parts.

    Compares lexicographically (plain tuple order), which is the canonical
    enumeration order.

    >>> Partition([3, 1])
    Partition(1, 3)
    >>> Partition([3, 1]).n
    4
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = sorted(parts)
        for v in parts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"partition parts must be positive integers, got {v!r}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def max_multiplicity(self) -> int:
        """Largest number of times any part value repeats (0 when empty)."""
        best = run = 0
        prev = None
        for v in self:
            run = run + 1 if v == prev else 1
            prev = v
            best = max(best, run)
        return best

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


@dataclass(frozen=True)
class PartitionClass:
    """Selects unrestricted partitions or ``k``-reduced ones.

    Text spellings: ``unrestricted``, ``distinct`` (same as ``kreduced:1``)
    and ``kreduced:<k>``.
    """

    kind: str = "unrestricted"
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "unrestricted":
            if self.k is not None:
                raise ValueError("unrestricted class takes no k")
        elif self.kind == "k_reduced":
            if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
                raise ValueError(f"k must be a positive integer, got {self.k!r}")
        else:
            raise ValueError(f"unknown partition class kind {self.kind!r}")

    @classmethod
    def unrestricted(cls) -> PartitionClass:
        return cls("unrestricted")

    @classmethod
    def k_reduced(cls, k: int) -> PartitionClass:
        return cls("k_reduced", k)

    @classmethod
    def parse(cls, text: str) -> PartitionClass:
        t = text.strip().lower()
        if t == "unrestricted":
            return cls.unrestricted()
        if t == "distinct":
            return cls.k_reduced(1)
        if t.startswith("kreduced:"):
            try:
                k = int(t.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad multiplicity in class {text!r}") from None
            return cls.k_reduced(k)
        raise ValueError(
            f"unknown class {text!r} (expected unrestricted, distinct or kreduced:<k>)"
        )

    def __str__(self) -> str:
        if self.kind == "unrestricted":
            return "unrestricted"
        return "distinct" if self.k == 1 else f"kreduced:{self.k}"

    def cap_for(self, n: int) -> int:
        """Effective multiplicity cap for partitions of ``n``."""
        if self.k is None:
            return max(n, 1)
        return min(self.k, max(n, 1))

    def contains(self, partition: Partition) -> bool:
        return self.k is None or partition.max_multiplicity() <= self.k


UNRESTRICTED = PartitionClass.unrestricted()
DISTINCT = PartitionClass.k_reduced(1)


class _Node(NamedTuple):
    parts: tuple[int, ...]
    rem: int  # amount still to place
    mult: int  # multiplicity of parts[-1] so far


def _children(node: _Node, cap: int) -> list[_Node]:
    """Completable one-part extensions of ``node`` in increasing part order."""
    parts, rem, mult = node
    last = parts[-1] if parts else 0
    start = last if (parts and mult < cap) else last + 1
    out = []
    for p in range(start, rem // 2 + 1):
        m = mult + 1 if p == last else 1
        r = rem - p
        if r > p or (r == p and m < cap):
            out.append(_Node(parts + (p,), r, m))
    if rem >= start:
        out.append(_Node(parts + (rem,), 0, mult + 1 if rem == last else 1))
    return out


def _walk(root: _Node, cap: int) -> Iterator[Partition]:
    stack = [root]
    pop, push = stack.pop, stack.extend
    while stack:
        node = pop()
        if node.rem == 0:
            yield Partition._trusted(node.parts)
        else:
            push(reversed(_children(node, cap)))


def work_units(n: int, cls: PartitionClass, depth: int = 2) -> list[_Node]:
    """Sharding units for partitions of ``n`` in canonical order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = cls.cap_for(n)
    units: list[_Node] = []
    stack = [_Node((), n, 0)]
    while stack:
        node = stack.pop()
        if node.rem == 0 or len(node.parts) >= depth:
            units.append(node)
        else:
            stack.extend(reversed(_children(node, cap)))
    return units


def enumerate_partitions(
    n: int,
    cls: PartitionClass = UNRESTRICTED,
    *,
    shard: int = 0,
    shards: int = 1,
) -> Iterator[Partition]:
    """Lazily yield the partitions of ``n`` in ``cls`` in canonical order.

    With ``shards > 1`` only the work units owned by ``shard`` are walked.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= shard < shards:
        raise ValueError(f"shard {shard} out of range for {shards} shards")
    cap = cls.cap_for(n)
    if shards == 1:
        yield from _walk(_Node((), n, 0), cap)
        return
    for i, unit in enumerate(work_units(n, cls)):
        if i % shards == shard:
            yield from _walk(unit, cap)


@lru_cache(maxsize=64)
def _table(n_max: int, k: int | None) -> tuple[int, ...]:
    counts = [1] + [0] * n_max
    if k is None:
        for v in range(1, n_max + 1):
            for m in range(v, n_max + 1):
                counts[m] += counts[m - v]
        return tuple(counts)
    for v in range(1, n_max + 1):
        new = counts[:]
        for m in range(v, n_max + 1):
            c_max = min(k, m // v)
            new[m] = sum(counts[m - c * v] for c in range(c_max + 1))
        counts = new
    return tuple(counts)


def count_table(n_max: int, cls: PartitionClass = UNRESTRICTED) -> tuple[int, ...]:
    """Exact counts for ``0..n_max`` by dynamic programming over part values."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    k = cls.k if cls.k is not None and cls.k < n_max else None
    return _table(n_max, k)


def count(n: int, cls: PartitionClass = UNRESTRICTED) -> int:
    """Number of partitions of ``n`` in ``cls`` (exact, never enumerated)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return count_table(n, cls)[n]


def asymptotic_log_count(n: int, cls: PartitionClass = UNRESTRICTED) -> float:
    """Leading-order exponent of the Hardy-Ramanujan estimate.

    ``pi*sqrt(2n/3)`` for unrestricted partitions, ``pi*sqrt(n/3)`` for
    distinct parts. The ``(1 + o(1))`` factor is dropped, so this is only the
    leading-order term of ``log count(n, cls)``. Other ``k`` are refused since
    no leading constant is pinned down for them here.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if cls.k is None:
        return math.pi * math.sqrt(2 * n / 3)
    if cls.k == 1:
        return math.pi * math.sqrt(n / 3)
    raise ValueError(f"no leading asymptotic constant available for class {cls}")
