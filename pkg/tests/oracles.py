"""Brute-force reference implementations, deliberately naive and independent
of the library code paths they check."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


def _descending(n: int, largest: int):
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield [first] + rest


def brute_partitions(n: int, k: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n as sorted ascending tuples, in lexicographic order.

    ``k`` caps the multiplicity of each part value.
    """
    out = []
    for desc in _descending(n, n):
        asc = tuple(reversed(desc))
        if k is None or all(asc.count(v) <= k for v in set(asc)):
            out.append(asc)
    return sorted(out)


def brute_subsums(parts) -> frozenset[int]:
    """Every sum of eps_i * n_i over all 2**j choices of eps."""
    return frozenset(
        sum(itertools.compress(parts, eps))
        for eps in itertools.product((0, 1), repeat=len(parts))
    )


@lru_cache(maxsize=None)
def pentagonal_p(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, i = 0, 1
    while True:
        g1 = i * (3 * i - 1) // 2
        if g1 > n:
            break
        sign = 1 if i % 2 else -1
        total += sign * pentagonal_p(n - g1)
        g2 = i * (3 * i + 1) // 2
        if g2 <= n:
            total += sign * pentagonal_p(n - g2)
        i += 1
    return total


def glaisher_count(n: int, k: int) -> int:
    """k-reduced partitions of n, counted as partitions with no part divisible by k+1."""
    ways = [1] + [0] * n
    for v in range(1, n + 1):
        if v % (k + 1):
            for m in range(v, n + 1):
                ways[m] += ways[m - v]
    return ways[n]


def brute_forbid(n: int, a: int, k: int | None = None) -> int:
    return sum(1 for p in brute_partitions(n, k) if a not in brute_subsums(p))


def brute_distinct(n: int, k: int | None = None) -> int:
    return len({brute_subsums(p) for p in brute_partitions(n, k)})


def ln_ratio(num: int, den: int) -> float:
    return math.log(num) / math.log(den)
