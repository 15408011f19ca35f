"""Represented sets: all subset sums of the parts of a partition.

The set lives in a bitmask where bit ``i`` means ``i`` is a subset sum. The
mask is a Python ``int``; ``words()`` exposes it as little-endian 64-bit words
(bit ``i`` in word ``i // 64``), which is also the canonical byte encoding
used as a dedup key. The subset-sum DP is the usual shift-or::

    mask = 1
    for part in parts:
        mask |= mask << part
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ._exact import Real, as_fraction, ceil_mul_sqrt
from .partitions import Partition

__all__ = [
    "WORD_BITS",
    "RepresentedSet",
    "subset_sum_mask",
    "represent",
    "represents",
    "extract_subset",
    "complement",
    "represents_full_range",
]

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


def subset_sum_mask(parts: Iterable[int]) -> int:
    mask = 1
    for p in parts:
        mask |= mask << p
    return mask


@dataclass(frozen=True)
class RepresentedSet:
    """Subset sums of a partition of ``n`` as a bitmask over ``{0..n}``."""

    n: int
    mask: int

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a <= self.n and bool(self.mask >> a & 1)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def words(self) -> list[int]:
        """Mask as little-endian 64-bit words, trailing zero words trimmed."""
        m, out = self.mask, []
        while m:
            out.append(m & _WORD_MASK)
            m >>= WORD_BITS
        return out

    def canonical_bytes(self) -> bytes:
        n_words = -(-self.mask.bit_length() // WORD_BITS)
        return self.mask.to_bytes(n_words * (WORD_BITS // 8), "little")

    @classmethod
    def from_bytes(cls, n: int, data: bytes) -> RepresentedSet:
        return cls(n, int.from_bytes(data, "little"))

    def is_symmetric(self) -> bool:
        full = (1 << (self.n + 1)) - 1
        rev = int(format(self.mask & full, f"0{self.n + 1}b")[::-1], 2)
        return rev == self.mask

    def missing(self) -> list[int]:
        """Values of ``0..n`` that are not subset sums."""
        return [a for a in range(self.n + 1) if not self.mask >> a & 1]


def represent(p: Partition) -> RepresentedSet:
    """Represented set of ``p``.

    >>> sorted(represent(Partition([1, 3])))
    [0, 1, 3, 4]
    """
    return RepresentedSet(sum(p), subset_sum_mask(p))


def represents(p: Partition, a: int) -> bool:
    """Whether some sub-multiset of ``p`` sums to ``a``.

    Runs a truncated DP on ``min(a, n - a)`` with early exit, so a single
    query never builds the full mask.
    """
    n = sum(p)
    if a < 0 or a > n:
        return False
    target = min(a, n - a)
    limit = (1 << (target + 1)) - 1
    bit = 1 << target
    mask = 1
    for part in p:
        if mask & bit:
            return True
        if part <= target:
            mask |= (mask << part) & limit
    return bool(mask & bit)


def extract_subset(p: Partition, b: int) -> Partition | None:
    """A sub-multiset of ``p`` summing to ``b``, or ``None`` if there is none.

    Backtraces the prefix masks from the largest part down, taking a part
    whenever the remainder is still reachable without it. So the witness
    greedily prefers larger parts and is deterministic.
    """
    n = sum(p)
    if b < 0 or b > n:
        return None
    prefix = [1]
    for part in p:
        prefix.append(prefix[-1] | prefix[-1] << part)
    if not prefix[-1] >> b & 1:
        return None
    chosen = []
    t = b
    for i in range(len(p), 0, -1):
        part = p[i - 1]
        if t >= part and prefix[i - 1] >> (t - part) & 1:
            chosen.append(part)
            t -= part
    assert t == 0
    return Partition._trusted(reversed(chosen))


def complement(p: Partition, sub: Partition) -> Partition:
    """Multiset difference ``p - sub``; ``sub`` must be a sub-multiset."""
    rest = list(p)
    for v in sub:
        rest.remove(v)
    return Partition._trusted(rest)


def represents_full_range(p: Partition, x: Real) -> bool:
    """Whether ``p`` represents every integer in ``[x*sqrt(n), n - x*sqrt(n)]``.

    Endpoints are rounded inward, ``ceil(x*sqrt(n))`` and
    ``n - ceil(x*sqrt(n))``, exactly; an empty interval gives ``True``.
    """
    x = as_fraction(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    n = sum(p)
    lo = ceil_mul_sqrt(x, n)
    hi = n - lo
    if lo > hi:
        return True
    mask = subset_sum_mask(p)
    span = (1 << (hi - lo + 1)) - 1
    return (mask >> lo) & span == span
