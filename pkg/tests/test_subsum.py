import math

import pytest
from hypothesis import given, strategies as st

from oracles import brute_partitions, brute_subsums
from subsumlab.partitions import PartitionClass, Partition
from subsumlab.subsum import (
    RepresentedSet,
    complement,
    extract_subset,
    represent,
    represents,
    represents_full_range,
)

partitions = st.lists(st.integers(1, 12), max_size=10).map(Partition)


def test_represent_examples():
    assert set(represent(Partition([1, 3]))) == {0, 1, 3, 4}
    assert set(represent(Partition([2, 2]))) == {0, 2, 4}
    assert set(represent(Partition())) == {0}


def test_represents_examples():
    p = Partition([1, 3])
    assert not represents(p, 2)
    assert represents(p, 0)
    assert represents(p, 4)
    assert not represents(p, -1)
    assert not represents(p, 5)


def test_extract_subset_examples():
    p = Partition([1, 3])
    assert extract_subset(p, 3) == (3,)
    assert extract_subset(p, 0) == ()
    assert extract_subset(p, 2) is None


def test_extract_prefers_large_parts():
    assert extract_subset(Partition([1, 1, 1, 2, 3]), 3) == (3,)
    assert extract_subset(Partition([1, 2, 2, 4]), 5) == (1, 4)


def test_full_range_examples():
    assert represents_full_range(Partition([1, 1, 2]), 0)
    assert not represents_full_range(Partition([4]), 0)
    assert represents_full_range(Partition([4]), 5)


@pytest.mark.parametrize("n", range(0, 13))
def test_represent_matches_eps_vectors(n):
    for parts in brute_partitions(n):
        assert frozenset(represent(Partition(parts))) == brute_subsums(parts)


@given(partitions)
def test_set_is_symmetric_and_bounded(p):
    s = represent(p)
    assert 0 in s and s.n in s
    assert all(0 <= a <= s.n for a in s)
    assert s.is_symmetric()
    for a in range(-2, s.n + 3):
        assert represents(p, a) == represents(p, s.n - a) == (a in s)


@given(partitions, st.integers(-3, 130))
def test_extract_sound_and_complete(p, b):
    sub = extract_subset(p, b)
    assert (sub is not None) == represents(p, b)
    if sub is not None:
        assert sum(sub) == b
        rest = complement(p, sub)
        assert sorted(sub + rest) == list(p)
        assert rest.n == p.n - b


@given(partitions, st.integers(0, 130))
def test_split_shifts_into_parent(p, b):
    sub = extract_subset(p, b)
    if sub is None:
        return
    parent = represent(p)
    for a in represent(complement(p, sub)):
        assert a + b in parent


@pytest.mark.parametrize("k", [1, 2])
def test_split_keeps_multiplicity_cap(k):
    cls = PartitionClass.k_reduced(k)
    for parts in brute_partitions(16, k):
        p = Partition(parts)
        for b in range(17):
            sub = extract_subset(p, b)
            if sub is not None:
                assert cls.contains(sub) and cls.contains(complement(p, sub))


@given(partitions, st.sampled_from([0, 0.5, 1, 1.07, 2]))
def test_full_range_against_scan(p, x):
    n = p.n
    lo = math.ceil(x * math.sqrt(n) - 1e-12)
    expected = all(represents(p, a) for a in range(lo, n - lo + 1))
    assert represents_full_range(p, x) == expected


def test_full_range_exact_endpoint():
    # n = 16 misses only 1 and 15; x*sqrt(n) is exactly 2 and exactly 1 here
    p = Partition([2, 2, 3, 3, 3, 3])
    assert represents_full_range(p, 0.5)
    assert not represents_full_range(p, 0.25)


def test_words_and_bytes():
    s = RepresentedSet(70, (1 << 70) | 1)
    assert s.words() == [1, 1 << 6]
    data = s.canonical_bytes()
    assert len(data) == 16
    assert RepresentedSet.from_bytes(70, data) == s
    assert RepresentedSet(0, 1).canonical_bytes() == (1).to_bytes(8, "little")
    assert s.missing()[:2] == [1, 2]
    assert len(represent(Partition([1, 3]))) == 4
