import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_distinct, brute_forbid, brute_partitions
from subsumlab.census import (
    CensusResult,
    ResourceCapError,
    census,
    census_range,
    distinct_sets,
    forbid_count,
    forbid_scan,
    mask_tally,
)
from subsumlab.partitions import DISTINCT, UNRESTRICTED, PartitionClass, count
from subsumlab.subsum import represents

K2 = PartitionClass.k_reduced(2)
CLASSES = [UNRESTRICTED, DISTINCT, K2, PartitionClass.k_reduced(3)]

# frozen from oracles.brute_distinct (eps-vector sets of every partition), n = 0..14
P_HAT = [1, 1, 2, 2, 4, 4, 6, 8, 11, 12, 17, 21, 27, 32, 41]
Q_HAT = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 14, 17, 22]


def test_census_examples():
    assert census(4) == CensusResult(4, UNRESTRICTED, 5, 4)
    assert census(4, DISTINCT) == CensusResult(4, DISTINCT, 2, 2)
    assert census(0) == CensusResult(0, UNRESTRICTED, 1, 1)


def test_debug_dump_at_four():
    got = [set(s) for s in distinct_sets(4)]
    assert sorted(map(sorted, got)) == sorted(
        [[0, 4], [0, 1, 3, 4], [0, 2, 4], [0, 1, 2, 3, 4]]
    )


@pytest.mark.parametrize("n", range(15))
def test_distinct_against_frozen_oracle(n):
    assert census(n).distinct_set_count == P_HAT[n]
    assert census(n, DISTINCT).distinct_set_count == Q_HAT[n]


def test_frozen_values_reproduce_from_oracle():
    assert [brute_distinct(n) for n in range(10)] == P_HAT[:10]
    assert [brute_distinct(n, 1) for n in range(10)] == Q_HAT[:10]


@pytest.mark.parametrize("cls", CLASSES, ids=str)
def test_range_walk_agrees_with_single_walks(cls):
    for res in census_range(30, cls):
        assert res == census(res.n, cls)
        assert res.partition_count == count(res.n, cls)


@pytest.mark.parametrize("n", range(1, 31))
def test_census_result_invariants(n):
    full, dist = census(n), census(n, DISTINCT)
    assert 1 <= full.distinct_set_count <= full.partition_count
    assert dist.distinct_set_count <= full.distinct_set_count


@pytest.mark.parametrize("shards", [2, 3, 8])
def test_sharded_tally_equals_serial(shards):
    assert mask_tally(30, shards=shards) == mask_tally(30)
    assert mask_tally(30, DISTINCT, shards=shards) == mask_tally(30, DISTINCT)


def test_process_pool_shards():
    assert census(35, shards=3, workers=2) == census(35)


def test_cap_refusal_names_estimate():
    with pytest.raises(ResourceCapError) as info:
        census(61)
    assert str(count(61)) in str(info.value)
    assert info.value.estimate == count(61)
    assert census(12, cap=None).partition_count == 77
    with pytest.raises(ResourceCapError):
        forbid_scan(61)
    with pytest.raises(ResourceCapError):
        forbid_count(30, 3, cap=20)


def test_forbid_examples():
    assert forbid_count(4, 2).count == 2
    assert forbid_count(3, 2, DISTINCT).count == 1
    assert [r.count for r in forbid_scan(4)] == [0, 2, 2, 2, 0]
    assert [r.count for r in forbid_scan(1)] == [0, 0]
    for cls in CLASSES:
        assert forbid_count(9, 0, cls).count == 0


def test_forbid_out_of_range_counts_everything():
    assert forbid_count(10, -1).count == count(10)
    assert forbid_count(10, 11, DISTINCT).count == count(10, DISTINCT)


@pytest.mark.parametrize("cls", CLASSES, ids=str)
def test_forbid_against_brute_force(cls):
    for n in range(0, 13):
        assert [r.count for r in forbid_scan(n, cls)] == [
            brute_forbid(n, a, cls.k) for a in range(n + 1)
        ]


@settings(max_examples=40)
@given(st.integers(0, 30), st.sampled_from(CLASSES))
def test_scan_palindromic(n, cls):
    counts = [r.count for r in forbid_scan(n, cls)]
    assert counts == counts[::-1]
    assert counts[0] == counts[n] == 0
    assert all(0 <= c <= count(n, cls) for c in counts)


@settings(max_examples=30)
@given(st.integers(0, 22), st.integers(-2, 24), st.sampled_from(CLASSES))
def test_scan_matches_single_count(n, a, cls):
    single = forbid_count(n, a, cls).count
    if 0 <= a <= n:
        assert single == forbid_scan(n, cls)[a].count
    assert single == count(n, cls) - sum(
        1 for p in brute_partitions(n, cls.k) if represents(p, a)
    )


@pytest.mark.parametrize("n", [6, 12, 18])
def test_populations_nest(n):
    d = set(brute_partitions(n, 1))
    k2 = set(brute_partitions(n, 2))
    full = set(brute_partitions(n))
    assert d <= k2 <= full


def test_p_hat_equals_q_hat_two_small():
    for n in range(25):
        assert census(n).distinct_set_count == census(n, K2).distinct_set_count
