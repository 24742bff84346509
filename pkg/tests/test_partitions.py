"""Counting nonnegative integer combinations (order-free partitions)."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from liebranch.fixtures import load_frobenius_fixture
from liebranch.partitions import count_partitions


def _oracle_count(target, parts):
    # brute force: bounded product space
    ranges = [range(target // p + 1) for p in parts]
    return sum(1 for combo in itertools.product(*ranges)
               if sum(c * p for c, p in zip(combo, parts)) == target)


def test_hand_values():
    assert count_partitions(0, [5, 7]) == 1
    assert count_partitions(55, [56]) == 0
    assert count_partitions(6, [1, 2, 3]) == 7
    assert count_partitions(100, [25, 10, 5, 1]) == 242


def test_reference_counts():
    for target, parts, want in load_frobenius_fixture():
        assert count_partitions(target, list(parts)) == want


@given(st.integers(0, 40),
       st.lists(st.integers(1, 15), min_size=1, max_size=4, unique=True))
@settings(max_examples=120, deadline=None)
def test_matches_brute_force(target, parts):
    assert count_partitions(target, parts) == _oracle_count(target, parts)


def test_validation():
    with pytest.raises(ValueError):
        count_partitions(-1, [2])
    with pytest.raises(ValueError):
        count_partitions(5, [])
    with pytest.raises(ValueError):
        count_partitions(5, [0, 2])
    with pytest.raises(ValueError):
        count_partitions(5, [2, 2])
    with pytest.raises(ValueError):
        count_partitions(5.0, [2])
