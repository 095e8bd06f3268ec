import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from netsort.networks import (
    NETWORKS,
    VARSORTS,
    Comparator,
    SizeMismatchError,
    SortingNetwork,
    VarSortNetwork,
    apply_network,
    apply_varsort,
    compare_exchange,
)


def run_comparators(values, comparators):
    # reference interpreter, independent of the compiled networks
    v = list(values)
    for lo, hi in comparators:
        if v[hi] < v[lo]:
            v[lo], v[hi] = v[hi], v[lo]
    return v


@pytest.mark.parametrize("window, c, expected", [
    ([5, 2], (0, 1), [2, 5]),
    ([2, 5], (0, 1), [2, 5]),
    ([9, 1, 4], (0, 2), [4, 1, 9]),
])
def test_compare_exchange(window, c, expected):
    compare_exchange(window, Comparator(*c))
    assert window == expected


@pytest.mark.parametrize("width", sorted(NETWORKS))
def test_zero_one_exhaustive(width):
    net = NETWORKS[width]
    for bits in itertools.product((0, 1), repeat=width):
        window = list(bits)
        apply_network(window, net)
        assert window == sorted(bits)
        assert run_comparators(bits, net.comparators) == sorted(bits)


@pytest.mark.parametrize("width", sorted(NETWORKS))
def test_all_permutations(width):
    net = NETWORKS[width]
    target = list(range(width))
    for perm in itertools.permutations(target):
        window = list(perm)
        apply_network(window, net)
        assert window == target


def test_comparator_counts():
    assert {w: len(n) for w, n in NETWORKS.items()} == {2: 1, 3: 3, 4: 5, 5: 9, 6: 12, 7: 16, 8: 19}


def test_sorted_input_is_fixed_point():
    window = [1, 2, 3]
    apply_network(window, NETWORKS[3])
    assert window == [1, 2, 3]


def test_length_mismatch_rejected():
    with pytest.raises(SizeMismatchError):
        apply_network([3, 2, 1], NETWORKS[4])


def test_bad_comparator_rejected():
    with pytest.raises(ValueError):
        SortingNetwork(3, (Comparator(0, 3),))
    with pytest.raises(ValueError):
        SortingNetwork(3, (Comparator(2, 1),))


def test_sort_range_touches_only_window():
    a = [9, 8, 7, 6, 5, 4, 3, 2, 1, 0]
    NETWORKS[4].sort_range(a, 3)
    assert a == [9, 8, 7, 3, 4, 5, 6, 2, 1, 0]


def test_varsort_examples():
    empty = []
    apply_varsort(empty, VARSORTS[3])
    assert empty == []
    w = [7, 7, 1]
    apply_varsort(w, VARSORTS[3])
    assert w == sorted([7, 7, 1])
    for perm in itertools.permutations(range(1, 6)):
        w = list(perm)
        apply_varsort(w, VARSORTS[5])
        assert w == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("max_width", [3, 4, 5])
def test_varsort_every_length(max_width):
    vs = VARSORTS[max_width]
    for length in range(0, max_width + 1):
        for bits in itertools.product((0, 1, 2), repeat=length):
            w = list(bits)
            apply_varsort(w, vs)
            assert w == sorted(bits)


def test_varsort_too_long_rejected():
    with pytest.raises(SizeMismatchError):
        apply_varsort([4, 3, 2, 1], VARSORTS[3])


def test_varsort_requires_all_lengths():
    with pytest.raises(ValueError):
        VarSortNetwork(4, {2: NETWORKS[2], 4: NETWORKS[4]})


@given(st.sampled_from(sorted(NETWORKS)), st.data())
def test_network_properties(width, data):
    values = data.draw(st.lists(st.integers(-2**63, 2**63 - 1), min_size=width, max_size=width))
    net = NETWORKS[width]
    once = list(values)
    apply_network(once, net)
    assert sorted(once) == sorted(values)
    assert once == sorted(values)
    twice = list(once)
    apply_network(twice, net)
    assert twice == once
    again = list(values)
    apply_network(again, net)
    assert again == once


def test_non_integer_elements():
    words = ["pear", "apple", "fig", "kiwi", "date", "lime"]
    apply_network(words, NETWORKS[6])
    assert words == sorted(["pear", "apple", "fig", "kiwi", "date", "lime"])
    rng = random.Random(3)
    floats = [rng.random() for _ in range(7)]
    w = list(floats)
    apply_network(w, NETWORKS[7])
    assert w == sorted(floats)
