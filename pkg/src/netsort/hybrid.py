"""Merge Sort and Quick Sort with sorting networks as recursion base cases.

A :class:`NetworkConfig` names the window sizes that are handed to a network
instead of being split further.  The classical baselines are the same code
run with the empty ``Classic`` configuration, so the base case is the only
thing that differs between a baseline and its optimized variants.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, MutableSequence, Sequence

from netsort.networks import NETWORKS, VARSORTS, VarSortNetwork


class Algorithm(str, enum.Enum):
    MERGE_SORT = "MergeSort"
    QUICK_SORT = "QuickSort"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NetworkConfig:
    name: str
    fixed_widths: frozenset[int] = frozenset()
    varsort: VarSortNetwork | None = None
    dispatch: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        widths = frozenset(self.fixed_widths)
        object.__setattr__(self, "fixed_widths", widths)
        for w in widths:
            if w not in NETWORKS:
                raise ValueError(f"{self.name}: no network of width {w}")
        top = max(widths | ({self.varsort.max_width} if self.varsort else set()), default=-1)
        table: list = [None] * (top + 1)
        if self.varsort is not None:
            for size in range(2, self.varsort.max_width + 1):
                table[size] = _varsort_entry(self.varsort, size)
        # a fixed width wins over the varsort for the same size
        for w in widths:
            table[w] = NETWORKS[w].sort_range
        object.__setattr__(self, "dispatch", tuple(table))

    @property
    def is_classic(self) -> bool:
        return not any(self.dispatch)


def _varsort_entry(vs: VarSortNetwork, size: int) -> Callable:
    sort = vs.sort_range

    def entry(a, lo):
        sort(a, lo, size)

    entry.width = size
    return entry


CLASSIC = NetworkConfig("Classic")

CONFIGS: dict[str, NetworkConfig] = {
    c.name: c
    for c in (
        CLASSIC,
        NetworkConfig("PowerOf2", frozenset({4, 8})),
        NetworkConfig("Even", frozenset({4, 6, 8})),
        NetworkConfig("Odd", frozenset({3, 5, 7})),
        NetworkConfig("3", frozenset({3})),
        NetworkConfig("3To4", frozenset({3, 4})),
        NetworkConfig("3To5", frozenset({3, 4, 5})),
        NetworkConfig("3To8", frozenset(range(3, 9))),
        NetworkConfig("6To8", frozenset({6, 7, 8})),
        NetworkConfig("VarSort3", varsort=VARSORTS[3]),
        NetworkConfig("VarSort4", varsort=VARSORTS[4]),
        NetworkConfig("VarSort5", varsort=VARSORTS[5]),
    )
}


def get_config(name: str) -> NetworkConfig:
    """Look up a bundled configuration, ignoring case."""
    for key, cfg in CONFIGS.items():
        if key.lower() == name.strip().lower():
            return cfg
    raise KeyError(f"unknown configuration {name!r}; expected one of {', '.join(CONFIGS)}")


@dataclass
class SortStats:
    """Counters filled in by an instrumented sort call."""

    networks: Counter = field(default_factory=Counter)
    merges: int = 0
    partitions: int = 0
    calls: int = 0
    max_depth: int = 0

    @property
    def network_applications(self) -> int:
        return sum(self.networks.values())


def base_case_applies(size: int, config: NetworkConfig) -> bool:
    table = config.dispatch
    return 0 <= size < len(table) and table[size] is not None


def merge(array: MutableSequence, left: int, mid: int, right: int,
          scratch: list | None = None) -> None:
    """Stable merge of the sorted runs array[left..mid] and array[mid+1..right]."""
    n1 = mid - left + 1
    if scratch is None:
        scratch = [None] * n1
    scratch[:n1] = array[left:mid + 1]
    i = 0
    j = mid + 1
    k = left
    while i < n1 and j <= right:
        y = array[j]
        x = scratch[i]
        if y < x:
            array[k] = y
            j += 1
        else:
            array[k] = x
            i += 1
        k += 1
    if i < n1:
        array[k:k + n1 - i] = scratch[i:n1]


def _merge_sort(a, left, right, table, limit, scratch, stats, depth):
    size = right - left + 1
    if 0 <= size < limit:
        fn = table[size]
        if fn is not None:
            if stats is not None:
                assert fn.width == size, "network width does not match window"
                stats.networks[size] += 1
                stats.calls += 1
                stats.max_depth = max(stats.max_depth, depth)
            fn(a, left)
            return
    if stats is not None:
        stats.calls += 1
        stats.max_depth = max(stats.max_depth, depth)
    if left < right:
        mid = left + (right - left) // 2
        _merge_sort(a, left, mid, table, limit, scratch, stats, depth + 1)
        _merge_sort(a, mid + 1, right, table, limit, scratch, stats, depth + 1)
        merge(a, left, mid, right, scratch)
        if stats is not None:
            stats.merges += 1


def optimized_merge_sort(array: MutableSequence, left: int = 0, right: int | None = None,
                         config: NetworkConfig = CLASSIC, *,
                         stats: SortStats | None = None) -> None:
    """Sort array[left..right] (inclusive) in place with network base cases.

    Windows whose size is enabled in ``config`` are sorted by the matching
    network; everything else splits at ``left + (right - left) // 2`` and
    merges.  One scratch buffer is allocated for the whole call.
    """
    if right is None:
        right = len(array) - 1
    if right < left:
        return
    scratch = [None] * ((right - left) // 2 + 1)
    table = config.dispatch
    _merge_sort(array, left, right, table, len(table), scratch, stats, 0)


def classical_merge_sort(array: MutableSequence) -> None:
    optimized_merge_sort(array, 0, len(array) - 1, CLASSIC)


def median_of_three(array: MutableSequence, low: int, high: int):
    """Order array[low], array[mid], array[high] in place and return the middle value."""
    mid = low + (high - low) // 2
    if mid == low:
        # one or two elements: the probes alias, so order the ends only
        a = array[low]
        c = array[high]
        array[low], array[high] = (c, a) if c < a else (a, c)
        return array[low]
    a = array[low]
    b = array[mid]
    c = array[high]
    a, c = (c, a) if c < a else (a, c)
    a, b = (b, a) if b < a else (a, b)
    b, c = (c, b) if c < b else (b, c)
    array[low] = a
    array[mid] = b
    array[high] = c
    return b


def hoare_partition(array: MutableSequence, low: int, high: int, pivot) -> int:
    """Partition array[low..high] around ``pivot``; return the split index j.

    Afterwards array[low..j] <= pivot <= array[j+1..high] and low <= j < high.
    ``pivot`` must be a value present in the range.
    """
    i = low - 1
    j = high + 1
    while True:
        i += 1
        while array[i] < pivot:
            i += 1
        j -= 1
        while pivot < array[j]:
            j -= 1
        if i >= j:
            return j
        array[i], array[j] = array[j], array[i]


def _quick_sort(a, low, high, table, limit, stats, depth):
    size = high - low + 1
    if 0 <= size < limit:
        fn = table[size]
        if fn is not None:
            if stats is not None:
                assert fn.width == size, "network width does not match window"
                stats.networks[size] += 1
                stats.calls += 1
                stats.max_depth = max(stats.max_depth, depth)
            fn(a, low)
            return
    if stats is not None:
        stats.calls += 1
        stats.max_depth = max(stats.max_depth, depth)
    if low < high:
        pivot = median_of_three(a, low, high)
        p = hoare_partition(a, low, high, pivot)
        if stats is not None:
            stats.partitions += 1
        _quick_sort(a, low, p, table, limit, stats, depth + 1)
        _quick_sort(a, p + 1, high, table, limit, stats, depth + 1)


def optimized_quick_sort(array: MutableSequence, low: int = 0, high: int | None = None,
                         config: NetworkConfig = CLASSIC, *,
                         stats: SortStats | None = None) -> None:
    """Sort array[low..high] (inclusive) in place.

    Median-of-three pivot, Hoare partition, recursion on [low, j] and
    [j+1, high].  There is no depth guard: adversarial inputs can exhaust
    the interpreter's recursion limit.
    """
    if high is None:
        high = len(array) - 1
    if high < low:
        return
    table = config.dispatch
    _quick_sort(array, low, high, table, len(table), stats, 0)


def classical_quick_sort(array: MutableSequence) -> None:
    optimized_quick_sort(array, 0, len(array) - 1, CLASSIC)


@dataclass(frozen=True)
class SortVariant:
    algorithm: Algorithm
    config: NetworkConfig

    @property
    def name(self) -> str:
        return f"{self.algorithm.value}/{self.config.name}"

    def sort(self, array: MutableSequence, *, stats: SortStats | None = None) -> None:
        if self.algorithm is Algorithm.MERGE_SORT:
            optimized_merge_sort(array, 0, len(array) - 1, self.config, stats=stats)
        else:
            optimized_quick_sort(array, 0, len(array) - 1, self.config, stats=stats)


def variants(algorithms: Sequence[Algorithm] = tuple(Algorithm),
             configs: Sequence[NetworkConfig] = tuple(CONFIGS.values())) -> list[SortVariant]:
    return [SortVariant(alg, cfg) for alg in algorithms for cfg in configs]


VARIANTS: list[SortVariant] = variants()
