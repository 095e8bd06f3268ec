"""Hybrid Merge Sort and Quick Sort with sorting-network base cases."""

from netsort.bench import (
    BenchmarkRecord,
    SpeedupRecord,
    compute_speedup,
    run_benchmark,
    run_campaign,
)
from netsort.datagen import Distribution, GenSpec, Kind, SplitMix64, generate
from netsort.hybrid import (
    CONFIGS,
    VARIANTS,
    Algorithm,
    NetworkConfig,
    SortStats,
    SortVariant,
    base_case_applies,
    classical_merge_sort,
    classical_quick_sort,
    hoare_partition,
    median_of_three,
    merge,
    optimized_merge_sort,
    optimized_quick_sort,
)
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

__version__ = "0.1.0"
