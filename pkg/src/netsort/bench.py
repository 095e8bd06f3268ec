"""Benchmark harness: auto-scaled timing, baseline pairing and speedups.

Measurement owns the process: run one campaign at a time and do not time
sorts from several threads at once, or the numbers contaminate each other.
"""

from __future__ import annotations

import gc
import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from netsort.datagen import DISTRIBUTIONS, Distribution, GenSpec, Kind, generate
from netsort.hybrid import VARIANTS, Algorithm, SortVariant

log = logging.getLogger(__name__)

DEFAULT_SIZES = (10_000, 25_000, 50_000, 100_000, 250_000, 500_000, 1_000_000)
DEFAULT_MIN_TIME_NS = 500_000_000
MAX_ITERATIONS = 1 << 20
CLASSIC_NAME = "Classic"


class PairingError(ValueError):
    """Two records that cannot be compared were paired."""


class MeasurementError(ValueError):
    """A timing is unusable, e.g. a zero mean."""


class ConfigurationError(ValueError):
    """A campaign was set up without the baselines it needs."""


@dataclass(frozen=True)
class BenchmarkRecord:
    algorithm: Algorithm
    config_name: str
    distribution: Kind
    size: int
    iterations: int
    mean_time: float
    total_time: int
    wall_mean_time: float = 0.0
    wall_total_time: int = 0
    clock: str = "cpu"
    warning: str = ""

    @property
    def key(self) -> tuple:
        return (self.algorithm, self.distribution, self.size)


@dataclass(frozen=True)
class SpeedupRecord:
    algorithm: Algorithm
    config_name: str
    distribution: Kind
    size: int
    speedup: float


def run_benchmark(variant: SortVariant, spec: GenSpec,
                  min_total_time: int = DEFAULT_MIN_TIME_NS,
                  max_iterations: int = MAX_ITERATIONS) -> BenchmarkRecord:
    """Time ``variant`` on the input described by ``spec``.

    The iteration count doubles until a batch accumulates at least
    ``min_total_time`` ns of CPU time; the last batch is reported.  Each
    iteration sorts a fresh copy of the generated input and only the sort
    call sits between the clock reads.  One untimed warm-up sort runs first.
    The cyclic garbage collector is paused while batches run.
    """
    if min_total_time <= 0:
        raise ValueError(f"min_total_time must be positive, got {min_total_time}")
    source = generate(spec)
    sort = variant.sort

    sort(list(source))
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        n, cpu_total, wall_total, warning = _scale(sort, source, min_total_time, max_iterations)
    finally:
        if gc_was_enabled:
            gc.enable()
    if warning:
        log.warning("%s on %s/%d: %s", variant.name, spec.distribution, spec.size, warning)

    clock = "cpu"
    total = cpu_total
    if cpu_total == 0:
        clock = "wall"
        total = wall_total
    return BenchmarkRecord(
        algorithm=variant.algorithm,
        config_name=variant.config.name,
        distribution=spec.distribution.kind,
        size=spec.size,
        iterations=n,
        mean_time=total / n,
        total_time=total,
        wall_mean_time=wall_total / n,
        wall_total_time=wall_total,
        clock=clock,
        warning=warning,
    )


def _scale(sort, source, min_total_time, max_iterations):
    cpu = time.process_time_ns
    wall = time.perf_counter_ns
    n = 1
    while True:
        cpu_total = 0
        wall_total = 0
        for _ in range(n):
            buf = list(source)
            c0 = cpu()
            w0 = wall()
            sort(buf)
            w1 = wall()
            c1 = cpu()
            cpu_total += c1 - c0
            wall_total += w1 - w0
        if cpu_total >= min_total_time or wall_total >= min_total_time:
            return n, cpu_total, wall_total, ""
        if n * 2 > max_iterations:
            return n, cpu_total, wall_total, "iteration cap reached before min_total_time"
        n *= 2


def compute_speedup(classical: BenchmarkRecord, optimized: BenchmarkRecord) -> SpeedupRecord:
    if classical.config_name != CLASSIC_NAME:
        raise PairingError(f"baseline must be {CLASSIC_NAME}, got {classical.config_name}")
    if classical.key != optimized.key:
        raise PairingError(
            f"cannot pair {classical.algorithm}/{classical.distribution}/{classical.size} "
            f"with {optimized.algorithm}/{optimized.distribution}/{optimized.size}")
    if optimized.mean_time <= 0:
        raise MeasurementError(f"{optimized.config_name} has non-positive mean time")
    return SpeedupRecord(optimized.algorithm, optimized.config_name, optimized.distribution,
                         optimized.size, classical.mean_time / optimized.mean_time)


@dataclass
class Campaign:
    records: list[BenchmarkRecord]
    speedups: list[SpeedupRecord]


Runner = Callable[[SortVariant, GenSpec, int], BenchmarkRecord]


def run_campaign(sizes: Iterable[int] = DEFAULT_SIZES,
                 distributions: Iterable[Distribution] = DISTRIBUTIONS,
                 variants: Sequence[SortVariant] = VARIANTS,
                 seed: int = 42,
                 min_total_time: int = DEFAULT_MIN_TIME_NS,
                 runner: Runner = run_benchmark,
                 progress: Callable[[int, int, SortVariant, GenSpec], None] | None = None,
                 ) -> Campaign:
    """Measure sizes x distributions x variants, size-major, then pair with baselines.

    Every variant of one (size, distribution) cell sorts the same input.
    """
    sizes = list(sizes)
    distributions = list(distributions)
    variants = list(variants)
    algorithms = {v.algorithm for v in variants}
    missing = [a for a in algorithms
               if not any(v.algorithm is a and v.config.name == CLASSIC_NAME for v in variants)]
    if missing:
        names = ", ".join(sorted(a.value for a in missing))
        raise ConfigurationError(f"no {CLASSIC_NAME} baseline for {names}")

    total = len(sizes) * len(distributions) * len(variants)
    records: list[BenchmarkRecord] = []
    speedups: list[SpeedupRecord] = []
    done = 0
    for size in sizes:
        for dist in distributions:
            spec = GenSpec(size, dist, seed)
            cell: list[BenchmarkRecord] = []
            for variant in variants:
                if progress is not None:
                    progress(done, total, variant, spec)
                cell.append(runner(variant, spec, min_total_time))
                done += 1
            records.extend(cell)
            baselines = {r.algorithm: r for r in cell if r.config_name == CLASSIC_NAME}
            speedups.extend(compute_speedup(baselines[r.algorithm], r)
                            for r in cell if r.config_name != CLASSIC_NAME)
    return Campaign(records, speedups)
