"""Command-line entry point: run a benchmark campaign and write CSV and/or tables."""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from netsort.bench import (
    DEFAULT_SIZES,
    BenchmarkRecord,
    Campaign,
    SpeedupRecord,
    run_campaign,
)
from netsort.datagen import Distribution, GenSpec, Kind
from netsort.hybrid import CONFIGS, Algorithm, SortVariant, get_config, variants

CSV_HEADER = ("algorithm", "config", "distribution", "size", "iterations",
              "mean_ns", "total_ns", "speedup")

# (algorithm, config, distribution, size) -> published reference band
REFERENCE_CELLS = {
    (Algorithm.MERGE_SORT, "6To8", Kind.RANDOM, 100_000): "~1.5-2.0x",
    (Algorithm.MERGE_SORT, "3To8", Kind.SORTED, 25_000): "~2.4x",
    (Algorithm.QUICK_SORT, "3To5", Kind.SORTED, 10_000): "~1.5x",
}


@dataclass
class CliConfig:
    sizes: list[int]
    distributions: list[Kind]
    configs: list[str]
    algorithms: list[Algorithm]
    seed: int = 42
    min_time: float = 500.0
    output_path: str = "results.csv"
    format: str = "both"

    def variants(self) -> list[SortVariant]:
        return variants(self.algorithms, [CONFIGS[name] for name in self.configs])


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(part.replace("_", "")) for part in _split(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed size list {text!r}") from None
    if not sizes or any(s < 0 for s in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be non-negative integers: {text!r}")
    return sizes


def _dists(text: str) -> list[Kind]:
    try:
        return [Kind.parse(part) for part in _split(text)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _configs(text: str) -> list[str]:
    try:
        return [get_config(part).name for part in _split(text)]
    except KeyError as exc:
        raise argparse.ArgumentTypeError(exc.args[0]) from None


_ALGO_ALIASES = {"mergesort": Algorithm.MERGE_SORT, "merge": Algorithm.MERGE_SORT,
                 "ms": Algorithm.MERGE_SORT, "quicksort": Algorithm.QUICK_SORT,
                 "quick": Algorithm.QUICK_SORT, "qs": Algorithm.QUICK_SORT}


def _algos(text: str) -> list[Algorithm]:
    out = []
    for part in _split(text):
        try:
            out.append(_ALGO_ALIASES[part.lower()])
        except KeyError:
            raise argparse.ArgumentTypeError(
                f"unknown algorithm {part!r}; expected MergeSort or QuickSort") from None
    return out


def _seed(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed seed {text!r}") from None


def _positive_ms(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed time {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("--min-time-ms must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="netsort-bench",
        description="Benchmark Merge Sort and Quick Sort with sorting-network base cases.")
    p.add_argument("--sizes", type=_sizes, default=list(DEFAULT_SIZES),
                   help="comma-separated array sizes (default: 10000..1000000 grid)")
    p.add_argument("--dist", type=_dists, default=list(Kind),
                   help="comma-separated distributions: random, sorted, nearly-sorted")
    p.add_argument("--configs", type=_configs, default=list(CONFIGS),
                   help="comma-separated configurations, e.g. Classic,6To8 (default: all)")
    p.add_argument("--algos", type=_algos, default=list(Algorithm),
                   help="comma-separated algorithms: MergeSort, QuickSort (default: both)")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--min-time-ms", type=_positive_ms, default=500.0,
                   help="minimum measured time per benchmark cell in ms (default: 500)")
    p.add_argument("--out", default="results.csv", help="CSV output path")
    p.add_argument("--format", choices=("csv", "summary", "both"), default="both")
    return p


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(sizes=ns.sizes, distributions=ns.dist, configs=ns.configs,
                     algorithms=ns.algos, seed=ns.seed, min_time=ns.min_time_ms,
                     output_path=ns.out, format=ns.format)


def _speedup_lookup(speedups: Iterable[SpeedupRecord]) -> dict:
    return {(s.algorithm, s.config_name, s.distribution, s.size): s.speedup for s in speedups}


def write_csv(records: Sequence[BenchmarkRecord], speedups: Sequence[SpeedupRecord],
              stream: TextIO) -> None:
    lookup = _speedup_lookup(speedups)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        if r.config_name == "Classic":
            speedup = 1.0
        else:
            speedup = lookup.get((r.algorithm, r.config_name, r.distribution, r.size))
        writer.writerow([
            r.algorithm.value, r.config_name, r.distribution.value, r.size, r.iterations,
            f"{r.mean_time:.3f}", r.total_time,
            "" if speedup is None else f"{speedup:.4f}",
        ])


def emit_csv(records: Sequence[BenchmarkRecord], speedups: Sequence[SpeedupRecord],
             path: str | os.PathLike) -> None:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            write_csv(records, speedups, fh)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {os.fspath(path)}: {exc.strerror or exc}") from exc


def emit_summary(speedups: Sequence[SpeedupRecord]) -> str:
    """Render one size-by-config speedup table per (algorithm, distribution)."""
    lookup = _speedup_lookup(speedups)
    groups: dict[tuple, None] = {}
    for s in speedups:
        groups.setdefault((s.algorithm, s.distribution), None)
    order = {name: i for i, name in enumerate(CONFIGS)}

    blocks = []
    for alg, dist in groups:
        rows = [s for s in speedups if s.algorithm is alg and s.distribution is dist]
        sizes = sorted({s.size for s in rows})
        configs = sorted({s.config_name for s in rows}, key=lambda c: (order.get(c, len(order)), c))
        header = ["size"] + configs
        body = []
        for size in sizes:
            cells = [str(size)]
            for cfg in configs:
                value = lookup.get((alg, cfg, dist, size))
                cells.append("-" if value is None else f"{value:.2f}")
            body.append(cells)
        widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
        lines = [f"{alg.value} speedup, {dist.value} arrays"]
        lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        lines.append("  ".join("-" * w for w in widths))
        lines.extend("  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in body)
        blocks.append("\n".join(lines))

    notes = []
    for (alg, cfg, dist, size), band in REFERENCE_CELLS.items():
        value = lookup.get((alg, cfg, dist, size))
        if value is not None:
            notes.append(f"  {alg.value} {cfg} {dist.value} n={size}: "
                         f"{value:.2f}x measured, {band} published reference")
    if notes:
        blocks.append("Reference cells\n" + "\n".join(notes))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def _progress(done: int, total: int, variant: SortVariant, spec: GenSpec) -> None:
    print(f"[{done + 1}/{total}] {variant.name} {spec.distribution} n={spec.size}",
          file=sys.stderr, flush=True)


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(argv)
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s: %(message)s")
    try:
        campaign: Campaign = run_campaign(
            sizes=cfg.sizes,
            distributions=[Distribution(k) for k in cfg.distributions],
            variants=cfg.variants(),
            seed=cfg.seed,
            min_total_time=max(1, round(cfg.min_time * 1_000_000)),
            progress=_progress,
        )
        if cfg.format in ("csv", "both"):
            emit_csv(campaign.records, campaign.speedups, cfg.output_path)
            print(f"wrote {len(campaign.records)} rows to {cfg.output_path}", file=sys.stderr)
    except (ValueError, OSError) as exc:
        print(f"netsort-bench: error: {exc}", file=sys.stderr)
        return 1
    if cfg.format in ("summary", "both"):
        sys.stdout.write(emit_summary(campaign.speedups))
    return 0


if __name__ == "__main__":
    sys.exit(main())
