"""Pool-size sweeps over the Fibonacci, Quicksort and Mergesort nets.

    python -m inets.bench --system fib --n 25 --pools 1,2,4 --reps 20 --out fib.csv

For every pool size: one discarded warm-up run, then ``--reps`` timed
runs.  Only the reduction is timed (net construction is not).  Every run
is checked against the reference oracle before its time is accepted.
"""
from __future__ import annotations

import argparse
import csv
import logging
import random
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .dot import to_dot
from .net import Net
from .reference import fib_oracle, sort_oracle
from .rules import InteractionStats, ParallelEngine
from .scheduler import create_pool
from .systems import DEFAULT_CUTOFF, build_fib, build_mergesort, build_quicksort

log = logging.getLogger(__name__)

SYSTEMS = ("fib", "qsort", "msort")
DEFAULT_POOLS = (1, 2, 4, 8)
DEFAULT_REPS = 100
DEFAULT_SEED = 42
CSV_HEADER = ("system", "input", "pool_size", "mean_ms", "stddev_ms", "speedup")


class CorrectnessFault(RuntimeError):
    """A timed run produced a wrong answer."""


@dataclass
class BenchConfig:
    system: str
    n: int | None = None
    length: int | None = None
    seed: int = DEFAULT_SEED
    pool_sizes: list[int] = field(default_factory=lambda: list(DEFAULT_POOLS))
    repetitions: int = DEFAULT_REPS
    cutoff: int = DEFAULT_CUTOFF
    out: str | None = None
    dot: str | None = None
    stats: bool = False

    @property
    def input(self) -> int:
        return self.n if self.system == "fib" else self.length  # type: ignore[return-value]


@dataclass
class BenchRow:
    system: str
    input: int
    pool_size: int
    mean_ms: float
    stddev_ms: float
    speedup: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    stats: InteractionStats | None = None


def _pool_list(text: str) -> list[int]:
    try:
        pools = [int(p, 10) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}") from None
    if any(p < 1 for p in pools):
        raise argparse.ArgumentTypeError("pool sizes must be >= 1")
    if len(set(pools)) != len(pools):
        raise argparse.ArgumentTypeError("pool sizes must be distinct")
    return pools


def _positive(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="inets-bench", description=__doc__.split("\n\n")[0])
    p.add_argument("--system", required=True, choices=SYSTEMS)
    p.add_argument("--n", type=_natural, help="Fibonacci argument (fib)")
    p.add_argument("--len", dest="length", type=_natural, help="list length (qsort, msort)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="PRNG seed for the list")
    p.add_argument("--pools", dest="pool_sizes", type=_pool_list, default=list(DEFAULT_POOLS),
                   help="comma separated pool sizes (default 1,2,4,8)")
    p.add_argument("--reps", dest="repetitions", type=_positive, default=DEFAULT_REPS)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF,
                   help="fib arguments up to this value are computed sequentially")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--dot", help="write the initial net as Graphviz DOT to this path")
    p.add_argument("--stats", action="store_true", help="print per-rule interaction counts to stderr")
    return p


def parse_args(argv: Sequence[str] | None = None) -> BenchConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.system == "fib" and ns.n is None:
        parser.error("--system fib needs --n")
    if ns.system != "fib" and ns.length is None:
        parser.error(f"--system {ns.system} needs --len")
    return BenchConfig(**vars(ns))


def random_list(length: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randint(-1_000_000, 1_000_000) for _ in range(length)]


def workload(cfg: BenchConfig) -> tuple[Callable[[], Net], Any]:
    """Net factory and expected result for a config."""
    if cfg.system == "fib":
        n, cutoff = cfg.n, cfg.cutoff
        return (lambda: build_fib(n, cutoff)), fib_oracle(n)  # type: ignore[arg-type]
    xs = random_list(cfg.length, cfg.seed)  # type: ignore[arg-type]
    build = build_quicksort if cfg.system == "qsort" else build_mergesort
    return (lambda: build(xs)), sort_oracle(xs)


def run_benchmark(cfg: BenchConfig) -> BenchReport:
    build, expected = workload(cfg)
    means: dict[int, tuple[float, float]] = {}
    stats: InteractionStats | None = None
    for k in cfg.pool_sizes:
        times = []
        with create_pool(k) as pool:
            for rep in range(cfg.repetitions + 1):
                net = build()
                engine = ParallelEngine(pool)
                t0 = time.perf_counter()
                (got,) = engine.run(net)
                elapsed = time.perf_counter() - t0
                if got != expected:
                    raise CorrectnessFault(f"{cfg.system}({cfg.input}) on pool {k}: wrong result")
                run_stats = engine.stats
                if stats is None:
                    stats = run_stats
                elif run_stats != stats:
                    raise CorrectnessFault(f"{cfg.system}({cfg.input}) on pool {k}: interaction counts differ")
                if rep:  # rep 0 is the warm-up
                    times.append(elapsed * 1000.0)
        sd = statistics.stdev(times) if len(times) > 1 else 0.0
        means[k] = (statistics.fmean(times), sd)
        log.info("%s(%s) pool=%d mean=%.3fms sd=%.3fms", cfg.system, cfg.input, k, *means[k])
    # Speed-up is relative to pool size 1, or the smallest pool when 1 is not swept.
    base = means[1][0] if 1 in means else means[min(means)][0]
    report = BenchReport(stats=stats)
    for k in sorted(means):
        mean, sd = means[k]
        speedup = 1.0 if k == 1 else (base / mean if mean > 0 else float("inf"))
        report.rows.append(BenchRow(cfg.system, cfg.input, k, mean, sd, speedup))
    return report


def write_csv(report: BenchReport, path: str | None) -> None:
    """Write the report; ``None`` or ``-`` means stdout."""
    rows = sorted(report.rows, key=lambda r: r.pool_size)

    def emit(fh: Any) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow([r.system, r.input, r.pool_size, repr(r.mean_ms), repr(r.stddev_ms), repr(r.speedup)])

    if path is None or path == "-":
        emit(sys.stdout)
    else:
        with open(path, "w", newline="") as fh:
            emit(fh)


def read_csv(path: str) -> list[BenchRow]:
    with open(path, newline="") as fh:
        return [
            BenchRow(r["system"], int(r["input"]), int(r["pool_size"]),
                     float(r["mean_ms"]), float(r["stddev_ms"]), float(r["speedup"]))
            for r in csv.DictReader(fh)
        ]


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    cfg = parse_args(argv)
    if cfg.dot:
        build, _ = workload(cfg)
        net = build()
        with open(cfg.dot, "w") as fh:
            fh.write(to_dot(net.pairs, net.interface))
    try:
        report = run_benchmark(cfg)
    except CorrectnessFault as exc:
        print(f"inets-bench: {exc}", file=sys.stderr)
        return 3
    write_csv(report, cfg.out)
    if cfg.stats and report.stats is not None:
        sys.stderr.write(report.stats.dump())
    return 0


if __name__ == "__main__":
    sys.exit(main())
