"""Run the benchmark harness over all three systems and write one CSV each.

    python scripts/pool_sweep.py --outdir results --reps 20

Defaults mirror the harness (pools 1,2,4,8; 100 reps).  Inputs are kept
small enough for a laptop; raise them with --fib-n / --len.
"""
import argparse
import logging
import os
import sys

from inets.bench import DEFAULT_POOLS, DEFAULT_REPS, DEFAULT_SEED, BenchConfig, run_benchmark, write_csv


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--outdir", default="results")
    p.add_argument("--fib-n", type=int, default=25)
    p.add_argument("--len", dest="length", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--reps", type=int, default=DEFAULT_REPS)
    p.add_argument("--pools", default=",".join(map(str, DEFAULT_POOLS)))
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(message)s")

    pools = [int(k) for k in args.pools.split(",")]
    os.makedirs(args.outdir, exist_ok=True)
    configs = [
        BenchConfig("fib", n=args.fib_n, pool_sizes=pools, repetitions=args.reps),
        BenchConfig("qsort", length=args.length, seed=args.seed, pool_sizes=pools, repetitions=args.reps),
        BenchConfig("msort", length=args.length, seed=args.seed, pool_sizes=pools, repetitions=args.reps),
    ]
    for cfg in configs:
        report = run_benchmark(cfg)
        path = os.path.join(args.outdir, f"{cfg.system}_{cfg.input}.csv")
        write_csv(report, path)
        for row in report.rows:
            print(f"{row.system:6} input={row.input:<6} pool={row.pool_size} "
                  f"mean={row.mean_ms:9.3f}ms sd={row.stddev_ms:8.3f} speedup={row.speedup:.2f}")
        print(f"-> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
