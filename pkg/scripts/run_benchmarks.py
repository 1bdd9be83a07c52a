#!/usr/bin/env python3
"""Timing experiments comparing the determinant kernels.

Produces one CSV per experiment grid:

* table1: the all-ones family (zero second pivot) at large n, all kernels
* table2: the factorial-growth family at moderate n
* table3: the d=(1,2,...,2,1) family where symbolic pivots are slowest

Absolute seconds are machine-dependent; the interesting outputs are the
per-n orderings and the linear growth of the numeric kernels.
"""

import argparse
from pathlib import Path

from tridet import Algorithm, Family
from tridet.bench import emit_csv, run_bench

GRIDS = {
    "table1": (Family.EX33, [10_000, 20_000, 30_000, 40_000, 50_000, 100_000]),
    "table2": (Family.EX34, [1000, 1500, 2000, 2500, 3000]),
    "table3": (Family.EX35, [1000, 1500, 2000, 2500, 3000]),
}
ALGS = [Algorithm.DETGTRI, Algorithm.THREE_TERM, Algorithm.HYBRID, Algorithm.HYBRID_SCALED]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grids", default="table1,table2,table3")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--warmup", type=int, default=2)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    ap.add_argument("--skip-detgtri", action="store_true", help="numeric kernels only")
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    algs = [a for a in ALGS if not (args.skip_detgtri and a is Algorithm.DETGTRI)]
    for grid in args.grids.split(","):
        family, sizes = GRIDS[grid]
        plan = [(family, n, alg) for n in sizes for alg in algs]
        records = run_bench(plan, trials=args.trials, warmup=args.warmup)
        for r in records:
            print(
                f"{grid} {r.family.value} n={r.n} {r.algorithm.value}: "
                f"median={r.median_seconds:.6f}s sign={r.result_sign}"
            )
        out = args.outdir / f"{grid}.csv"
        emit_csv(records, out)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
