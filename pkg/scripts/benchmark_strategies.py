#!/usr/bin/env python3
"""Time every (kind, strategy) build route and summarise growth.

A thin driver over the library used for strategy comparisons; the
partition-transform route is capped separately because partition counts
explode well before the arithmetic does.
"""

from __future__ import annotations

import argparse
import time

from wardtri import triangles
from wardtri.triangles import Kind, Strategy


def bench_one(kind: Kind, strategy: Strategy, rows: int) -> tuple[float, int]:
    triangles.clear_caches()
    start = time.perf_counter()
    tri = triangles.triangle(kind, rows, strategy)
    elapsed = time.perf_counter() - start
    max_bits = max(v.bit_length() for row in tri.rows for v in row)
    return elapsed, max_bits


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=120)
    parser.add_argument("--transform-rows", type=int, default=24,
                        help="row cap for the partition-transform route")
    args = parser.parse_args()

    print(f"{'kind':<20} {'strategy':<20} {'rows':>5} {'max_bits':>9} {'seconds':>9}")
    for kind in Kind:
        for strategy in sorted(triangles.supported_strategies(kind), key=lambda s: s.value):
            rows = (
                args.transform_rows
                if strategy is Strategy.PARTITION_TRANSFORM
                else args.rows
            )
            elapsed, max_bits = bench_one(kind, strategy, rows)
            print(
                f"{kind.value:<20} {strategy.value:<20} {rows:>5} "
                f"{max_bits:>9} {elapsed:>9.3f}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
