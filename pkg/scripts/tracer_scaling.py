#!/usr/bin/env python3
"""Wall-clock comparison of the binary tracers on composed codes (informative only)."""

import argparse
import random
import time

from smippc.code import desc
from smippc.construct import compose_to_binary, construct_optimal
from smippc.trace import trace_mippc, trace_ssc


def time_per_call(fn, patterns):
    start = time.perf_counter()
    for r in patterns:
        fn(r)
    return (time.perf_counter() - start) / len(patterns)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[5, 6, 7, 8, 11, 13])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'q':>3} {'n':>4} {'M':>5} {'ssc_us':>9} {'mippc_us':>9}")
    for q in args.q:
        binary = compose_to_binary(construct_optimal(q))
        patterns = [desc(binary, rng.sample(range(binary.M), 2)) for _ in range(args.samples)]
        ssc = time_per_call(lambda r: trace_ssc(binary, r, 2), patterns)
        mip = time_per_call(lambda r: trace_mippc(binary, r, 2), patterns)
        print(f"{q:>3} {binary.n:>4} {binary.M:>5} {ssc * 1e6:>9.1f} {mip * 1e6:>9.1f}")


if __name__ == "__main__":
    main()
