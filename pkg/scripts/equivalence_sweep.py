#!/usr/bin/env python3
"""Seeded sweep comparing the property oracles on random small codes.

Prints, per suite, how many codes were drawn, how many satisfied the property
and how many disagreements were seen.  Identical seeds give identical output.
"""

import argparse
import random

from smippc.code import Code
from smippc.verify import (
    check_pairwise_shortened, has_forbidden_type_iv, is_mippc, is_separable, is_smippc,
)


def random_code(rng, n, max_q, max_m):
    q = rng.randint(2, max_q)
    space = [tuple((k // q ** i) % q for i in range(n)) for k in range(q ** n)]
    return Code(n, q, tuple(rng.sample(space, rng.randint(2, min(max_m, len(space))))))


SUITES = {
    "len2-t2": (2, 5, lambda c: (is_smippc(c, 2).holds, is_separable(c, 2).holds, is_mippc(c, 2).holds)),
    "len2-t3": (2, 5, lambda c: (is_smippc(c, 3).holds, is_mippc(c, 3).holds)),
    "len3-pairwise": (3, 4, lambda c: (is_separable(c, 2).holds, check_pairwise_shortened(c).holds)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-m", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for name, (n, max_q, check) in SUITES.items():
        holds = bad = 0
        for _ in range(args.count):
            verdicts = check(random_code(rng, n, max_q, args.max_m))
            holds += verdicts[0]
            bad += len(set(verdicts)) != 1
        print(f"{name:14s} drawn={args.count} holds={holds} disagreements={bad}")
    holds = bad = seen = 0
    while seen < args.count:
        code = random_code(rng, 3, 4, args.max_m)
        if not is_separable(code, 2).holds:
            continue
        seen += 1
        a, b = is_smippc(code, 2).holds, has_forbidden_type_iv(code).holds
        holds += a
        bad += a != b
    print(f"{'len3-type4':14s} drawn={seen} holds={holds} disagreements={bad}")


if __name__ == "__main__":
    main()
