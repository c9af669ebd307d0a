#!/usr/bin/env python3
"""Run the oracle on constructions whose sufficient screen fails.

Covers the bespoke q=6 and q=8 codes and the q=13 orbit code with A1 = {1..6}.
The screens give no verdict for these, so the oracle's answer is printed as is.
"""

from smippc.construct import (
    build_mod6_code, check_mod6_conditions, check_spec_screen, construct_optimal, select_parameters,
)
from smippc.verify import is_separable, is_smippc


def report(label, code, screen):
    print(f"{label}: M={code.M} screen={screen.reason or 'pass'}")
    print(f"  {is_separable(code, 2).summary()}")
    print(f"  {is_smippc(code, 2).summary()}")


def main():
    for q in (6, 8):
        report(f"q={q} bespoke", construct_optimal(q), check_spec_screen(select_parameters(q)))
    A1 = range(1, 7)
    report("q=13 A1=1..6", build_mod6_code(13, A1), check_mod6_conditions(13, A1))


if __name__ == "__main__":
    main()
