#!/usr/bin/env python3
"""Numerical exploration of an open question: is the label transpose,
restricted to 2213-avoiding modified ascent sequences, a bijection onto
the restricted growth functions?

No proof is known.  This script checks injectivity and surjectivity size
by size, prints the collision pairs over the whole family for contrast,
and exits 0 either way (the result is a report, not a regression).

Usage: python scripts/psi_2213_experiment.py [n_max]
"""
from __future__ import annotations

import sys
from collections import defaultdict

from fishburn import format_word, gen_modasc, gen_modasc_avoiding, gen_rgf, to_rgf


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    for n in range(n_max + 1):
        avoiders = list(gen_modasc_avoiding(((2, 2, 1, 3),), n))
        image = [to_rgf(x) for x in avoiders]
        injective = len(set(image)) == len(image)
        onto = set(image) == set(gen_rgf(n))
        print(f"n={n}: |avoiders|={len(avoiders)}, injective={injective}, onto={onto}")

    print("\ncollisions over the full family:")
    for n in range(min(n_max, 7) + 1):
        fibers: dict = defaultdict(list)
        for x in gen_modasc(n):
            fibers[to_rgf(x)].append(x)
        pairs = {r: xs for r, xs in fibers.items() if len(xs) > 1}
        print(f"n={n}: {len(pairs)} colliding images")
        if n <= 6:
            for r, xs in sorted(pairs.items()):
                words = ", ".join(format_word(x) for x in xs)
                print(f"  {format_word(r)} <- {words}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
