#!/usr/bin/env python3
"""Regenerate the bundled OEIS b-files.

Every sequence is computed here from a source that is independent of the
package's enumeration code, so the fixtures act as a second route in the
acceptance checks:

  A000110  Bell triangle recurrence
  A000670  binomial convolution a(n) = sum C(n,k) a(n-k)
  A022493  coefficients of sum_n prod_{k<=n} (1 - (1-t)^k)
  A137251  dynamic program over (ascent count, last letter) for 0-based
           ascent sequences; ascents are preserved by the value-bumping
           that turns them into modified ascent sequences
  A005493  first differences of the Bell numbers
  A259691  h(n+1, k) = k * sum_{j>=k} h(n, j), h(n, n) = 1

The only exception is A202062 (counts of modified ascent sequences
avoiding 2312 and 3412, an open enumeration): no independent recurrence
is known, so the file is produced by this package's own generator and is
marked exploratory in its header.
"""
from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "fishburn" / "fixtures"


def bell_numbers(n_max: int) -> list[int]:
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        row = [prev[-1]]
        for value in prev:
            row.append(row[-1] + value)
        rows.append(row)
    return [row[0] for row in rows]


def fubini_numbers(n_max: int) -> list[int]:
    from math import comb

    out = [1]
    for n in range(1, n_max + 1):
        out.append(sum(comb(n, k) * out[n - k] for k in range(1, n + 1)))
    return out


def fishburn_numbers(n_max: int) -> list[int]:
    # truncated polynomial arithmetic on the product generating function
    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (n_max + 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if i + j <= n_max:
                        out[i + j] += ai * bj
        return out

    total = [0] * (n_max + 1)
    term = [1] + [0] * n_max
    total[0] += 1
    for k in range(1, n_max + 1):
        # factor 1 - (1-t)^k
        one_minus_t = [1, -1] + [0] * (n_max - 1)
        power = [1] + [0] * n_max
        for _ in range(k):
            power = mul(power, one_minus_t)
        factor = [-v for v in power]
        factor[0] += 1
        term = mul(term, factor)
        for i, v in enumerate(term):
            total[i] += v
    return total


def ascent_triangle(n_max: int) -> list[list[int]]:
    # T(n, m) = number of 0-based ascent sequences of length n with m-1
    # ascents; states are (ascent count, last letter)
    rows = []
    states: Counter = Counter({(0, 0): 1})
    rows.append([1])
    for n in range(2, n_max + 1):
        nxt: Counter = Counter()
        for (asc, last), count in states.items():
            for letter in range(asc + 2):
                if letter > last:
                    nxt[(asc + 1, letter)] += count
                else:
                    nxt[(asc, letter)] += count
        states = nxt
        by_asc: Counter = Counter()
        for (asc, _), count in states.items():
            by_asc[asc] += count
        rows.append([by_asc.get(m - 1, 0) for m in range(1, n + 1)])
    return rows


def prefix_triangle(n_max: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, n_max):
        prev = dict(enumerate(rows[-1], start=1))
        row = [k * sum(prev.get(j, 0) for j in range(k, n + 1)) for k in range(1, n + 1)]
        row.append(1)
        rows.append(row)
    return rows


def write_bfile(name: str, values: list[int], offset: int, note: str) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    path = FIXTURES / f"b{name[1:]}.txt"
    lines = [f"# {name} offset {offset}; {note}; generated by scripts/make_fixtures.py"]
    lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(values)} terms)")


def main() -> int:
    bell = bell_numbers(15)
    write_bfile("A000110", bell, 0, "Bell numbers")
    write_bfile("A000670", fubini_numbers(12), 0, "Fubini numbers")
    write_bfile("A022493", fishburn_numbers(12), 0, "Fishburn numbers")
    write_bfile("A005493", [bell[n + 2] - bell[n + 1] for n in range(13)], 0,
                "2-Bell numbers (first differences of Bell)")
    flat_f = [v for row in ascent_triangle(10) for v in row]
    write_bfile("A137251", flat_f, 1, "ascent-count triangle, rows flattened")
    flat_h = [v for row in prefix_triangle(12) for v in row]
    write_bfile("A259691", flat_h, 1, "increasing-prefix triangle, rows flattened")

    from fishburn.enumeration import gen_modasc_avoiding

    counts = [sum(1 for _ in gen_modasc_avoiding(((2, 3, 1, 2), (3, 4, 1, 2)), n))
              for n in range(1, 10)]
    write_bfile("A202062", counts, 1,
                "EXPLORATORY: counts of {2312, 3412}-avoiding modified ascent "
                "sequences from this package's generator, no independent source")
    return 0


if __name__ == "__main__":
    sys.exit(main())
