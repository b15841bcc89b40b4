"""Exhaustive generators and reference counts.

Modified ascent sequences are grown by the append/bump recursion: append
a letter at most the last one, or append a strict ascent top and bump
every letter at least as large.  Bumping preserves the relative order of
the old letters, so pattern containment survives it; the avoiding
generator prunes the same tree and only tests occurrences that end at the
new letter.  The other families (Cayley words, restricted growth
functions, permutations, weakly increasing words, Fishburn permutations)
are generated in lexicographic order.

Counting utilities cover Bell and Stirling numbers, Fubini numbers, the
max-value triangle of modified ascent sequences, the unique-maximum
sequence, and the prefix-statistic / copies-of-1 triangles.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .burge import to_fishburn
from .config import DEFAULT_BUDGETS, Budgets
from .errors import BudgetError, DomainError, InternalError, ValidationError
from .patterns import (
    BivincularPattern,
    ClassicalPattern,
    Pattern,
    REGISTRY,
    contains_bivincular,
    contains_classical_anchored,
)
from .words import (
    Word,
    is_modasc,
    max_multiplicity,
    max_value,
    ones_count,
    rgf_prefix_stat,
)

FAMILY_NAMES = ("modasc", "cayley", "rgf", "sym", "wi", "fishburn")


def _check_budget(n: int, cap: int, family: str) -> None:
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    if n > cap:
        raise BudgetError(
            f"{family} generation at size {n} exceeds the cap {cap}; "
            f"override with --budget (memory grows exponentially)")


# ---------------------------------------------------------------------------
# modified ascent sequences


def modasc_children(x: Word) -> Iterator[Word]:
    """The max(x)+1 one-letter extensions, appended letter ascending."""
    m = max(x)
    last = x[-1]
    for a in range(1, m + 2):
        if a <= last:
            yield x + (a,)
        else:
            yield tuple(v + 1 if v >= a else v for v in x) + (a,)


def gen_modasc(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """All modified ascent sequences of length ``n``, each certified, in
    the order induced by the append/bump recursion."""
    _check_budget(n, budgets.modasc_max, "Modasc")

    def walk(x: Word) -> Iterator[Word]:
        if len(x) == n:
            if not is_modasc(x):
                raise InternalError(f"generator produced a non-member: {x}")
            yield x
            return
        for child in modasc_children(x):
            yield from walk(child)

    if n == 0:
        return iter([()])
    return walk((1,))


def gen_modasc_avoiding(patterns: Iterable[Pattern | Word], n: int, *,
                        budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Modified ascent sequences of length ``n`` avoiding every classical
    pattern, by pruning the append/bump tree.  A branch is cut as soon as
    an occurrence ending at the newest letter appears; older occurrences
    are impossible because bumping preserves relative order."""
    _check_budget(n, budgets.modasc_max, "Modasc")
    bodies: list[Word] = []
    for y in patterns:
        if isinstance(y, BivincularPattern):
            raise ValidationError("bivincular patterns need a permutation family")
        bodies.append(y.body if isinstance(y, ClassicalPattern) else tuple(y))

    if any(len(b) == 0 for b in bodies):
        return iter(())  # the empty pattern occurs in every word
    if n == 0:
        return iter([()])

    def walk(x: Word) -> Iterator[Word]:
        if len(x) == n:
            yield x
            return
        for child in modasc_children(x):
            if any(contains_classical_anchored(child, b) for b in bodies):
                continue
            yield from walk(child)

    seed = (1,)
    if any(contains_classical_anchored(seed, b) for b in bodies):
        return iter(())
    return walk(seed)


# ---------------------------------------------------------------------------
# lexicographic family generators


def gen_rgf(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Restricted growth functions of length ``n`` in lexicographic order."""
    _check_budget(n, budgets.modasc_max, "RGF")

    def walk(prefix: list[int], running: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for a in range(1, running + 2):
            prefix.append(a)
            yield from walk(prefix, max(running, a))
            prefix.pop()

    if n == 0:
        return iter([()])
    return walk([1], 1)


def gen_wi(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Weakly increasing Cayley words of length ``n``, lexicographic."""
    _check_budget(n, budgets.modasc_max, "WI")

    def walk(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for a in (last, last + 1):
            prefix.append(a)
            yield from walk(prefix)
            prefix.pop()

    if n == 0:
        return iter([()])
    return walk([1])


def gen_cayley(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Cayley permutations of length ``n`` in lexicographic order.

    A prefix is viable iff the count of values missing below its maximum
    fits into the remaining slots.
    """
    _check_budget(n, budgets.cayley_max, "Cayley")

    def walk(prefix: list[int], present: set[int], top: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        rem = n - len(prefix) - 1
        missing = top - len(present)
        for a in range(1, n + 1):
            if a <= top:
                need = missing - (a not in present)
            else:
                need = missing + (a - top - 1)
            if need <= rem:
                prefix.append(a)
                added = a not in present
                present.add(a)
                yield from walk(prefix, present, max(top, a))
                prefix.pop()
                if added:
                    present.discard(a)

    if n == 0:
        return iter([()])
    return walk([], set(), 0)


def gen_sym(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Permutations of 1..n in lexicographic order."""
    _check_budget(n, budgets.cayley_max, "Sym")
    return iter(itertools.permutations(range(1, n + 1)))


def gen_fishburn(n: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Fishburn permutations of length ``n``, lexicographic.

    Built by filtering permutations through the fish pattern; the result
    is cross-validated against the transpose image of the modified ascent
    sequences, and the run aborts on mismatch.
    """
    _check_budget(n, budgets.cayley_max, "Fishburn")
    fish = REGISTRY["fish"]
    assert isinstance(fish, BivincularPattern)
    filtered = [p for p in gen_sym(n, budgets=budgets)
                if not contains_bivincular(p, fish)]
    image = {to_fishburn(x) for x in gen_modasc(n, budgets=budgets.raised_to(n))}
    if set(filtered) != image:
        raise InternalError(
            f"Fishburn constructions disagree at n={n}: "
            f"{len(filtered)} filtered vs {len(image)} in the transpose image")
    return iter(filtered)


def gen_fishburn_avoiding(patterns: Iterable[BivincularPattern], n: int, *,
                          budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Fishburn permutations avoiding every given bivincular pattern."""
    pats = list(patterns)
    for b in pats:
        if not isinstance(b, BivincularPattern):
            raise ValidationError(f"expected bivincular patterns, got {b!r}")
    return (p for p in gen_fishburn(n, budgets=budgets)
            if not any(contains_bivincular(p, b) for b in pats))


@dataclass(frozen=True)
class GeneratorSpec:
    """A family plus size, with optional avoided patterns."""

    family: str
    n: int
    avoid: tuple[Pattern, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValidationError(f"unknown family {self.family!r}; choose from {FAMILY_NAMES}")
        if self.n < 0:
            raise ValidationError("size must be nonnegative")
        for pat in self.avoid:
            if isinstance(pat, BivincularPattern) and self.family not in ("sym", "fishburn"):
                raise ValidationError(
                    f"bivincular pattern on the non-permutation family {self.family!r}")


def gen_family(spec: GeneratorSpec, *, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Word]:
    """Generate a family, with avoided patterns folded in.

    Modified ascent sequences use the pruned recursion; all other
    families filter their lexicographic generator lazily.
    """
    from .patterns import filter_avoiders

    if spec.family == "modasc":
        if spec.avoid:
            return gen_modasc_avoiding(spec.avoid, spec.n, budgets=budgets)
        return gen_modasc(spec.n, budgets=budgets)
    base = {
        "cayley": gen_cayley,
        "rgf": gen_rgf,
        "sym": gen_sym,
        "wi": gen_wi,
        "fishburn": gen_fishburn,
    }[spec.family](spec.n, budgets=budgets)
    if spec.avoid:
        return filter_avoiders(base, spec.avoid)
    return base


# ---------------------------------------------------------------------------
# reference numbers


@cache
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind: S(n,n)=1, S(n,0)=S(0,n)=0 for
    n>0, and S(n,k) = k S(n-1,k) + S(n-1,k-1).

    >>> [stirling2(4, k) for k in range(5)]
    [0, 1, 7, 6, 1]
    """
    if n < 0 or k < 0:
        raise DomainError("stirling2 needs nonnegative arguments")
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    if k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@cache
def bell(n: int) -> int:
    """Bell numbers as row sums of the Stirling triangle.

    >>> [bell(n) for n in range(6)]
    [1, 1, 2, 5, 15, 52]
    """
    if n < 0:
        raise DomainError("bell needs a nonnegative argument")
    return sum(stirling2(n, k) for k in range(n + 1))


@cache
def fubini(n: int) -> int:
    """Fubini numbers (ordered set partitions): sum of k! S(n,k).

    >>> [fubini(n) for n in range(5)]
    [1, 1, 3, 13, 75]
    """
    if n < 0:
        raise DomainError("fubini needs a nonnegative argument")
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# count tables


@dataclass(frozen=True)
class CountTable:
    """Counts keyed by (size, statistic value), emitted as triangles."""

    name: str
    rows: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.rows.items())

    def row(self, n: int) -> tuple[int, ...]:
        keys = sorted(k for (m, k) in self.rows if m == n)
        return tuple(self.rows[(n, k)] for k in keys)

    def total(self, n: int) -> int:
        return sum(c for (m, _), c in self.rows.items() if m == n)

    def flatten(self) -> list[int]:
        return [c for _, c in self.sorted_items()]

    def csv_lines(self) -> list[str]:
        return ["n,key,count"] + [f"{n},{k},{c}" for (n, k), c in self.sorted_items()]

    def bfile_lines(self, offset: int = 1) -> list[str]:
        return [f"{offset + i} {c}" for i, c in enumerate(self.flatten())]

    def jsonl_lines(self) -> list[str]:
        return [json.dumps({"n": n, "key": k, "count": c})
                for (n, k), c in self.sorted_items()]


def modasc_profile_census(n: int, patterns: Iterable[Pattern | Word] = (), *,
                          budgets: Budgets = DEFAULT_BUDGETS) -> Counter:
    """Counter over (max value, copies of max, copies of 1) for the
    modified ascent sequences of length ``n`` avoiding the patterns."""
    pats = tuple(patterns)
    gen = gen_modasc_avoiding(pats, n, budgets=budgets) if pats \
        else gen_modasc(n, budgets=budgets)
    census: Counter = Counter()
    for x in gen:
        census[(max_value(x), max_multiplicity(x), ones_count(x))] += 1
    return census


def triangle_f(n_max: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> CountTable:
    """Rows (n, m) -> number of modified ascent sequences of length n with
    maximum value m, for n = 1..n_max."""
    rows: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for (m, _, _), c in modasc_profile_census(n, budgets=budgets).items():
            rows[(n, m)] = rows.get((n, m), 0) + c
    return CountTable("max-value distribution of modified ascent sequences", rows)


def two_fishburn(n_max: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[int, ...]:
    """Counts of modified ascent sequences with a unique maximum, n = 1..n_max."""
    out = []
    for n in range(1, n_max + 1):
        census = modasc_profile_census(n, budgets=budgets)
        out.append(sum(c for (_, mult, _), c in census.items() if mult == 1))
    return tuple(out)


def triangle_h(n_max: int, *, budgets: Budgets = DEFAULT_BUDGETS) -> CountTable:
    """Rows (n, k) -> number of restricted growth functions of length n
    whose strictly increasing prefix has length k."""
    rows: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for r in gen_rgf(n, budgets=budgets):
            key = (n, rgf_prefix_stat(r))
            rows[key] = rows.get(key, 0) + 1
    return CountTable("prefix statistic distribution of restricted growth functions", rows)


def triangle_g(n_max: int, pattern: Pattern | Word, *,
               budgets: Budgets = DEFAULT_BUDGETS) -> CountTable:
    """Rows (n, k) -> number of pattern-avoiding modified ascent sequences
    of length n with k copies of 1; pattern must be 2213 or 2231."""
    body = pattern.body if isinstance(pattern, ClassicalPattern) else tuple(pattern)
    if body not in ((2, 2, 1, 3), (2, 2, 3, 1)):
        raise DomainError("copies-of-1 triangle is defined for the patterns 2213 and 2231")
    rows: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for (_, _, ones), c in modasc_profile_census(n, (body,), budgets=budgets).items():
            rows[(n, ones)] = rows.get((n, ones), 0) + c
    return CountTable(f"copies-of-1 distribution of {''.join(map(str, body))}-avoiders", rows)
