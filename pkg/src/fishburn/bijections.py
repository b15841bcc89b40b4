"""Constructive bijections between restricted growth functions and
pattern-avoiding modified ascent sequences.

Three recursive constructions are implemented.  For the pattern 212, a
new strict maximum may be spliced into any gap following a weak descent
(an "active site") or at the end; reading a restricted growth function as
a stream of site choices gives ``rgf_to_modasc_212``.  For the patterns
2213 and 2231, growth is driven by the number of copies of 1: the
coordinates (k, i) bump every letter except the k leftmost 1s, insert a 2
after the i-th 1, and, when the k-th and (k+1)-th 1s were adjacent,
relocate the run of 1s ending at the k-th copy (to the end for 2213,
right after the bumped 2-run for 2231).  Structural recursion on the
increasing-prefix statistic turns those single steps into the bijections
``rgf_to_modasc_2213`` / ``rgf_to_modasc_2231``.

Every map here satisfies max(input) + max(output) = length + 1.
"""
from __future__ import annotations

from .errors import DomainError, InternalError
from .patterns import contains_classical
from .words import (
    Word,
    max_value,
    require_modasc,
    require_rgf,
    rgf_prefix_stat,
)

PATTERN_2213 = (2, 2, 1, 3)
PATTERN_2231 = (2, 2, 3, 1)
PATTERN_212 = (2, 1, 2)


def _require_avoiding(x: Word, pattern: Word, what: str) -> None:
    require_modasc(x, what)
    if contains_classical(x, pattern):
        body = "".join(map(str, pattern))
        raise DomainError(f"{what}: contains the pattern {body}")


# ---------------------------------------------------------------------------
# maximum insertion and removal (pattern 212)


def insert_new_max(x: Word, gap: int) -> Word:
    """Splice max(x)+1 into the gap after position ``gap`` (gap = n is the
    end).  Only gaps after a weak descent, or the terminal gap, keep the
    result a modified ascent sequence; any other gap raises.

    >>> insert_new_max((1, 1, 2, 1), 1)
    (1, 3, 1, 2, 1)
    """
    require_modasc(x)
    n = len(x)
    if not 1 <= gap <= n:
        raise DomainError(f"gap must be in 1..{n}, got {gap}")
    if gap < n and x[gap - 1] < x[gap]:
        raise DomainError(
            f"invalid site: the gap after position {gap} follows a strict ascent")
    return x[:gap] + (max_value(x) + 1,) + x[gap:]


def remove_unique_max(x: Word) -> Word:
    """Remove the single copy of the maximum from a 212-avoiding modified
    ascent sequence; left inverse of ``insert_new_max``.

    >>> remove_unique_max((1, 3, 1, 2))
    (1, 1, 2)
    """
    _require_avoiding(x, PATTERN_212, "remove_unique_max")
    if not x:
        raise DomainError("remove_unique_max: empty word")
    m = max(x)
    if x.count(m) != 1:
        raise DomainError("remove_unique_max: the maximum occurs more than once")
    i = x.index(m)
    return x[:i] + x[i + 1:]


def active_sites(x: Word) -> tuple[int, ...]:
    """Gaps of a 212-avoiding modified ascent sequence where a new strict
    maximum may be inserted: after each weak descent plus the terminal
    gap, labeled 1..n-max+1 left to right.

    >>> active_sites((1, 1, 2, 1))
    (1, 3, 4)
    """
    _require_avoiding(x, PATTERN_212, "active_sites")
    if not x:
        raise DomainError("active_sites: empty word")
    n = len(x)
    return tuple(g for g in range(1, n) if x[g - 1] >= x[g]) + (n,)


def rgf_to_modasc_212(r: Word) -> Word:
    """Replay a restricted growth function as insertion choices: a letter
    up to the running maximum picks the active site for a new strict
    maximum, a fresh maximum appends a weak maximum to the run of maxima.

    >>> rgf_to_modasc_212((1, 2, 3, 2))
    (1, 1, 2, 1)
    """
    require_rgf(r)
    if not r:
        return ()
    x = (1,)
    running = 1
    for c in r[1:]:
        if c == running + 1:
            m = max(x)
            end_of_run = max(i for i, v in enumerate(x) if v == m) + 1
            x = x[:end_of_run] + (m,) + x[end_of_run:]
            running = c
        else:
            sites = active_sites(x)
            x = insert_new_max(x, sites[c - 1])
    return x


def modasc_212_to_rgf(x: Word) -> Word:
    """Inverse of ``rgf_to_modasc_212``: peel the word back one letter at
    a time, recording which construction step produced it."""
    _require_avoiding(x, PATTERN_212, "modasc_212_to_rgf")
    if not x:
        return ()
    work = x
    trailing: list[int] = []
    while len(work) > 1:
        m = max(work)
        if work.count(m) >= 2:
            last = max(i for i, v in enumerate(work) if v == m)
            work = work[:last] + work[last + 1:]
            trailing.append(0)  # placeholder: letter becomes max(prefix)+1
        else:
            p = work.index(m)
            parent = work[:p] + work[p + 1:]
            sites = active_sites(parent)
            try:
                label = sites.index(p) + 1
            except ValueError:
                raise InternalError(f"removed maximum of {work} sat in a non-site gap") from None
            work = parent
            trailing.append(label)
    r = [1]
    for letter in reversed(trailing):
        r.append(max(r) + 1 if letter == 0 else letter)
    return tuple(r)


# ---------------------------------------------------------------------------
# copies-of-1 insertion (patterns 2213 and 2231)


def rgf_insert(r: Word, k: int, i: int) -> Word:
    """Insert the letter ``i`` after position ``k`` of an RGF whose
    strictly increasing prefix is at least ``k`` long; the result's prefix
    statistic is exactly ``k``.

    >>> rgf_insert((1, 2, 3), 2, 1)
    (1, 2, 1, 3)
    """
    j = rgf_prefix_stat(r)
    if k < 1 or k > j:
        raise DomainError(f"prefix statistic {j} is shorter than k={k}")
    if not 1 <= i <= k:
        raise DomainError(f"need 1 <= i <= k, got i={i}, k={k}")
    return r[:k] + (i,) + r[k:]


def _insert_ones_step(x: Word, k: int, i: int, move_to_end: bool) -> Word:
    # rules: (1) bump everything but the k leftmost 1s, (2) put a 2 after
    # the i-th 1, (3)/(3') relocate the 1-run ending at the k-th copy when
    # the k-th and (k+1)-th copies were adjacent
    ones = [p for p, v in enumerate(x) if v == 1]
    j = len(ones)
    if k < 1 or k > j:
        raise DomainError(f"word has {j} copies of 1, fewer than k={k}")
    if not 1 <= i <= k:
        raise DomainError(f"need 1 <= i <= k, got i={i}, k={k}")
    protected = set(ones[:k])
    special = i < k and j > k and ones[k] == ones[k - 1] + 1
    w = [1 if p in protected else v + 1 for p, v in enumerate(x)]
    w.insert(ones[i - 1] + 1, 2)
    if special:
        q = max(p for p, v in enumerate(w) if v == 1)
        s = q
        while s > 0 and w[s - 1] == 1:
            s -= 1
        run = w[s:q + 1]
        if w[q + 1] != 2:
            raise InternalError("bumped copy k+1 is not adjacent after insertion")
        if move_to_end:
            w = w[:s] + w[q + 1:] + run
        else:
            e = q + 1
            while e < len(w) and w[e] == 2:
                e += 1
            w = w[:s] + w[q + 1:e] + run + w[e:]
    return tuple(w)


def modasc_insert_2213(x: Word, k: int, i: int) -> Word:
    """Growth step for 2213-avoiders; the displaced 1-run goes to the end.

    >>> modasc_insert_2213((1, 1, 1, 2), 2, 1)
    (1, 2, 2, 3, 1)
    """
    _require_avoiding(x, PATTERN_2213, "modasc_insert_2213")
    return _insert_ones_step(x, k, i, move_to_end=True)


def modasc_insert_2231(x: Word, k: int, i: int) -> Word:
    """Growth step for 2231-avoiders; the displaced 1-run lands right
    after the bumped run of 2s.

    >>> modasc_insert_2231((1, 1, 1, 2), 2, 1)
    (1, 2, 2, 1, 3)
    """
    _require_avoiding(x, PATTERN_2231, "modasc_insert_2231")
    return _insert_ones_step(x, k, i, move_to_end=False)


def _extract_ones_step(y: Word, from_end: bool) -> tuple[int, int, int, Word]:
    ones = [p for p, v in enumerate(y) if v == 1]
    twos = [p for p, v in enumerate(y) if v == 2]
    if not twos:
        raise DomainError("extract: the word contains no 2 (all-ones base case)")
    i = sum(1 for p in ones if p < twos[0])
    j = len(ones) + len(twos) - 1
    k = len(ones)
    w = list(y)
    del w[twos[0]]
    leftmost_2 = next((p for p, v in enumerate(w) if v == 2), None)
    if from_end:
        if w[-1] == 1 and leftmost_2 is not None:
            s = len(w) - 1
            while s > 0 and w[s - 1] == 1:
                s -= 1
            run = w[s:]
            del w[s:]
            q2 = w.index(2)
            w[q2:q2] = run
    else:
        if leftmost_2 is not None and any(v == 1 for v in w[leftmost_2:]):
            e = leftmost_2
            while e < len(w) and w[e] == 2:
                e += 1
            f = e
            while f < len(w) and w[f] == 1:
                f += 1
            if f == e:
                raise InternalError("no 1-run right after the leading 2-run")
            run = w[e:f]
            w = w[:leftmost_2] + run + w[leftmost_2:e] + w[f:]
    x = tuple(v if v == 1 else v - 1 for v in w)
    return i, j, k, x


def modasc_extract_2213(y: Word) -> tuple[int, int, int, Word]:
    """Undo ``modasc_insert_2213``: returns (i, j, k, x) with i the number
    of 1s before the leftmost 2, j the count of letters at most 2 minus
    one, and k the number of 1s.

    >>> i, j, k, x = modasc_extract_2213((1, 2, 2, 3, 1))
    >>> (i, j, k, x) == (1, 3, 2, (1, 1, 1, 2))
    True
    """
    _require_avoiding(y, PATTERN_2213, "modasc_extract_2213")
    return _extract_ones_step(y, from_end=True)


def modasc_extract_2231(y: Word) -> tuple[int, int, int, Word]:
    """Undo ``modasc_insert_2231``; same coordinates as the 2213 version."""
    _require_avoiding(y, PATTERN_2231, "modasc_extract_2231")
    return _extract_ones_step(y, from_end=False)


# ---------------------------------------------------------------------------
# full bijections for 2213 / 2231


def _rgf_to_modasc_ones(r: Word, move_to_end: bool) -> Word:
    require_rgf(r)
    if not r:
        return ()
    steps: list[tuple[int, int]] = []
    work = list(r)
    while True:
        k = 0
        while k < len(work) and work[k] == k + 1:
            k += 1
        if k == len(work):
            break
        steps.append((k, work[k]))
        del work[k]
    x = tuple([1] * len(work))
    for k, i in reversed(steps):
        x = _insert_ones_step(x, k, i, move_to_end)
    return x


def _modasc_ones_to_rgf(x: Word, from_end: bool) -> Word:
    steps: list[tuple[int, int]] = []
    work = x
    while any(v != 1 for v in work):
        i, _, k, work = _extract_ones_step(work, from_end)
        steps.append((k, i))
    r = tuple(range(1, len(work) + 1))
    for k, i in reversed(steps):
        r = rgf_insert(r, k, i)
    return r


def rgf_to_modasc_2213(r: Word) -> Word:
    """Bijection onto 2213-avoiding modified ascent sequences, anchored at
    the all-ones word and unrolled through the prefix statistic.

    >>> rgf_to_modasc_2213((1, 2, 1)), rgf_to_modasc_2213((1, 1, 2))
    ((1, 2, 1), (1, 2, 2))
    """
    return _rgf_to_modasc_ones(r, move_to_end=True)


def rgf_to_modasc_2231(r: Word) -> Word:
    """Bijection onto 2231-avoiding modified ascent sequences."""
    return _rgf_to_modasc_ones(r, move_to_end=False)


def modasc_2213_to_rgf(x: Word) -> Word:
    """Inverse of ``rgf_to_modasc_2213``."""
    _require_avoiding(x, PATTERN_2213, "modasc_2213_to_rgf")
    return _modasc_ones_to_rgf(x, from_end=True)


def modasc_2231_to_rgf(x: Word) -> Word:
    """Inverse of ``rgf_to_modasc_2231``."""
    _require_avoiding(x, PATTERN_2231, "modasc_2231_to_rgf")
    return _modasc_ones_to_rgf(x, from_end=False)
