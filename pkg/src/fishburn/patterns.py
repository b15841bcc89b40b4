"""Classical and bivincular pattern containment.

Classical containment works on words with repeated letters: an occurrence
is a subsequence that is order isomorphic to the pattern body, equalities
preserved in both directions.  Bivincular patterns are classical patterns
on permutations with shaded columns (position adjacency) and shaded rows
(value adjacency); shading index 0 pins the occurrence to the left or
bottom border, index k to the right or top border.

The registry holds the named patterns used throughout: ``fish`` cuts out
the Fishburn permutations, ``alpha``/``beta1``/``beta2``/``delta1``/
``delta2`` describe images of pattern-avoiding modified ascent sequences,
and ``g`` (a rise of two consecutive values) tracks strict ascents across
the Burge transpose.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import DomainError, ValidationError
from .words import Word, is_cayley, is_permutation, parse_word, require_permutation


@dataclass(frozen=True)
class ClassicalPattern:
    body: Word

    def __post_init__(self):
        if not is_cayley(self.body):
            raise ValidationError(f"pattern body {self.body} is not a Cayley permutation")

    def __str__(self) -> str:
        return "".join(map(str, self.body)) if all(v <= 9 for v in self.body) else str(self.body)


@dataclass(frozen=True)
class BivincularPattern:
    body: Word
    shaded_columns: frozenset[int] = field(default_factory=frozenset)
    shaded_rows: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not is_permutation(self.body):
            raise ValidationError(f"bivincular body {self.body} must be a permutation")
        k = len(self.body)
        for s in self.shaded_columns | self.shaded_rows:
            if not 0 <= s <= k:
                raise ValidationError(f"shading index {s} outside 0..{k}")


Pattern = Union[ClassicalPattern, BivincularPattern]


def _biv(body: str, cols: Iterable[int] = (), rows: Iterable[int] = ()) -> BivincularPattern:
    return BivincularPattern(tuple(int(c) for c in body), frozenset(cols), frozenset(rows))


REGISTRY: dict[str, Pattern] = {
    "fish": _biv("231", cols=[1], rows=[1]),
    "alpha": _biv("2413", cols=[2], rows=[3]),
    "beta1": _biv("41325", rows=[2]),
    "beta2": _biv("41352", rows=[2]),
    "delta1": _biv("51423", rows=[3]),
    "delta2": _biv("52413", rows=[3]),
    "g": _biv("12", rows=[1]),
}


def parse_pattern(text: str) -> Pattern:
    """Parse "212", "@fish", or "biv:2413;cols=2;rows=3"."""
    text = text.strip()
    if text.startswith("@"):
        name = text[1:]
        if name not in REGISTRY:
            raise ValidationError(f"unknown named pattern {text!r}")
        return REGISTRY[name]
    if text.startswith("biv:"):
        body: Word = ()
        cols: frozenset[int] = frozenset()
        rows: frozenset[int] = frozenset()
        for i, part in enumerate(text[4:].split(";")):
            part = part.strip()
            if i == 0:
                body = parse_word(part)
            elif part.startswith("cols="):
                cols = frozenset(int(v) for v in part[5:].split(",") if v)
            elif part.startswith("rows="):
                rows = frozenset(int(v) for v in part[5:].split(",") if v)
            elif part:
                raise ValidationError(f"bad bivincular clause {part!r}")
        return BivincularPattern(body, cols, rows)
    return ClassicalPattern(parse_word(text))


def _as_body(y: Pattern | Word) -> Word:
    if isinstance(y, ClassicalPattern):
        return y.body
    if isinstance(y, BivincularPattern):
        raise DomainError("expected a classical pattern")
    return tuple(y)


def _relations(body: Word) -> list[tuple[tuple[int, int], ...]]:
    # rel[s] lists (t, sign(body[t] - body[s])) for t < s
    return [
        tuple((t, (body[t] > body[s]) - (body[t] < body[s])) for t in range(s))
        for s in range(len(body))
    ]


# ---------------------------------------------------------------------------
# classical containment


def contains_classical(x: Word, y: Pattern | Word) -> bool:
    """True iff some subsequence of ``x`` is order isomorphic to ``y``.

    >>> contains_classical((1, 2, 1, 3, 2), (2, 1, 2))
    True
    >>> contains_classical((1, 4, 1, 2, 3, 3, 5, 5, 1), (2, 1, 2))
    False
    """
    body = _as_body(y)
    n, k = len(x), len(body)
    if k == 0:
        return True
    if k > n:
        return False
    rel = _relations(body)

    def search(s: int, start: int, chosen: list[int]) -> bool:
        if s == k:
            return True
        for p in range(start, n - (k - s) + 1):
            c = x[p]
            ok = True
            for t, sign in rel[s]:
                if (chosen[t] > c) - (chosen[t] < c) != sign:
                    ok = False
                    break
            if ok:
                chosen.append(c)
                if search(s + 1, p + 1, chosen):
                    return True
                chosen.pop()
        return False

    return search(0, 0, [])


def contains_classical_anchored(x: Word, y: Pattern | Word) -> bool:
    """Containment with the last pattern letter forced onto the last letter
    of ``x``.  Lets incremental generators test only occurrences created by
    the newest letter."""
    body = _as_body(y)
    n, k = len(x), len(body)
    if k == 0:
        return True
    if k > n:
        return False
    rel = _relations(body)
    last = x[-1]

    def search(s: int, start: int, chosen: list[int]) -> bool:
        if s == k - 1:
            for t, sign in rel[k - 1]:
                if (chosen[t] > last) - (chosen[t] < last) != sign:
                    return False
            return True
        for p in range(start, n - 1 - (k - 1 - s) + 1):
            c = x[p]
            ok = True
            for t, sign in rel[s]:
                if (chosen[t] > c) - (chosen[t] < c) != sign:
                    ok = False
                    break
            if ok:
                chosen.append(c)
                if search(s + 1, p + 1, chosen):
                    return True
                chosen.pop()
        return False

    return search(0, 0, [])


def occurrences_classical(x: Word, y: Pattern | Word) -> list[tuple[int, ...]]:
    """All occurrences of ``y`` in ``x`` as 1-based index tuples, in
    lexicographic order.

    >>> occurrences_classical((1, 2, 1, 2), (2, 1, 2))
    [(2, 3, 4)]
    >>> occurrences_classical((1, 1, 1, 2), (1, 1))
    [(1, 2), (1, 3), (2, 3)]
    """
    body = _as_body(y)
    n, k = len(x), len(body)
    if k == 0:
        return [()]
    rel = _relations(body)
    out: list[tuple[int, ...]] = []

    def search(s: int, start: int, idx: list[int], chosen: list[int]) -> None:
        if s == k:
            out.append(tuple(i + 1 for i in idx))
            return
        for p in range(start, n - (k - s) + 1):
            c = x[p]
            ok = True
            for t, sign in rel[s]:
                if (chosen[t] > c) - (chosen[t] < c) != sign:
                    ok = False
                    break
            if ok:
                idx.append(p)
                chosen.append(c)
                search(s + 1, p + 1, idx, chosen)
                idx.pop()
                chosen.pop()

    search(0, 0, [], [])
    return out


# ---------------------------------------------------------------------------
# bivincular containment (permutations only)


def _bivincular_occurrences(p: Word, b: BivincularPattern, count_all: bool) -> int:
    require_permutation(p, "bivincular matching")
    body, cols, rows = b.body, b.shaded_columns, b.shaded_rows
    n, k = len(p), len(body)
    if k > n:
        return 0
    rel = _relations(body)
    slot_of_value = {v: s for s, v in enumerate(body)}
    hits = 0

    def rows_ok(letters: list[int]) -> bool:
        for v in rows:
            if v == 0:
                if letters[slot_of_value[1]] != 1:
                    return False
            elif v == k:
                if letters[slot_of_value[k]] != n:
                    return False
            elif letters[slot_of_value[v + 1]] != letters[slot_of_value[v]] + 1:
                return False
        return True

    def search(s: int, start: int, idx: list[int], letters: list[int]) -> bool:
        nonlocal hits
        if s == k:
            if rows_ok(letters):
                hits += 1
                return not count_all
            return False
        # shaded column s glues slot s to slot s-1; column 0 pins the start
        if s == 0 and 0 in cols:
            lo, hi = 0, 1
        elif s > 0 and s in cols:
            lo, hi = idx[-1] + 1, idx[-1] + 2
        else:
            lo, hi = start, n - (k - s) + 1
        hi = min(hi, n - (k - s) + 1)
        for pos in range(lo, hi):
            if s == k - 1 and k in cols and pos != n - 1:
                continue
            c = p[pos]
            ok = True
            for t, sign in rel[s]:
                if (letters[t] > c) - (letters[t] < c) != sign:
                    ok = False
                    break
            if ok:
                idx.append(pos)
                letters.append(c)
                if search(s + 1, pos + 1, idx, letters):
                    return True
                idx.pop()
                letters.pop()
        return False

    search(0, 0, [], [])
    return hits


def contains_bivincular(p: Word, b: BivincularPattern) -> bool:
    """True iff the permutation ``p`` contains the shaded pattern ``b``.

    >>> contains_bivincular((3, 2, 5, 4, 1), REGISTRY["fish"])
    True
    >>> contains_bivincular((3, 1, 5, 2, 4), REGISTRY["fish"])
    False
    """
    return _bivincular_occurrences(p, b, count_all=False) > 0


def count_bivincular(p: Word, b: BivincularPattern) -> int:
    """Number of occurrences of ``b`` in the permutation ``p``."""
    return _bivincular_occurrences(p, b, count_all=True)


# ---------------------------------------------------------------------------
# avoidance filtering


def _contains(w: Word, pat: Pattern) -> bool:
    if isinstance(pat, BivincularPattern):
        if not is_permutation(w):
            raise ValidationError(
                f"bivincular pattern applied to non-permutation {w}")
        return contains_bivincular(w, pat)
    return contains_classical(w, pat)


def filter_avoiders(family: Iterable[Word], patterns: Iterable[Pattern | Word]) -> Iterator[Word]:
    """Lazily yield the members of ``family`` avoiding every pattern."""
    pats: list[Pattern] = []
    for y in patterns:
        if isinstance(y, (ClassicalPattern, BivincularPattern)):
            pats.append(y)
        else:
            pats.append(ClassicalPattern(tuple(y)))
    for w in family:
        if not any(_contains(w, pat) for pat in pats):
            yield w
