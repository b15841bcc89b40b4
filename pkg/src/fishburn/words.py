"""Words over the positive integers and their positional statistics.

A word is a plain tuple of positive integers; the empty word is ``()``.
All indices in the public interface are 1-based.  The families handled
here: endofunctions (letters bounded by the length), Cayley permutations
(image is an interval {1..max}), modified ascent sequences (ascent tops
coincide with leftmost copies), restricted growth functions, permutations
and weakly increasing Cayley words.  Cayley words encode ballots, i.e.
ordered set partitions.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, ValidationError

Word = tuple[int, ...]
MarkedSet = frozenset[tuple[int, int]]
Ballot = tuple[frozenset[int], ...]


# ---------------------------------------------------------------------------
# text format


def parse_word(text: str) -> Word:
    """Parse a word from separated ("1,4,1") or compact ("141") form.

    The compact form is only valid when every letter is a single digit;
    a zero digit is rejected since letters are positive.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text or any(c.isspace() for c in text):
        parts = text.replace(",", " ").split()
        try:
            word = tuple(int(p) for p in parts)
        except ValueError:
            raise ValidationError(f"cannot parse word from {text!r}") from None
    else:
        if not text.isdigit():
            raise ValidationError(f"cannot parse word from {text!r}")
        word = tuple(int(c) for c in text)
    validate_word(word)
    return word


def format_word(w: Sequence[int]) -> str:
    """Emit the separated text form; the empty word becomes the empty string."""
    return ",".join(str(v) for v in w)


# ---------------------------------------------------------------------------
# validation


def validate_word(w: Sequence[int]) -> None:
    """Check that every letter is a positive integer."""
    for v in w:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValidationError(f"letters must be positive integers, got {v!r}")


def require_cayley(w: Word, what: str = "word") -> None:
    """Raise unless ``w`` is a Cayley permutation.

    Letters exceeding the length are reported separately from a
    non-interval image, since every family bounds letters by the length.
    """
    validate_word(w)
    if not w:
        return
    n = len(w)
    for v in w:
        if v > n:
            raise ValidationError(f"{what}: letter {v} exceeds the length {n}")
    if not is_cayley(w):
        raise ValidationError(f"{what}: image is not the interval 1..max")


def require_permutation(w: Word, what: str = "word") -> None:
    if not is_permutation(w):
        raise ValidationError(f"{what}: not a permutation of 1..{len(w)}")


def require_rgf(w: Word, what: str = "word") -> None:
    if not is_rgf(w):
        raise DomainError(f"{what}: not a restricted growth function")


def require_modasc(w: Word, what: str = "word") -> None:
    if not is_modasc(w):
        raise DomainError(f"{what}: not a modified ascent sequence")


# ---------------------------------------------------------------------------
# membership predicates


def is_endofunction(w: Word) -> bool:
    """Letters lie in 1..n, where n is the length."""
    n = len(w)
    return all(1 <= v <= n for v in w)


def is_cayley(w: Word) -> bool:
    """True iff the image of ``w`` is {1..max(w)}; the empty word counts.

    >>> is_cayley((3, 1, 1, 2, 4, 1, 3, 3, 4))
    True
    >>> is_cayley((1, 1, 3))
    False
    """
    if not w:
        return True
    values = set(w)
    return values == set(range(1, max(values) + 1))


def is_permutation(w: Word) -> bool:
    return len(set(w)) == len(w) and is_cayley(w)


def is_weakly_increasing(w: Word) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


def is_rgf(w: Word) -> bool:
    """True iff ``w`` starts at 1 and never jumps past the running maximum + 1.

    >>> is_rgf((1, 2, 1, 2)), is_rgf((1, 3, 1, 2))
    (True, False)
    """
    if not w:
        return True
    if w[0] != 1:
        return False
    running = 1
    for v in w[1:]:
        if v > running + 1:
            return False
        if v > running:
            running = v
    return True


def is_modasc(w: Word) -> bool:
    """True iff ``w`` is a Cayley permutation whose ascent tops are exactly
    its leftmost copies.

    >>> is_modasc((1, 3, 1, 2)), is_modasc((1, 2, 1, 2))
    (True, False)
    """
    if not w:
        return True
    return is_cayley(w) and ascent_tops(w) == nub_pairs(w)


# ---------------------------------------------------------------------------
# positional statistics


def ascent_tops(w: Word) -> MarkedSet:
    """Pairs (index, value) of strict ascent tops, the first letter included.

    >>> sorted(ascent_tops((1, 2, 1, 2)))
    [(1, 1), (2, 2), (4, 2)]
    """
    if not w:
        raise DomainError("the empty word has no ascent tops")
    pairs = {(1, w[0])}
    for i in range(1, len(w)):
        if w[i - 1] < w[i]:
            pairs.add((i + 1, w[i]))
    return frozenset(pairs)


def nub_pairs(w: Word) -> MarkedSet:
    """Pairs (index, value) of the leftmost copy of each value.

    >>> sorted(nub_pairs((1, 2, 1, 2)))
    [(1, 1), (2, 2)]
    """
    if not w:
        raise DomainError("the empty word has no leftmost copies")
    seen: dict[int, int] = {}
    for i, v in enumerate(w):
        if v not in seen:
            seen[v] = i + 1
    return frozenset((i, v) for v, i in seen.items())


def weak_descents(w: Word) -> frozenset[int]:
    """Indices i with w_i >= w_{i+1}.

    >>> sorted(weak_descents((8, 3, 1, 4, 6, 5, 2, 7)))
    [1, 2, 5, 6]
    """
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] >= w[i + 1])


def strict_ascent_count(w: Word) -> int:
    """Number of indices i with w_i < w_{i+1}."""
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def max_value(w: Word) -> int:
    """Largest letter, 0 for the empty word."""
    return max(w) if w else 0


def ones_count(w: Word) -> int:
    return sum(1 for v in w if v == 1)


def max_multiplicity(w: Word) -> int:
    """Number of copies of the maximum letter, 0 for the empty word."""
    return w.count(max(w)) if w else 0


def rgf_prefix_stat(r: Word) -> int:
    """Length of the maximal strictly increasing prefix 1 2 ... k of an RGF.

    >>> rgf_prefix_stat((1, 2, 3)), rgf_prefix_stat((1, 1, 2)), rgf_prefix_stat((1, 2, 1))
    (3, 1, 2)
    """
    require_rgf(r)
    if not r:
        raise DomainError("the empty word has no prefix statistic")
    k = 0
    while k < len(r) and r[k] == k + 1:
        k += 1
    return k


# ---------------------------------------------------------------------------
# ballots


def validate_ballot(blocks: Sequence[Iterable[int]]) -> Ballot:
    """Check that ``blocks`` is an ordered set partition of {1..n}."""
    ballot = tuple(frozenset(b) for b in blocks)
    seen: set[int] = set()
    total = 0
    for b in ballot:
        if not b:
            raise ValidationError("ballot blocks must be nonempty")
        if b & seen:
            raise ValidationError("ballot blocks must be disjoint")
        seen |= b
        total += len(b)
    if seen != set(range(1, total + 1)):
        raise ValidationError("ballot blocks must cover exactly 1..n")
    return ballot


def ballot_encode(blocks: Sequence[Iterable[int]]) -> Word:
    """Encode a ballot as the Cayley word w with i in block w_i.

    >>> format_word(ballot_encode([{2, 3, 6}, {4}, {1, 7, 8}, {5, 9}]))
    '3,1,1,2,4,1,3,3,4'
    """
    ballot = validate_ballot(blocks)
    n = sum(len(b) for b in ballot)
    word = [0] * n
    for label, block in enumerate(ballot, start=1):
        for i in block:
            word[i - 1] = label
    return tuple(word)


def ballot_decode(w: Word) -> Ballot:
    """Decode a Cayley word into its ballot; max(w) blocks.

    >>> ballot_decode((1, 2)) == (frozenset({1}), frozenset({2}))
    True
    """
    require_cayley(w)
    blocks: list[set[int]] = [set() for _ in range(max_value(w))]
    for i, v in enumerate(w, start=1):
        blocks[v - 1].add(i)
    return tuple(frozenset(b) for b in blocks)
