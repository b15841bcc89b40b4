"""Burge words, the column transpose, and the bijections built on it.

A Burge word is a biword whose top row is weakly increasing and whose
weak-descent set is contained in the bottom row's; both rows are Cayley
permutations.  Transposing flips every column and re-sorts: ties on the
top entry break descending on the bottom entry (``burge_transpose``) or
ascending (``gp_transpose``, generalized-permutation order).

``to_fishburn`` sends a Cayley word x to the bottom row of the transposed
biword (identity over x); restricted to modified ascent sequences it is a
bijection onto the Fishburn permutations.  ``to_rgf``/``from_rgf`` tweak
the transpose with an ascent-driven labeling and restrict to a bijection
between 212-avoiding modified ascent sequences and restricted growth
functions.  Burge words correspond to matrices with no null rows or
columns; transposing the word transposes the matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import basis_cap
from .errors import BudgetError, DomainError, InternalError, ValidationError
from .patterns import REGISTRY, contains_bivincular
from .words import (
    Word,
    format_word,
    is_modasc,
    max_value,
    parse_word,
    require_cayley,
    require_modasc,
    require_permutation,
    require_rgf,
    weak_descents,
)

Biword = tuple[Word, Word]
Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# biwords and transposes


def parse_biword(text: str) -> Biword:
    """Parse "top/bottom", each side in word text form."""
    if text.count("/") != 1:
        raise ValidationError(f"biword text must contain exactly one '/': {text!r}")
    top, bottom = text.split("/")
    bw = (parse_word(top), parse_word(bottom))
    if len(bw[0]) != len(bw[1]):
        raise ValidationError("biword rows have different lengths")
    return bw


def format_biword(bw: Biword) -> str:
    return f"{format_word(bw[0])}/{format_word(bw[1])}"


def validate_burge_word(bw: Biword) -> None:
    """Raise naming the violated clause unless ``bw`` is a Burge word."""
    u, v = bw
    if len(u) != len(v):
        raise ValidationError("Burge word: rows have different lengths")
    if any(u[i] > u[i + 1] for i in range(len(u) - 1)):
        raise ValidationError("Burge word: top row is not weakly increasing")
    require_cayley(u, "Burge word top row")
    require_cayley(v, "Burge word bottom row")
    if not weak_descents(u) <= weak_descents(v):
        raise ValidationError(
            "Burge word: weak descents of the top row are not all weak descents of the bottom row")


def _flip_sort(bw: Biword, *, ties_descending: bool) -> Biword:
    # single stable sort over flipped columns with a composite key
    u, v = bw
    if ties_descending:
        cols = sorted(zip(v, u), key=lambda c: (c[0], -c[1]))
    else:
        cols = sorted(zip(v, u), key=lambda c: (c[0], c[1]))
    return tuple(c[0] for c in cols), tuple(c[1] for c in cols)


def burge_transpose(bw: Biword) -> Biword:
    """Flip the columns, sort by top entry, break ties descending on the
    bottom entry.  An involution on Burge words.

    >>> burge_transpose(((1, 2, 3, 4), (2, 1, 3, 2)))
    ((1, 2, 2, 3), (2, 4, 1, 3))
    """
    validate_burge_word(bw)
    return _flip_sort(bw, ties_descending=True)


def gp_transpose(bw: Biword) -> Biword:
    """Flip the columns and sort them in generalized-permutation order
    (ties on the bottom entry ascending).  Defined on any biword."""
    if len(bw[0]) != len(bw[1]):
        raise ValidationError("biword rows have different lengths")
    return _flip_sort(bw, ties_descending=False)


def identity_word(n: int) -> Word:
    return tuple(range(1, n + 1))


def sort_word(x: Word) -> Word:
    return tuple(sorted(x))


# ---------------------------------------------------------------------------
# the Cayley word -> permutation map and its brute-force inverses


def to_fishburn(x: Word) -> Word:
    """Bottom row of the transposed biword (identity over x).

    On modified ascent sequences this lands in, and is a bijection onto,
    the Fishburn permutations.

    >>> format_word(to_fishburn((2, 1, 3, 2)))
    '2,4,1,3'
    """
    require_cayley(x)
    return _flip_sort((identity_word(len(x)), x), ties_descending=True)[1]


def fishburn_basis(p: Word, max_size: int | None = None) -> frozenset[Word]:
    """All Cayley words mapping to the permutation ``p``, by exhaustive
    search.  Sizes above the basis budget (default 7, FISHBURN_BUDGET or
    the ``max_size`` argument override) are refused.

    >>> sorted(fishburn_basis((2, 4, 1, 3)))
    [(2, 1, 3, 2), (3, 1, 4, 2)]
    """
    require_permutation(p)
    cap = basis_cap(max_size)
    if len(p) > cap:
        raise BudgetError(
            f"basis search for size {len(p)} exceeds the cap {cap}; "
            f"raise FISHBURN_BUDGET or pass max_size")
    from .enumeration import gen_cayley  # imported here: enumeration builds on this module

    return frozenset(x for x in gen_cayley(len(p)) if to_fishburn(x) == p)


def fishburn_preimage(p: Word, max_size: int | None = None) -> Word:
    """The unique modified ascent sequence mapping to the Fishburn
    permutation ``p``; inverse of ``to_fishburn`` on that domain."""
    require_permutation(p)
    if contains_bivincular(p, REGISTRY["fish"]):
        raise DomainError("permutation is not Fishburn (contains the fish pattern)")
    candidates = [x for x in fishburn_basis(p, max_size) if is_modasc(x)]
    if len(candidates) != 1:
        raise InternalError(
            f"Fishburn permutation {p} has {len(candidates)} modified-ascent preimages")
    return candidates[0]


# ---------------------------------------------------------------------------
# the labeled transpose to restricted growth functions


@dataclass(frozen=True)
class LabeledWord:
    """A modified ascent sequence together with its transpose labels."""

    word: Word
    labels: Word

    def __post_init__(self):
        if len(self.word) != len(self.labels):
            raise ValidationError("labels and word have different lengths")
        if any(v < 1 for v in self.labels):
            raise ValidationError("labels must be positive")
        seen: set[int] = set()
        for i, v in enumerate(self.word):
            if v not in seen:
                seen.add(v)
                if v > 1 and (i == 0 or self.labels[i] != self.labels[i - 1]):
                    raise ValidationError(
                        f"leftmost copy of {v} must inherit its left neighbour's label")


def ascent_labels(x: Word) -> LabeledWord:
    """Label the letters of a modified ascent sequence: copies of 1 get
    1, 2, 3, ... left to right; for each larger value the leftmost copy
    inherits the label to its left and the remaining copies continue the
    running maximum.

    >>> ascent_labels((1, 4, 1, 2, 3, 3, 5, 5, 1)).labels
    (1, 1, 2, 2, 2, 4, 4, 5, 3)
    """
    require_modasc(x)
    n = len(x)
    labels = [0] * n
    t = 0
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(x):
        positions.setdefault(v, []).append(i)
    for value in range(1, max_value(x) + 1):
        idxs = positions[value]
        if value == 1:
            for i in idxs:
                t += 1
                labels[i] = t
        else:
            # the leftmost copy follows a strict ascent, so its left
            # neighbour was labeled in an earlier step
            labels[idxs[0]] = labels[idxs[0] - 1]
            for i in idxs[1:]:
                t += 1
                labels[i] = t
    return LabeledWord(x, tuple(labels))


def to_rgf(x: Word) -> Word:
    """Bottom row of the label-transposed biword; always a restricted
    growth function, and a bijection onto them when restricted to
    212-avoiding modified ascent sequences.

    >>> format_word(to_rgf((1, 4, 1, 2, 3, 3, 5, 5, 1)))
    '1,2,3,2,2,4,1,4,5'
    """
    if not x:
        return ()
    labeled = ascent_labels(x)
    return gp_transpose((labeled.labels, labeled.word))[1]


def from_rgf(r: Word) -> Word:
    """Rebuild the modified ascent sequence whose label transpose is ``r``.

    Scanning ``r``, a letter that is a fresh maximum repeats the current
    label, otherwise the label increments.  The columns (letter, label)
    are then laid out block by block: block j is inserted right after the
    rightmost column whose top entry equals the block's smallest letter.

    >>> format_word(from_rgf((1, 2, 3, 2, 2, 4, 1, 4, 5)))
    '1,4,1,2,3,3,5,5,1'
    """
    require_rgf(r)
    if not r:
        return ()
    labels = [1]
    running = r[0]
    for v in r[1:]:
        if v == running + 1:
            labels.append(labels[-1])
            running = v
        else:
            labels.append(labels[-1] + 1)
    columns: list[tuple[int, int]] = []
    for j in range(1, max(labels) + 1):
        tops = sorted(r[i] for i in range(len(r)) if labels[i] == j)
        block = [(t, j) for t in tops]
        if j == 1:
            columns = block
            continue
        ell = tops[0]
        slot = None
        for i in range(len(columns) - 1, -1, -1):
            if columns[i][0] == ell:
                slot = i
                break
        if slot is None:
            raise InternalError(
                f"no column with top entry {ell} while placing block {j}; "
                f"input violates the growth guarantee")
        columns[slot + 1:slot + 1] = block
    return tuple(c[1] for c in columns)


# ---------------------------------------------------------------------------
# Burge matrices


def parse_matrix(text: str) -> Matrix:
    """Rows of space-separated integers; rows split on newlines or ';'."""
    rows = [row for row in text.replace(";", "\n").splitlines() if row.strip()]
    try:
        matrix = tuple(tuple(int(v) for v in row.split()) for row in rows)
    except ValueError:
        raise ValidationError(f"cannot parse matrix from {text!r}") from None
    validate_matrix(matrix)
    return matrix


def format_matrix(m: Matrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m)


def validate_matrix(m: Matrix) -> None:
    """Nonnegative rectangular grid, every row and column nonzero somewhere."""
    if not m:
        return
    width = len(m[0])
    for row in m:
        if len(row) != width:
            raise ValidationError("matrix rows have different lengths")
        if any(v < 0 for v in row):
            raise ValidationError("matrix entries must be nonnegative")
        if not any(row):
            raise ValidationError("matrix has a null row")
    for j in range(width):
        if not any(row[j] for row in m):
            raise ValidationError("matrix has a null column")


def matrix_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def word_to_matrix(bw: Biword) -> Matrix:
    """Column-multiplicity matrix: entry (i, j) counts columns (i, j).

    >>> word_to_matrix(((1, 2, 2), (3, 1, 2)))
    ((0, 0, 1), (1, 1, 0))
    """
    u, v = bw
    if len(u) != len(v):
        raise ValidationError("biword rows have different lengths")
    require_cayley(u, "top row")
    require_cayley(v, "bottom row")
    grid = [[0] * max_value(v) for _ in range(max_value(u))]
    for a, b in zip(u, v):
        grid[a - 1][b - 1] += 1
    return tuple(tuple(row) for row in grid)


def matrix_to_word(m: Matrix) -> Biword:
    """The Burge word with the given column multiplicities, in canonical
    order (top ascending, ties descending on the bottom)."""
    validate_matrix(m)
    cols: list[tuple[int, int]] = []
    for i, row in enumerate(m, start=1):
        for j, mult in enumerate(row, start=1):
            cols.extend([(i, j)] * mult)
    cols.sort(key=lambda c: (c[0], -c[1]))
    return tuple(c[0] for c in cols), tuple(c[1] for c in cols)
