"""Exhaustive verification suites.

Each suite runs a list of identities at stated size ranges and reports
pass/fail per identity with a counterexample on failure.  The driver is
the single place where every documented invariant of the package is
exercised end to end; suites share one corpus cache per run so repeated
enumerations are paid for once.

Suites: ``conjecture-ds`` (Bell counts, Stirling distributions and the
sequence identities), ``transport`` (pattern transport across the Burge
transpose), ``bijections``, ``burge``, ``core``, ``patterns``, the
report-only ``psi-2213-experiment``, and ``all``.
"""
from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from .bijections import (
    active_sites,
    modasc_2213_to_rgf,
    modasc_212_to_rgf,
    modasc_2231_to_rgf,
    _extract_ones_step,
    _insert_ones_step,
    rgf_to_modasc_212,
    rgf_to_modasc_2213,
    rgf_to_modasc_2231,
)
from .burge import (
    burge_transpose,
    from_rgf,
    identity_word,
    matrix_transpose,
    sort_word,
    to_fishburn,
    to_rgf,
    validate_burge_word,
    word_to_matrix,
)
from .config import DEFAULT_BUDGETS, Budgets
from .errors import DomainError, ValidationError
from .patterns import (
    REGISTRY,
    contains_bivincular,
    contains_classical,
    count_bivincular,
    occurrences_classical,
)
from .enumeration import (
    bell,
    gen_cayley,
    gen_modasc,
    gen_modasc_avoiding,
    gen_rgf,
    gen_sym,
    stirling2,
)
from .words import (
    Word,
    ballot_decode,
    ballot_encode,
    format_word,
    is_modasc,
    is_rgf,
    max_multiplicity,
    max_value,
    ones_count,
    parse_word,
    rgf_prefix_stat,
    strict_ascent_count,
    weak_descents,
)

SUITE_NAMES = (
    "conjecture-ds",
    "transport",
    "bijections",
    "burge",
    "core",
    "patterns",
    "psi-2213-experiment",
    "all",
)

BELL_PATTERNS = ("212", "1212", "2132", "2213", "2231", "12132", "2321")


@dataclass
class CheckResult:
    identity: str
    n_range: str
    passed: bool
    gating: bool = True
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        tag = "PASS" if self.passed else ("NOTE" if not self.gating else "FAIL")
        extra = f" -- {self.detail}" if self.detail else ""
        ce = f" [counterexample: {self.counterexample}]" if self.counterexample else ""
        return f"[{tag}] {self.identity} ({self.n_range}){extra}{ce}"


@dataclass
class SuiteReport:
    suite: str
    n_max: int | None
    results: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.gating)

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "n_max": self.n_max,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [asdict(r) for r in self.results],
        }
        return json.dumps(payload, indent=2)


def _cap(stated: int, n_max: int | None) -> int:
    return stated if n_max is None else min(stated, n_max)


class _Corpus:
    """Per-run cache of enumerated families and censuses."""

    def __init__(self, budgets: Budgets):
        self.budgets = budgets
        self._census: dict[tuple[tuple[Word, ...], int], Counter] = {}
        self._lists: dict[tuple[str, int], tuple[Word, ...]] = {}

    def census(self, patterns: tuple[Word, ...], n: int) -> Counter:
        """Counter over (max, copies of max, copies of 1)."""
        key = (patterns, n)
        if key not in self._census:
            gen = gen_modasc_avoiding(patterns, n, budgets=self.budgets) if patterns \
                else gen_modasc(n, budgets=self.budgets)
            counter: Counter = Counter()
            for x in gen:
                counter[(max_value(x), max_multiplicity(x), ones_count(x))] += 1
            self._census[key] = counter
        return self._census[key]

    def count(self, patterns: tuple[Word, ...], n: int) -> int:
        return sum(self.census(patterns, n).values())

    def avoiders(self, pattern: str, n: int) -> tuple[Word, ...]:
        key = (f"modasc-{pattern}", n)
        if key not in self._lists:
            body = parse_word(pattern)
            self._lists[key] = tuple(gen_modasc_avoiding((body,), n, budgets=self.budgets))
        return self._lists[key]

    def modasc(self, n: int) -> tuple[Word, ...]:
        key = ("modasc", n)
        if key not in self._lists:
            self._lists[key] = tuple(gen_modasc(n, budgets=self.budgets))
        return self._lists[key]

    def rgf(self, n: int) -> tuple[Word, ...]:
        key = ("rgf", n)
        if key not in self._lists:
            self._lists[key] = tuple(gen_rgf(n, budgets=self.budgets))
        return self._lists[key]

    def fishburn(self, n: int) -> tuple[Word, ...]:
        key = ("fishburn", n)
        if key not in self._lists:
            fish = REGISTRY["fish"]
            self._lists[key] = tuple(
                p for p in gen_sym(n, budgets=self.budgets)
                if not contains_bivincular(p, fish))
        return self._lists[key]


# ---------------------------------------------------------------------------
# independent oracles used only for cross-checking


def _is_modasc_scan(x: Word) -> bool:
    # third membership route: one pass, each letter must be an ascent top
    # exactly when it is a fresh value
    if not x:
        return True
    seen: set[int] = set()
    for i, v in enumerate(x):
        is_top = i == 0 or x[i - 1] < v
        if is_top != (v not in seen):
            return False
        seen.add(v)
    return seen == set(range(1, max(seen) + 1))


def _gen_ballots(n: int):
    # ordered set partitions of {1..n}, grown element by element
    if n == 0:
        yield ()
        return
    for smaller in _gen_ballots(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + (smaller[i] | {n},) + smaller[i + 1:]
        for i in range(len(smaller) + 1):
            yield smaller[:i] + (frozenset({n}),) + smaller[i:]


def _subsequence_patterns(x: Word, kmax: int) -> set[Word]:
    # every pattern realized by a subsequence of x, by full enumeration
    out: set[Word] = set()
    for k in range(1, kmax + 1):
        for idx in itertools.combinations(range(len(x)), k):
            sub = tuple(x[i] for i in idx)
            ranks = {v: r + 1 for r, v in enumerate(sorted(set(sub)))}
            out.add(tuple(ranks[v] for v in sub))
    return out


# ---------------------------------------------------------------------------
# suite: conjecture-ds


def _suite_conjecture_ds(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []

    for pattern in BELL_PATTERNS:
        stated = 9 if pattern in ("12132", "2321") else 10
        top = _cap(stated, n_max)
        body = parse_word(pattern)
        bad = None
        for n in range(top + 1):
            got = c.count((body,), n)
            if got != bell(n):
                bad = f"n={n}: {got} avoiders, Bell={bell(n)}"
                break
        res.append(CheckResult(f"|Modasc_n({pattern})| equals the Bell numbers",
                               f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(9, n_max)
    for pattern in ("212", "2213", "2231"):
        body = parse_word(pattern)
        bad = None
        for n in range(1, top + 1):
            by_max: Counter = Counter()
            for (m, _, _), cnt in c.census((body,), n).items():
                by_max[m] += cnt
            for m in range(1, n + 1):
                if by_max.get(m, 0) != stirling2(n, n - m + 1):
                    bad = f"n={n}, m={m}: {by_max.get(m, 0)} != S({n},{n - m + 1})"
                    break
            if bad:
                break
        res.append(CheckResult(
            f"max distribution on Modasc_n({pattern}) is the reversed Stirling triangle",
            f"n <= {top}", bad is None, counterexample=bad))

    # unique-maximum counts and their identities
    top = _cap(9, n_max)
    expected_unique = (1, 1, 3, 10, 38, 164, 797, 4321, 25905)
    f_count = {n: c.count((), n) for n in range(top + 1)}
    f_unique = {}
    f_by_max: dict[int, Counter] = {}
    f_by_mult: dict[int, Counter] = {}
    for n in range(top + 1):
        by_max: Counter = Counter()
        by_mult: Counter = Counter()
        unique = 0
        for (m, mult, _), cnt in c.census((), n).items():
            by_max[m] += cnt
            by_mult[mult] += cnt
            if mult == 1:
                unique += cnt
        f_unique[n] = unique
        f_by_max[n] = by_max
        f_by_mult[n] = by_mult

    got_prefix = tuple(f_unique[n] for n in range(1, top + 1))
    want_prefix = expected_unique[:top]
    res.append(CheckResult(
        "unique-maximum counts match the 2-Fishburn prefix",
        f"n <= {top}", got_prefix == want_prefix,
        counterexample=None if got_prefix == want_prefix else f"{got_prefix} != {want_prefix}"))

    bad = next((f"n={n}" for n in range(1, top)
                if f_unique[n + 1] != f_count[n + 1] - f_count[n]), None)
    res.append(CheckResult("f_{n+1}(1) = f_{n+1} - f_n", f"n+1 <= {top}", bad is None,
                           counterexample=bad))

    bad = next((f"n={n}" for n in range(1, top)
                if f_unique[n + 1] != sum(m * cnt for m, cnt in f_by_max[n].items())), None)
    res.append(CheckResult("f_{n+1}(1) equals the max-weighted row sum",
                           f"n+1 <= {top}", bad is None, counterexample=bad))

    bad = next((f"n={n}" for n in range(1, top + 1)
                if sum(f_unique[i] for i in range(1, n + 1)) != f_count[n]), None)
    res.append(CheckResult("partial sums of the unique-maximum counts give f_n",
                           f"n <= {top}", bad is None, counterexample=bad))

    shift_top = min(_cap(8, n_max), top - 1)
    bad = None
    for n in range(1, shift_top + 1):
        for k in range(2, n + 2):
            if f_by_mult[n + 1].get(k, 0) != f_by_mult[n].get(k - 1, 0):
                bad = f"n={n}, k={k}"
                break
        if bad:
            break
    res.append(CheckResult("f_{n+1}(k) = f_n(k-1) for k >= 2",
                           f"n <= {shift_top}", bad is None, counterexample=bad))

    bad = next((f"n={n}" for n in range(1, shift_top + 1)
                if f_count[n + 1] != sum((m + 1) * cnt for m, cnt in f_by_max[n].items())), None)
    res.append(CheckResult("f_{n+1} equals the (max+1)-weighted row sum",
                           f"n <= {shift_top}", bad is None, counterexample=bad))

    # the same identities on the 212-avoiders (2-Bell behaviour)
    body212 = (2, 1, 2)
    b_by_mult: dict[int, Counter] = {}
    b_by_max: dict[int, Counter] = {}
    for n in range(top + 1):
        by_mult: Counter = Counter()
        by_max: Counter = Counter()
        for (m, mult, _), cnt in c.census((body212,), n).items():
            by_mult[mult] += cnt
            by_max[m] += cnt
        b_by_mult[n] = by_mult
        b_by_max[n] = by_max
    bad = next((f"n={n}: {b_by_mult[n].get(1, 0)} != {bell(n) - bell(n - 1)}"
                for n in range(2, top + 1)
                if b_by_mult[n].get(1, 0) != bell(n) - bell(n - 1)), None)
    res.append(CheckResult("unique-maximum 212-avoiders are counted by the 2-Bell numbers",
                           f"n <= {top}", bad is None, counterexample=bad))
    bad = None
    for n in range(1, shift_top + 1):
        for k in range(1, n + 1):
            if b_by_mult[n + 1].get(k + 1, 0) != b_by_mult[n].get(k, 0):
                bad = f"n={n}, k={k}"
                break
        if bad:
            break
    res.append(CheckResult("b_{n+1}(k+1) = b_n(k)", f"n <= {shift_top}",
                           bad is None, counterexample=bad))

    bad = None
    for n in range(2, top + 1):
        for m in range(1, n + 1):
            want = (n - m + 1) * b_by_max[n - 1].get(m - 1, 0) + b_by_max[n - 1].get(m, 0)
            if b_by_max[n].get(m, 0) != want:
                bad = f"n={n}, m={m}"
                break
        if bad:
            break
    res.append(CheckResult("b_{n,m} = (n-m+1) b_{n-1,m-1} + b_{n-1,m}",
                           f"n <= {top}", bad is None, counterexample=bad))

    # prefix-statistic recurrence on restricted growth functions
    top_h = _cap(10, n_max)
    h: dict[int, Counter] = {}
    for n in range(1, top_h + 1):
        hist: Counter = Counter()
        for r in gen_rgf(n, budgets=c.budgets):
            hist[rgf_prefix_stat(r)] += 1
        h[n] = hist
    bad = None
    for n in range(1, top_h):
        if h[n + 1].get(n + 1, 0) != 1:
            bad = f"h_{n + 1}({n + 1}) != 1"
            break
        for k in range(1, n + 1):
            if h[n + 1].get(k, 0) != k * sum(h[n].get(j, 0) for j in range(k, n + 1)):
                bad = f"n={n}, k={k}"
                break
        if bad:
            break
    res.append(CheckResult("h_{n+1}(k) = k * sum_{j>=k} h_n(j)",
                           f"n+1 <= {top_h}", bad is None, counterexample=bad))

    top_g = _cap(9, n_max)
    for pattern in ("2213", "2231"):
        body = parse_word(pattern)
        bad = None
        for n in range(1, top_g + 1):
            by_ones: Counter = Counter()
            for (_, _, ones), cnt in c.census((body,), n).items():
                by_ones[ones] += cnt
            if by_ones != h[n]:
                bad = f"n={n}: {dict(by_ones)} != {dict(h[n])}"
                break
        res.append(CheckResult(
            f"copies-of-1 counts on Modasc_n({pattern}) equal the prefix-statistic counts",
            f"n <= {top_g}", bad is None, counterexample=bad))

    return res


# ---------------------------------------------------------------------------
# suite: transport


def _suite_transport(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []
    top = _cap(7, n_max)
    targets = [
        ("212", ("alpha",)),
        ("2213", ("beta1", "beta2")),
        ("2321", ("delta1", "delta2")),
    ]
    for pattern, names in targets:
        bad = None
        for n in range(top + 1):
            image = {to_fishburn(x) for x in c.avoiders(pattern, n)}
            target = {p for p in c.fishburn(n)
                      if not any(contains_bivincular(p, REGISTRY[m]) for m in names)}
            if image != target:
                bad = f"n={n}: image size {len(image)}, target size {len(target)}"
                break
        label = " and ".join(names)
        res.append(CheckResult(
            f"transpose image of Modasc_n({pattern}) is the {label}-avoiding Fishburn set",
            f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(8, n_max)
    g = REGISTRY["g"]
    alpha = REGISTRY["alpha"]
    bad = None
    for n in range(1, top + 1):
        hist: Counter = Counter()
        for p in c.fishburn(n):
            if not contains_bivincular(p, alpha):
                hist[count_bivincular(p, g)] += 1
        want = {cnt: stirling2(n, n - cnt) for cnt in range(n)}
        want = {k: v for k, v in want.items() if v}
        if dict(hist) != want:
            bad = f"n={n}: {dict(hist)} != {want}"
            break
    res.append(CheckResult(
        "consecutive-rise counts on the alpha-avoiding Fishburn set follow the reversed Stirling triangle",
        f"n <= {top}", bad is None, counterexample=bad))
    return res


# ---------------------------------------------------------------------------
# suite: burge


def _suite_burge(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []
    top = _cap(7, n_max)
    bad_inv = bad_closed = bad_mat = bad_des = None
    for n in range(top + 1):
        ident = identity_word(n)
        for x in gen_cayley(n, budgets=c.budgets):
            w = (ident, x)
            t = burge_transpose(w)
            try:
                validate_burge_word(t)
            except ValidationError as exc:
                bad_closed = bad_closed or f"{format_word(x)}: {exc}"
            if burge_transpose(t) != w:
                bad_inv = bad_inv or format_word(x)
            if word_to_matrix(t) != matrix_transpose(word_to_matrix(w)):
                bad_mat = bad_mat or format_word(x)
            if not weak_descents(sort_word(x)) <= weak_descents(t[1]):
                bad_des = bad_des or format_word(x)
        if bad_inv or bad_closed or bad_mat or bad_des:
            break
    res.append(CheckResult("transpose is an involution on identity-over-x words",
                           f"n <= {top}", bad_inv is None, counterexample=bad_inv))
    res.append(CheckResult("transpose output satisfies the Burge invariants",
                           f"n <= {top}", bad_closed is None, counterexample=bad_closed))
    res.append(CheckResult("word-to-matrix intertwines transpose with matrix transposition",
                           f"n <= {top}", bad_mat is None, counterexample=bad_mat))
    res.append(CheckResult("weak descents of sort(x) are weak descents of the image",
                           f"n <= {top}", bad_des is None, counterexample=bad_des))

    top = _cap(8, n_max)
    bad = None
    for n in range(top + 1):
        image = [to_fishburn(x) for x in c.modasc(n)]
        if len(set(image)) != len(image):
            bad = f"n={n}: not injective"
            break
        if set(image) != set(c.fishburn(n)):
            bad = f"n={n}: image is not the Fishburn set"
            break
    res.append(CheckResult("the transpose map is injective on Modasc_n with Fishburn image",
                           f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(9, n_max)
    bad = None
    for n in range(top + 1):
        for x in c.modasc(n):
            if not is_rgf(to_rgf(x)):
                bad = format_word(x)
                break
        if bad:
            break
    res.append(CheckResult("the label transpose always lands in the growth functions",
                           f"n <= {top}", bad is None, counterexample=bad))

    bad = None
    for n in range(top + 1):
        avoiders = c.avoiders("212", n)
        image = [to_rgf(x) for x in avoiders]
        if any(from_rgf(r) != x for r, x in zip(image, avoiders)):
            bad = f"n={n}: inverse fails on the image"
            break
        if set(image) != set(c.rgf(n)) or len(set(image)) != len(avoiders):
            bad = f"n={n}: not a bijection onto the growth functions"
            break
        if any(to_rgf(from_rgf(r)) != r for r in c.rgf(n)):
            bad = f"n={n}: inverse is not a right inverse"
            break
    res.append(CheckResult("the label transpose is a bijection from the 212-avoiders onto RGF_n",
                           f"n <= {top}", bad is None, counterexample=bad))

    image_by_word: dict[Word, list[Word]] = {}
    for x in c.modasc(5):
        image_by_word.setdefault(to_rgf(x), []).append(x)
    collisions = {r: xs for r, xs in image_by_word.items() if len(xs) > 1}
    ok = (len(image_by_word) == 52
          and set(collisions) == {(1, 2, 1, 3, 2)}
          and sorted(collisions.get((1, 2, 1, 3, 2), [])) == [(1, 2, 1, 3, 2), (1, 2, 2, 1, 3)])
    res.append(CheckResult(
        "at length 5 the label transpose collides exactly on {12132, 12213} with image size 52",
        "n = 5", ok,
        counterexample=None if ok else str({format_word(r): list(map(format_word, xs))
                                            for r, xs in collisions.items()})))
    return res


# ---------------------------------------------------------------------------
# suite: bijections


def _suite_bijections(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []
    top = _cap(9, n_max)

    bad = bad_stat = None
    for n in range(top + 1):
        avoiders = set(c.avoiders("212", n))
        for r in c.rgf(n):
            x = rgf_to_modasc_212(r)
            if x not in avoiders or modasc_212_to_rgf(x) != r:
                bad = format_word(r)
                break
            if n and max_value(r) + max_value(x) != n + 1:
                bad_stat = format_word(r)
                break
        if bad or bad_stat:
            break
    res.append(CheckResult("the active-site bijection round-trips RGF_n into the 212-avoiders",
                           f"n <= {top}", bad is None, counterexample=bad))

    for name, forward, backward in (
            ("2213", rgf_to_modasc_2213, modasc_2213_to_rgf),
            ("2231", rgf_to_modasc_2231, modasc_2231_to_rgf)):
        bad2 = None
        for n in range(top + 1):
            avoiders = set(c.avoiders(name, n))
            for r in c.rgf(n):
                x = forward(r)
                if x not in avoiders or backward(x) != r:
                    bad2 = format_word(r)
                    break
                if n and max_value(r) + max_value(x) != n + 1:
                    bad_stat = format_word(r)
                    break
            if bad2 or bad_stat:
                break
        res.append(CheckResult(
            f"the copies-of-1 bijection round-trips RGF_n into the {name}-avoiders",
            f"n <= {top}", bad2 is None, counterexample=bad2))
    res.append(CheckResult("max(r) + max(image of r) = n + 1 for every bijection",
                           f"n <= {top}", bad_stat is None, counterexample=bad_stat))

    bad = None
    for n in range(1, top + 1):
        by_max: Counter = Counter()
        for x in c.avoiders("212", n):
            by_max[max_value(x)] += 1
        rgf_by_max: Counter = Counter()
        for r in c.rgf(n):
            rgf_by_max[max_value(r)] += 1
        for m in range(1, n + 1):
            want = stirling2(n, n - m + 1)
            if by_max.get(m, 0) != want or rgf_by_max.get(n - m + 1, 0) != want:
                bad = f"n={n}, m={m}"
                break
        if bad:
            break
    res.append(CheckResult(
        "|RGF_{n,n-m+1}| = |212-avoiders with max m| = S(n, n-m+1)",
        f"n <= {top}", bad is None, counterexample=bad))

    for name, move_to_end in (("2213", True), ("2231", False)):
        bad = None
        for n in range(1, top + 1):
            for x in c.avoiders(name, n):
                j = ones_count(x)
                for k in range(1, j + 1):
                    for i in range(1, k + 1):
                        y = _insert_ones_step(x, k, i, move_to_end)
                        if _extract_ones_step(y, move_to_end) != (i, j, k, x):
                            bad = f"x={format_word(x)}, k={k}, i={i}"
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        res.append(CheckResult(
            f"extraction inverts insertion on every legal (k, i) for {name}",
            f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(8, n_max)
    for name, move_to_end, body in (("2213", True, (2, 2, 1, 3)),
                                    ("2231", False, (2, 2, 3, 1))):
        bad = None
        for n in range(1, top + 1):
            by_ones: dict[int, list[Word]] = {}
            for x in c.avoiders(name, n):
                by_ones.setdefault(ones_count(x), []).append(x)
            next_by_ones: dict[int, set[Word]] = {}
            for x in c.avoiders(name, n + 1):
                next_by_ones.setdefault(ones_count(x), set()).add(x)
            for k in range(1, n + 1):
                images: list[Word] = []
                for j in range(k, n + 1):
                    for x in by_ones.get(j, []):
                        for i in range(1, k + 1):
                            y = _insert_ones_step(x, k, i, move_to_end)
                            if not is_modasc(y) or contains_classical(y, body):
                                bad = f"bad image {format_word(y)}"
                                break
                            images.append(y)
                        if bad:
                            break
                    if bad:
                        break
                if bad:
                    break
                if len(set(images)) != len(images):
                    bad = f"n={n}, k={k}: images collide"
                    break
                if set(images) != next_by_ones.get(k, set()):
                    bad = f"n={n}, k={k}: images do not cover"
                    break
            if bad:
                break
        res.append(CheckResult(
            f"insertion images partition the {name}-avoiders by copies of 1",
            f"n <= {top}", bad is None, counterexample=bad))

    bad = None
    for n in range(1, top + 1):
        for x in c.modasc(n):
            m = max_value(x)
            for gap in range(1, n + 1):
                legal = gap == n or x[gap - 1] >= x[gap]
                spliced = x[:gap] + (m + 1,) + x[gap:]
                if is_modasc(spliced) != legal:
                    bad = f"x={format_word(x)}, gap={gap}"
                    break
            if bad:
                break
        if bad:
            break
    res.append(CheckResult(
        "a new maximum keeps the word in the family exactly at weak-descent and terminal gaps",
        f"n <= {top}", bad is None, counterexample=bad))

    bad = None
    for n in range(1, top + 1):
        for x in c.avoiders("212", n):
            sites = active_sites(x)
            if len(sites) != n - max_value(x) + 1:
                bad = format_word(x)
                break
        if bad:
            break
    res.append(CheckResult("active sites number length - max + 1",
                           f"n <= {top}", bad is None, counterexample=bad))
    return res


# ---------------------------------------------------------------------------
# suite: core


def _suite_core(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []
    top = _cap(8, n_max)
    bad = None
    for n in range(top + 1):
        members = set(c.modasc(n))
        for x in gen_cayley(n, budgets=c.budgets):
            a = is_modasc(x)
            b = x in members
            d = _is_modasc_scan(x)
            if not (a == b == d):
                bad = f"{format_word(x)}: predicate={a}, generator={b}, scan={d}"
                break
        if bad:
            break
    res.append(CheckResult("three membership routes agree on every Cayley word",
                           f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(7, n_max)
    bad = None
    for n in range(top + 1):
        for ballot in _gen_ballots(n):
            if ballot_decode(ballot_encode(ballot)) != ballot:
                bad = str(ballot)
                break
        for x in gen_cayley(n, budgets=c.budgets):
            if ballot_encode(ballot_decode(x)) != x:
                bad = format_word(x)
                break
        if bad:
            break
    res.append(CheckResult("ballot encode and decode are mutually inverse",
                           f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(9, n_max)
    bad = None
    for n in range(1, top + 1):
        for x in c.modasc(n):
            m = max(x)
            first = x.index(m)
            run = first
            while run < len(x) and x[run] == m:
                run += 1
            if any(v == m for v in x[run:]):
                bad = format_word(x)
                break
        if bad:
            break
    res.append(CheckResult("all copies of the maximum sit in consecutive positions",
                           f"n <= {top}", bad is None, counterexample=bad))
    return res


# ---------------------------------------------------------------------------
# suite: patterns


def _suite_patterns(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    res: list[CheckResult] = []

    top = _cap(6, n_max)
    patterns = [y for k in range(1, 5) for y in gen_cayley(k, budgets=c.budgets)]
    bad = None
    for n in range(top + 1):
        for x in gen_cayley(n, budgets=c.budgets):
            realized = _subsequence_patterns(x, 4)
            for y in patterns:
                if contains_classical(x, y) != (y in realized):
                    bad = f"x={format_word(x)}, y={format_word(y)}"
                    break
            if bad:
                break
        if bad:
            break
    res.append(CheckResult("containment agrees with the nested-loop subsequence oracle",
                           f"n <= {top}, patterns up to length 4", bad is None,
                           counterexample=bad))

    top = _cap(5, n_max)
    bad = None
    for n in range(top + 1):
        for x in gen_cayley(n, budgets=c.budgets):
            for k in range(1, 4):
                for y in gen_cayley(k, budgets=c.budgets):
                    if contains_classical(x, y) != bool(occurrences_classical(x, y)):
                        bad = f"x={format_word(x)}, y={format_word(y)}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    res.append(CheckResult("early-exit containment and occurrence listing agree on emptiness",
                           f"n <= {top}, patterns up to length 3", bad is None,
                           counterexample=bad))

    top = _cap(8, n_max)
    bad = None
    for small, large in (((2, 1, 2), (1, 2, 1, 2)), ((2, 1, 2), (2, 1, 3, 2))):
        for n in range(top + 1):
            for x in c.modasc(n):
                if not contains_classical(x, small) and contains_classical(x, large):
                    bad = f"x={format_word(x)} avoids {small} but contains {large}"
                    break
            if bad:
                break
        if bad:
            break
    res.append(CheckResult("avoiding a pattern implies avoiding its superpatterns",
                           f"n <= {top}, pairs (212, 1212) and (212, 2132)",
                           bad is None, counterexample=bad))

    top = _cap(9, n_max)
    bad = None
    for n in range(top + 1):
        reference = set(c.avoiders("212", n))
        for pattern in ("1212", "2132", "12132"):
            if set(c.avoiders(pattern, n)) != reference:
                bad = f"n={n}: Modasc_n({pattern}) differs from Modasc_n(212)"
                break
        if bad:
            break
    res.append(CheckResult("the avoider sets of 212, 1212, 2132 and 12132 coincide",
                           f"n <= {top}", bad is None, counterexample=bad))

    top = _cap(8, n_max)
    fish = REGISTRY["fish"]
    bad = None
    for n in range(top + 1):
        for x in c.modasc(n):
            if contains_bivincular(to_fishburn(x), fish):
                bad = format_word(x)
                break
        if bad:
            break
    res.append(CheckResult("the transpose image of every modified ascent sequence avoids fish",
                           f"n <= {top}", bad is None, counterexample=bad))

    g = REGISTRY["g"]
    top_g = _cap(6, n_max)
    bad = next((format_word(x) for x in c.modasc(top_g)
                if count_bivincular(to_fishburn(x), g) != strict_ascent_count(x)), None)
    res.append(CheckResult("consecutive rises in the image count the strict ascents",
                           f"n = {top_g}", bad is None, counterexample=bad))
    return res


# ---------------------------------------------------------------------------
# suite: psi-2213-experiment (report-only)


def _suite_psi_experiment(c: _Corpus, n_max: int | None) -> list[CheckResult]:
    top = _cap(8, n_max)
    res: list[CheckResult] = []
    injective = surjective = True
    detail = []
    for n in range(top + 1):
        avoiders = c.avoiders("2213", n)
        image = [to_rgf(x) for x in avoiders]
        inj = len(set(image)) == len(image)
        sur = set(image) == set(c.rgf(n))
        injective &= inj
        surjective &= sur
        detail.append(f"n={n}: injective={inj}, onto={sur}")
    res.append(CheckResult(
        "label transpose restricted to the 2213-avoiders reaches every growth function "
        "(open question, report only)",
        f"n <= {top}", injective and surjective, gating=False,
        detail="; ".join(detail[-3:])))
    return res


# ---------------------------------------------------------------------------
# driver


_SUITES = {
    "conjecture-ds": _suite_conjecture_ds,
    "transport": _suite_transport,
    "bijections": _suite_bijections,
    "burge": _suite_burge,
    "core": _suite_core,
    "patterns": _suite_patterns,
    "psi-2213-experiment": _suite_psi_experiment,
}


def verify_suite(name: str, n_max: int | None = None, *,
                 budgets: Budgets = DEFAULT_BUDGETS) -> SuiteReport:
    """Run one named suite (or ``all``) up to ``n_max``; stated ranges
    apply when ``n_max`` is None."""
    if name not in SUITE_NAMES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    corpus = _Corpus(budgets)
    started = time.time()
    report = SuiteReport(suite=name, n_max=n_max)
    if name == "all":
        for key in ("core", "patterns", "burge", "bijections", "conjecture-ds",
                    "transport", "psi-2213-experiment"):
            report.results.extend(_SUITES[key](corpus, n_max))
    else:
        report.results.extend(_SUITES[name](corpus, n_max))
    report.elapsed = time.time() - started
    return report
