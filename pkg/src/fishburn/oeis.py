"""OEIS fixture client: bundled b-files, optional fetching, prefix checks.

Fixtures ship inside the package as b-files ("index value" per line, '#'
comments allowed); the first comment line may carry "offset N", otherwise
the offset is the first data index.  Checking is offline by default; with
fetching enabled the b-file is downloaded from OEIS_BASE_URL (default
https://oeis.org) and cached next to the working directory.

Supported sequences and how this package computes them:

  A000110  Bell numbers (Stirling row sums)
  A000670  Fubini numbers, via exhaustive counts of Cayley words
  A022493  Fishburn numbers, via exhaustive counts of modified ascent sequences
  A137251  triangle: modified ascent sequences by maximum value (rows flattened)
  A005493  2-Bell numbers, via unique-maximum counts on the 212-avoiders
  A259691  triangle: growth functions by increasing-prefix length (rows flattened)
  A202062  exploratory: counts of modified ascent sequences avoiding 2312 and 3412
"""
from __future__ import annotations

import os
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .config import DEFAULT_BUDGETS, Budgets
from .enumeration import (
    bell,
    gen_cayley,
    gen_modasc,
    gen_modasc_avoiding,
    modasc_profile_census,
    triangle_f,
    triangle_h,
)
from .errors import FetchError, FixtureMissingError, ValidationError

DEFAULT_BASE_URL = "https://oeis.org"
ENV_BASE_URL = "OEIS_BASE_URL"


@dataclass(frozen=True)
class SequenceFixture:
    oeis_id: str
    offset: int
    values: tuple[int, ...]
    source: str

    def __post_init__(self):
        if not self.values:
            raise ValidationError(f"fixture {self.oeis_id} has no values")


@dataclass(frozen=True)
class MatchReport:
    oeis_id: str
    match_length: int
    first_mismatch: int | None  # index in OEIS numbering
    computed_length: int
    fixture_length: int

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and self.match_length > 0

    def line(self) -> str:
        if self.ok:
            return (f"{self.oeis_id}: match length {self.match_length} "
                    f"(computed {self.computed_length}, fixture {self.fixture_length})")
        return f"{self.oeis_id}: FIRST MISMATCH at index {self.first_mismatch}"


def parse_bfile(text: str, oeis_id: str, source: str) -> SequenceFixture:
    offset: int | None = None
    values: list[int] = []
    indices: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if offset is None and "offset" in line:
                tail = line.split("offset", 1)[1].strip(" =:")
                token = tail.split()[0] if tail else ""
                try:
                    offset = int(token)
                except ValueError:
                    pass
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"{oeis_id}: bad b-file line {line!r}")
        indices.append(int(parts[0]))
        values.append(int(parts[1]))
    if not values:
        raise ValidationError(f"{oeis_id}: empty b-file")
    if any(indices[i] + 1 != indices[i + 1] for i in range(len(indices) - 1)):
        raise ValidationError(f"{oeis_id}: b-file indices are not consecutive")
    if offset is None:
        offset = indices[0]
    return SequenceFixture(oeis_id, offset, tuple(values), source)


def _bfile_name(oeis_id: str) -> str:
    return f"b{oeis_id[1:]}.txt"


def load_fixture(oeis_id: str, fixtures_dir: str | os.PathLike | None = None) -> SequenceFixture:
    """Load a fixture from ``fixtures_dir``, then the local ``fixtures``
    directory, then the bundled files."""
    name = _bfile_name(oeis_id)
    candidates = []
    if fixtures_dir is not None:
        candidates.append(Path(fixtures_dir) / name)
    candidates.append(Path("fixtures") / name)
    for path in candidates:
        if path.is_file():
            return parse_bfile(path.read_text(), oeis_id, str(path))
    bundled = resources.files("fishburn").joinpath("fixtures", name)
    if bundled.is_file():
        return parse_bfile(bundled.read_text(), oeis_id, "bundled")
    raise FixtureMissingError(
        f"no fixture for {oeis_id}; add {name} or pass --fetch")


def fetch_fixture(oeis_id: str, base_url: str | None = None,
                  dest_dir: str | os.PathLike = "fixtures") -> SequenceFixture:
    """Download the b-file for ``oeis_id`` and cache it under ``dest_dir``."""
    base = base_url or os.environ.get(ENV_BASE_URL) or DEFAULT_BASE_URL
    name = _bfile_name(oeis_id)
    url = f"{base.rstrip('/')}/{oeis_id}/{name}"
    try:
        with urllib.request.urlopen(url, timeout=30) as response:
            text = response.read().decode("utf-8")
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise FetchError(f"could not fetch {url}: {exc}; retry or place {name} "
                         f"in the fixtures directory") from exc
    fixture = parse_bfile(text, oeis_id, url)
    dest = Path(dest_dir)
    dest.mkdir(parents=True, exist_ok=True)
    (dest / name).write_text(text)
    return fixture


def compare_prefix(fixture: SequenceFixture, computed: list[int]) -> MatchReport:
    """Compare a computed prefix against the fixture, aligned at the offset."""
    length = min(len(computed), len(fixture.values))
    for i in range(length):
        if computed[i] != fixture.values[i]:
            return MatchReport(fixture.oeis_id, i, fixture.offset + i,
                               len(computed), len(fixture.values))
    return MatchReport(fixture.oeis_id, length, None, len(computed), len(fixture.values))


# ---------------------------------------------------------------------------
# computed counterparts of the supported sequences


def _seq_bell(n_max: int, budgets: Budgets) -> list[int]:
    return [bell(n) for n in range(n_max + 1)]


def _seq_fubini_by_enumeration(n_max: int, budgets: Budgets) -> list[int]:
    return [sum(1 for _ in gen_cayley(n, budgets=budgets)) for n in range(n_max + 1)]


def _seq_fishburn_by_enumeration(n_max: int, budgets: Budgets) -> list[int]:
    return [sum(1 for _ in gen_modasc(n, budgets=budgets)) for n in range(n_max + 1)]


def _seq_two_bell(n_max: int, budgets: Budgets) -> list[int]:
    out = []
    for n in range(2, n_max + 1):
        census = modasc_profile_census(n, ((2, 1, 2),), budgets=budgets)
        out.append(sum(c for (_, mult, _), c in census.items() if mult == 1))
    return out


def _seq_triangle_f(n_max: int, budgets: Budgets) -> list[int]:
    return triangle_f(n_max, budgets=budgets).flatten()


def _seq_triangle_h(n_max: int, budgets: Budgets) -> list[int]:
    return triangle_h(n_max, budgets=budgets).flatten()


def _seq_modasc_2312_3412(n_max: int, budgets: Budgets) -> list[int]:
    patterns = ((2, 3, 1, 2), (3, 4, 1, 2))
    return [sum(1 for _ in gen_modasc_avoiding(patterns, n, budgets=budgets))
            for n in range(1, n_max + 1)]


SEQUENCES: dict[str, tuple[str, Callable[[int, Budgets], list[int]], int]] = {
    # id -> (description, builder, default n_max)
    "A000110": ("Bell numbers", _seq_bell, 12),
    "A000670": ("Fubini numbers via |Cay_n|", _seq_fubini_by_enumeration, 8),
    "A022493": ("Fishburn numbers via |Modasc_n|", _seq_fishburn_by_enumeration, 9),
    "A137251": ("max-value triangle rows", _seq_triangle_f, 9),
    "A005493": ("2-Bell numbers via unique-maximum 212-avoiders", _seq_two_bell, 10),
    "A259691": ("prefix-statistic triangle rows", _seq_triangle_h, 10),
    "A202062": ("counts of {2312, 3412}-avoiders (exploratory)", _seq_modasc_2312_3412, 9),
}


def computed_sequence(oeis_id: str, n_max: int | None = None, *,
                      budgets: Budgets = DEFAULT_BUDGETS) -> list[int]:
    if oeis_id not in SEQUENCES:
        known = ", ".join(sorted(SEQUENCES))
        raise ValidationError(f"no computed counterpart for {oeis_id}; known: {known}")
    _, builder, default_n = SEQUENCES[oeis_id]
    return builder(default_n if n_max is None else n_max, budgets)


def oeis_check(oeis_id: str, n_max: int | None = None, *, fetch: bool = False,
               fixtures_dir: str | os.PathLike | None = None,
               base_url: str | None = None,
               budgets: Budgets = DEFAULT_BUDGETS) -> MatchReport:
    """Compare the computed counterpart of ``oeis_id`` to its fixture."""
    computed = computed_sequence(oeis_id, n_max, budgets=budgets)
    try:
        fixture = load_fixture(oeis_id, fixtures_dir)
    except FixtureMissingError:
        if not fetch:
            raise
        fixture = fetch_fixture(oeis_id, base_url)
    return compare_prefix(fixture, computed)
