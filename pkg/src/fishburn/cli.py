"""Command-line interface.

Verbs: ``enumerate`` streams family members as JSON lines, ``count``
emits count tables, ``map`` applies a single bijection, ``verify`` runs
the exhaustive suites, and ``oeis-check`` compares computed sequences
against bundled OEIS b-files.

Exit codes are frozen for scripting: 0 ok, 1 verification failure,
2 usage, 3 budget, 4 domain, 5 missing fixture, 6 network.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Callable, Sequence

from . import bijections, burge, oeis
from .config import DEFAULT_BUDGETS, Budgets
from .enumeration import (
    CountTable,
    FAMILY_NAMES,
    GeneratorSpec,
    gen_family,
)
from .errors import (
    BudgetError,
    DomainError,
    FetchError,
    FixtureMissingError,
    ValidationError,
)
from .patterns import parse_pattern
from .verify import SUITE_NAMES, verify_suite
from .words import (
    Word,
    format_word,
    max_value,
    ones_count,
    parse_word,
    rgf_prefix_stat,
    strict_ascent_count,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DOMAIN = 4
EXIT_FIXTURE = 5
EXIT_NETWORK = 6


class _UsageError(Exception):
    pass


def _budgets(args) -> Budgets:
    override = getattr(args, "budget", None)
    if override is None:
        return DEFAULT_BUDGETS
    print(f"warning: raising generation caps to {override}; "
          f"memory and time grow exponentially", file=sys.stderr)
    return DEFAULT_BUDGETS.raised_to(override)


def _parse_patterns(tokens: Sequence[str]):
    out = []
    for token in tokens:
        try:
            out.append(parse_pattern(token))
        except ValidationError as exc:
            raise _UsageError(f"bad pattern {token!r}: {exc}") from exc
    return tuple(out)


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    budgets = _budgets(args)
    patterns = _parse_patterns(args.avoid)
    try:
        spec = GeneratorSpec(args.family, args.n, patterns)
    except ValidationError as exc:
        raise _UsageError(str(exc)) from exc
    stream = gen_family(spec, budgets=budgets)  # budget validated before output
    if args.format == "csv":
        print("word,max,ascents,ones")
    for word in stream:
        stats = {"max": max_value(word), "ascents": strict_ascent_count(word),
                 "ones": ones_count(word)}
        if args.format == "csv":
            print(f"{format_word(word).replace(',', ' ')},{stats['max']},"
                  f"{stats['ascents']},{stats['ones']}")
        else:
            print(json.dumps({"word": format_word(word), "stats": stats}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# count


_STATISTICS: dict[str, Callable[[Word], int]] = {
    "max": max_value,
    "ones": ones_count,
    "maxmult": lambda w: w.count(max(w)) if w else 0,
    "prefix": rgf_prefix_stat,
    "ascents": strict_ascent_count,
}


def _cmd_count(args) -> int:
    budgets = _budgets(args)
    patterns = _parse_patterns(args.avoid)
    if args.n is not None and args.n_max is not None:
        raise _UsageError("give either --n or --n-max, not both")
    if args.n is None and args.n_max is None:
        raise _UsageError("count needs --n or --n-max")
    # statistic rows start at length 1: the empty word carries no statistic
    low = 0 if args.by == "size" else 1
    sizes = [args.n] if args.n is not None else list(range(low, args.n_max + 1))
    if args.by != "size" and args.by not in _STATISTICS:
        raise _UsageError(f"unknown statistic {args.by!r}")
    if args.by == "prefix" and args.family != "rgf":
        raise _UsageError("--by prefix applies to the rgf family")
    specs = []
    for n in sizes:
        try:
            specs.append(GeneratorSpec(args.family, n, patterns))
        except ValidationError as exc:
            raise _UsageError(str(exc)) from exc

    rows: dict[tuple[int, int], int] = {}
    for spec in specs:
        histogram: Counter = Counter()
        for word in gen_family(spec, budgets=budgets):
            key = 0 if args.by == "size" else _STATISTICS[args.by](word)
            histogram[key] += 1
        if not histogram and args.by == "size":
            histogram[0] = 0
        for key, count in histogram.items():
            rows[(spec.n, key)] = count
    table = CountTable(f"{args.family} by {args.by}", rows)
    if args.format == "csv":
        lines = table.csv_lines()
    elif args.format == "bfile":
        lines = table.bfile_lines(args.offset)
    else:
        lines = table.jsonl_lines()
    for line in lines:
        print(line)
    return EXIT_OK


# ---------------------------------------------------------------------------
# map


def _render_word(w: Word) -> str:
    return format_word(w)


def _render_extract(result) -> str:
    i, j, k, x = result
    return json.dumps({"i": i, "j": j, "k": k, "x": format_word(x)})


def _render_basis(words) -> str:
    return json.dumps([format_word(x) for x in sorted(words)])


def _need_ki(args) -> tuple[int, int]:
    if args.k is None or args.i is None:
        raise _UsageError("insertion needs --k and --i")
    return args.k, args.i


# op -> (input kind, apply(value, args), render, roundtrip(value, result) or None)
MAP_OPS: dict[str, tuple] = {
    "gamma": ("word", lambda v, a: burge.to_fishburn(v), _render_word,
              lambda v, out: burge.fishburn_preimage(out) == v),
    "gamma-inverse": ("word", lambda v, a: burge.fishburn_preimage(v), _render_word,
                      lambda v, out: burge.to_fishburn(out) == v),
    "fishburn-basis": ("word", lambda v, a: burge.fishburn_basis(v), _render_basis, None),
    "psi": ("word", lambda v, a: burge.to_rgf(v), _render_word,
            lambda v, out: burge.from_rgf(out) == v),
    "psi-inverse": ("word", lambda v, a: burge.from_rgf(v), _render_word,
                    lambda v, out: burge.to_rgf(out) == v),
    "phi212": ("word", lambda v, a: bijections.rgf_to_modasc_212(v), _render_word,
               lambda v, out: bijections.modasc_212_to_rgf(out) == v),
    "phi212-inverse": ("word", lambda v, a: bijections.modasc_212_to_rgf(v), _render_word,
                       lambda v, out: bijections.rgf_to_modasc_212(out) == v),
    "phi2213": ("word", lambda v, a: bijections.rgf_to_modasc_2213(v), _render_word,
                lambda v, out: bijections.modasc_2213_to_rgf(out) == v),
    "phi2213-inverse": ("word", lambda v, a: bijections.modasc_2213_to_rgf(v), _render_word,
                        lambda v, out: bijections.rgf_to_modasc_2213(out) == v),
    "phi2231": ("word", lambda v, a: bijections.rgf_to_modasc_2231(v), _render_word,
                lambda v, out: bijections.modasc_2231_to_rgf(out) == v),
    "phi2231-inverse": ("word", lambda v, a: bijections.modasc_2231_to_rgf(v), _render_word,
                        lambda v, out: bijections.rgf_to_modasc_2231(out) == v),
    "sort": ("word", lambda v, a: burge.sort_word(v), _render_word, None),
    "insert2213": ("word", lambda v, a: bijections.modasc_insert_2213(v, *_need_ki(a)),
                   _render_word,
                   lambda v, out: bijections.modasc_extract_2213(out)[3] == v),
    "insert2231": ("word", lambda v, a: bijections.modasc_insert_2231(v, *_need_ki(a)),
                   _render_word,
                   lambda v, out: bijections.modasc_extract_2231(out)[3] == v),
    "extract2213": ("word", lambda v, a: bijections.modasc_extract_2213(v), _render_extract,
                    lambda v, out: bijections.modasc_insert_2213(out[3], out[2], out[0]) == v),
    "extract2231": ("word", lambda v, a: bijections.modasc_extract_2231(v), _render_extract,
                    lambda v, out: bijections.modasc_insert_2231(out[3], out[2], out[0]) == v),
    "transpose": ("biword", lambda v, a: burge.burge_transpose(v), burge.format_biword,
                  lambda v, out: burge.burge_transpose(out) == v),
    "transpose-prime": ("biword", lambda v, a: burge.gp_transpose(v), burge.format_biword, None),
    "to-matrix": ("biword", lambda v, a: burge.word_to_matrix(v), burge.format_matrix,
                  lambda v, out: burge.matrix_to_word(out) == v),
    "from-matrix": ("matrix", lambda v, a: burge.matrix_to_word(v), burge.format_biword,
                    lambda v, out: burge.word_to_matrix(out) == v),
}


def _parse_map_input(kind: str, text: str):
    try:
        if kind == "word":
            return parse_word(text)
        if kind == "biword":
            return burge.parse_biword(text)
        return burge.parse_matrix(sys.stdin.read() if text == "-" else text)
    except ValidationError as exc:
        raise _UsageError(f"bad input token: {exc}") from exc


def _cmd_map(args) -> int:
    op = args.op_flag or args.op
    if op is None:
        raise _UsageError("map needs an operation name")
    if op not in MAP_OPS:
        raise _UsageError(f"unknown map operation {op!r}; "
                          f"choose from {', '.join(sorted(MAP_OPS))}")
    if args.input is None:
        raise _UsageError("map needs an input")
    kind, apply_fn, render, roundtrip = MAP_OPS[op]
    value = _parse_map_input(kind, args.input)
    result = apply_fn(value, args)  # domain violations propagate as exit 4
    print(render(result))
    if args.check_roundtrip:
        if roundtrip is None:
            raise _UsageError(f"no round-trip registered for {op!r}")
        if not roundtrip(value, result):
            print(f"round-trip FAILED for {op}", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        print("round-trip ok", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    budgets = _budgets(args)
    if args.suite not in SUITE_NAMES:
        raise _UsageError(f"unknown suite {args.suite!r}; "
                          f"choose from {', '.join(SUITE_NAMES)}")
    report = verify_suite(args.suite, args.n_max, budgets=budgets)
    for result in report.results:
        print(result.line())
    status = "PASSED" if report.passed else "FAILED"
    print(f"suite {report.suite}: {status} "
          f"({len(report.results)} checks, {report.elapsed:.1f}s)")
    if args.report:
        with open(args.report, "w") as handle:
            handle.write(report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# oeis-check


def _cmd_oeis_check(args) -> int:
    budgets = _budgets(args)
    if args.oeis_id not in oeis.SEQUENCES:
        raise _UsageError(f"unsupported sequence {args.oeis_id!r}; "
                          f"known: {', '.join(sorted(oeis.SEQUENCES))}")
    report = oeis.oeis_check(args.oeis_id, args.n_max, fetch=args.fetch,
                             fixtures_dir=args.fixtures_dir, budgets=budgets)
    print(report.line())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="pattern-avoiding modified ascent sequences and Fishburn permutations")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="stream family members as JSON lines")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("n", type=int)
    p.add_argument("--avoid", action="append", default=[],
                   help="pattern to avoid (repeatable): 212, @fish, biv:...")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("count", help="emit count tables")
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--by", default="size",
                   choices=("size", "max", "ones", "maxmult", "prefix", "ascents"))
    p.add_argument("--avoid", action="append", default=[])
    p.add_argument("--format", choices=("json", "csv", "bfile"), default="csv")
    p.add_argument("--offset", type=int, default=1, help="b-file start index")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(run=_cmd_count)

    p = sub.add_parser("map", help="apply one bijection to one input")
    p.add_argument("op", nargs="?", default=None)
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--op", dest="op_flag", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--check-roundtrip", action="store_true")
    p.set_defaults(run=_cmd_map)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite")
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--report", default=None, help="write a JSON report here")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("oeis-check", help="compare a computed sequence to its fixture")
    p.add_argument("oeis_id")
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--fetch", action="store_true")
    p.add_argument("--fixtures-dir", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(run=_cmd_oeis_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    # fix up "map --op X input" parsed as op=input
    if args.verb == "map" and args.op_flag and args.input is None:
        args.input = args.op
        args.op = None
    try:
        return args.run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FixtureMissingError as exc:
        print(f"missing fixture: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except FetchError as exc:
        print(f"fetch failed: {exc}", file=sys.stderr)
        return EXIT_NETWORK


if __name__ == "__main__":
    sys.exit(main())
