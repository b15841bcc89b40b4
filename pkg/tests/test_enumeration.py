import pytest

from fishburn.config import Budgets
from fishburn.enumeration import (
    CountTable,
    GeneratorSpec,
    bell,
    fubini,
    gen_cayley,
    gen_family,
    gen_fishburn,
    gen_modasc,
    gen_modasc_avoiding,
    gen_rgf,
    gen_sym,
    gen_wi,
    stirling2,
    triangle_f,
    triangle_g,
    triangle_h,
    two_fishburn,
)
from fishburn.errors import BudgetError, DomainError, ValidationError
from fishburn.patterns import REGISTRY
from fishburn.words import is_cayley, is_modasc

FISHBURN_COUNTS = [1, 1, 2, 5, 15, 53, 217, 1014]
BELL = [1, 1, 2, 5, 15, 52, 203, 877]
FUBINI = [1, 1, 3, 13, 75, 541, 4683]


def test_gen_modasc_counts():
    assert [sum(1 for _ in gen_modasc(n)) for n in range(8)] == FISHBURN_COUNTS
    assert list(gen_modasc(0)) == [()]
    assert list(gen_modasc(1)) == [(1,)]


def test_gen_modasc_members_are_valid():
    for n in range(7):
        assert all(is_modasc(x) for x in gen_modasc(n))


def test_gen_rgf(w):
    assert list(gen_rgf(3)) == [w("111"), w("112"), w("121"), w("122"), w("123")]
    assert [sum(1 for _ in gen_rgf(n)) for n in range(8)] == BELL


def test_gen_cayley(w):
    threes = list(gen_cayley(3))
    assert len(threes) == 13
    assert threes == sorted(threes)
    expected = {"111", "112", "121", "122", "123", "132", "211",
                "212", "213", "221", "231", "312", "321"}
    assert {"".join(map(str, x)) for x in threes} == expected
    assert [sum(1 for _ in gen_cayley(n)) for n in range(7)] == FUBINI
    for n in range(6):
        words = list(gen_cayley(n))
        assert len(set(words)) == len(words) == FUBINI[n]
        assert all(is_cayley(x) for x in words)
        assert words == sorted(words)


def test_gen_sym_and_wi():
    assert [sum(1 for _ in gen_sym(n)) for n in range(6)] == [1, 1, 2, 6, 24, 120]
    assert [sum(1 for _ in gen_wi(n)) for n in range(6)] == [1, 1, 2, 4, 8, 16]


def test_gen_fishburn_counts():
    assert [sum(1 for _ in gen_fishburn(n)) for n in range(7)] == FISHBURN_COUNTS[:7]


def test_gen_modasc_avoiding_counts(w):
    for pattern in ("212", "1212", "2132", "2213", "2231"):
        counts = [sum(1 for _ in gen_modasc_avoiding([w(pattern)], n)) for n in range(7)]
        assert counts == BELL[:7], pattern


def test_gen_modasc_avoiding_matches_filter(w):
    from fishburn.patterns import contains_classical

    for pattern in ("212", "2213", "2321"):
        for n in range(7):
            pruned = sorted(gen_modasc_avoiding([w(pattern)], n))
            filtered = sorted(x for x in gen_modasc(n)
                              if not contains_classical(x, w(pattern)))
            assert pruned == filtered


def test_generator_budgets():
    tight = Budgets(modasc_max=4, cayley_max=3)
    with pytest.raises(BudgetError):
        gen_modasc(5, budgets=tight)
    with pytest.raises(BudgetError):
        gen_cayley(4, budgets=tight)
    with pytest.raises(DomainError):
        gen_modasc(-1)
    assert sum(1 for _ in gen_modasc(4, budgets=tight)) == 15


def test_generator_spec_validation(w):
    with pytest.raises(ValidationError):
        GeneratorSpec("nope", 3)
    with pytest.raises(ValidationError):
        GeneratorSpec("modasc", -1)
    with pytest.raises(ValidationError):
        GeneratorSpec("modasc", 3, (REGISTRY["fish"],))
    spec = GeneratorSpec("fishburn", 4, (REGISTRY["alpha"],))
    assert sum(1 for _ in gen_family(spec)) == 15  # Bell(4)


def test_gen_family_dispatch(w):
    assert list(gen_family(GeneratorSpec("rgf", 3))) == list(gen_rgf(3))
    avoiders = list(gen_family(GeneratorSpec("modasc", 5, (w("212"),))))
    assert len(avoiders) == 52
    cayley_avoiders = list(gen_family(GeneratorSpec("cayley", 3, (w("11"),))))
    assert len(cayley_avoiders) == 6  # permutations survive


def test_reference_numbers():
    assert [bell(n) for n in range(11)] == \
        [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
    assert all(stirling2(n, n) == 1 for n in range(8))
    assert stirling2(4, 2) == 7
    assert fubini(3) == 13
    assert [fubini(n) for n in range(7)] == FUBINI
    assert all(bell(n) == sum(stirling2(n, k) for k in range(n + 1)) for n in range(9))
    with pytest.raises(DomainError):
        bell(-1)


def test_triangle_f(w):
    table = triangle_f(5)
    assert table.row(3) == (1, 3, 1)
    assert table.row(4) == (1, 6, 7, 1)
    for n in range(1, 6):
        assert table.total(n) == FISHBURN_COUNTS[n]


def test_two_fishburn_prefix():
    assert two_fishburn(7) == (1, 1, 3, 10, 38, 164, 797)


def test_triangle_h(w):
    table = triangle_h(4)
    assert table.row(3) == (2, 2, 1)
    assert table.row(4) == (5, 6, 3, 1)
    assert table.total(4) == 15


def test_triangle_g_matches_h(w):
    h = triangle_h(6)
    for pattern in ("2213", "2231"):
        g = triangle_g(6, w(pattern))
        assert g.rows == h.rows
    with pytest.raises(DomainError):
        triangle_g(4, w("212"))


def test_count_table_emissions():
    table = CountTable("demo", {(1, 1): 1, (2, 1): 1, (2, 2): 1})
    assert table.csv_lines() == ["n,key,count", "1,1,1", "2,1,1", "2,2,1"]
    assert table.bfile_lines(offset=1) == ["1 1", "2 1", "3 1"]
    assert table.jsonl_lines()[0] == '{"n": 1, "key": 1, "count": 1}'
    assert table.flatten() == [1, 1, 1]
