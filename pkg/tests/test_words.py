import pytest

from fishburn.errors import DomainError, ValidationError
from fishburn.words import (
    ascent_tops,
    ballot_decode,
    ballot_encode,
    format_word,
    is_cayley,
    is_modasc,
    is_rgf,
    nub_pairs,
    parse_word,
    require_cayley,
    rgf_prefix_stat,
    validate_ballot,
    weak_descents,
)


def test_parse_word_forms(w):
    assert parse_word("1,4,1,2,3,3,5,5,1") == w("141233551")
    assert parse_word("1 4 1") == (1, 4, 1)
    assert parse_word("") == ()
    assert parse_word("10,2,1") == (10, 2, 1)
    with pytest.raises(ValidationError):
        parse_word("102")  # zero digit in compact form
    with pytest.raises(ValidationError):
        parse_word("a,b")


def test_format_word_is_separated(w):
    assert format_word(w("141233551")) == "1,4,1,2,3,3,5,5,1"
    assert format_word(()) == ""


def test_is_cayley(w):
    assert is_cayley(w("311241334"))
    assert is_cayley(())
    assert not is_cayley(w("113"))


def test_ascent_tops(w):
    assert ascent_tops(w("1212")) == frozenset({(1, 1), (2, 2), (4, 2)})
    assert ascent_tops(w("1312")) == frozenset({(1, 1), (2, 3), (4, 2)})
    assert ascent_tops((1,)) == frozenset({(1, 1)})
    with pytest.raises(DomainError):
        ascent_tops(())


def test_nub_pairs(w):
    assert nub_pairs(w("1212")) == frozenset({(1, 1), (2, 2)})
    assert nub_pairs(w("1312")) == frozenset({(1, 1), (2, 3), (4, 2)})
    assert nub_pairs(w("111")) == frozenset({(1, 1)})
    with pytest.raises(DomainError):
        nub_pairs(())


def test_nub_equals_ascent_tops_on_worked_example(w):
    x = w("141233551")
    assert ascent_tops(x) == nub_pairs(x) == frozenset(
        {(1, 1), (2, 4), (4, 2), (5, 3), (7, 5)})


def test_is_modasc(w):
    assert is_modasc(w("141233551"))
    assert not is_modasc(w("1212"))
    assert is_modasc(w("1312"))
    assert is_modasc(())


def test_is_rgf(w):
    assert is_rgf(w("1212"))
    assert not is_rgf(w("1312"))
    assert is_rgf(w("123"))
    assert is_rgf(())
    assert not is_rgf(w("211"))


def test_weak_descents(w):
    assert weak_descents(w("83146527")) == frozenset({1, 2, 5, 6})
    assert weak_descents(w("12345")) == frozenset()
    assert weak_descents(w("111")) == frozenset({1, 2})


def test_ballot_roundtrip_worked_example(w):
    blocks = ({2, 3, 6}, {4}, {1, 7, 8}, {5, 9})
    assert ballot_encode(blocks) == w("311241334")
    assert ballot_decode(w("311241334")) == tuple(frozenset(b) for b in blocks)


def test_ballot_trivial_cases(w):
    n = 5
    assert ballot_decode((1,) * n) == (frozenset(range(1, n + 1)),)
    assert ballot_decode(w("12")) == (frozenset({1}), frozenset({2}))
    with pytest.raises(ValidationError):
        ballot_decode(w("113"))
    with pytest.raises(ValidationError):
        validate_ballot(({1}, set()))
    with pytest.raises(ValidationError):
        validate_ballot(({1, 2}, {2, 3}))


def test_require_cayley_distinct_errors():
    with pytest.raises(ValidationError, match="exceeds the length"):
        require_cayley((5, 1))
    with pytest.raises(ValidationError, match="not the interval"):
        require_cayley((1, 1, 3))


def test_rgf_prefix_stat(w):
    assert rgf_prefix_stat(w("123")) == 3
    assert rgf_prefix_stat(w("112")) == 1
    assert rgf_prefix_stat(w("121")) == 2
    with pytest.raises(DomainError):
        rgf_prefix_stat(w("1312"))
    with pytest.raises(DomainError):
        rgf_prefix_stat(())


def test_family_containments():
    # ModAsc, Rgf and Permutation all sit inside Cayley inside Endofunction
    from fishburn.enumeration import gen_cayley
    from fishburn.words import is_endofunction, is_permutation

    for n in range(6):
        for x in gen_cayley(n):
            assert is_endofunction(x)
            for member in (is_modasc, is_rgf, is_permutation):
                if member(x):
                    assert is_cayley(x)


def test_rgf3_prefix_census(w):
    census = {}
    for word in ("111", "112", "121", "122", "123"):
        k = rgf_prefix_stat(w(word))
        census[k] = census.get(k, 0) + 1
    assert census == {1: 2, 2: 2, 3: 1}
