import pytest

from fishburn.bijections import (
    active_sites,
    insert_new_max,
    modasc_2213_to_rgf,
    modasc_212_to_rgf,
    modasc_2231_to_rgf,
    modasc_extract_2213,
    modasc_extract_2231,
    modasc_insert_2213,
    modasc_insert_2231,
    remove_unique_max,
    rgf_insert,
    rgf_to_modasc_212,
    rgf_to_modasc_2213,
    rgf_to_modasc_2231,
)
from fishburn.errors import DomainError
from fishburn.words import is_modasc, max_value


def test_insert_new_max(w):
    assert insert_new_max(w("111"), 3) == w("1112")
    assert insert_new_max(w("1121"), 1) == w("13121")
    assert insert_new_max(w("11"), 1) == w("121")
    with pytest.raises(DomainError, match="invalid site"):
        insert_new_max(w("12"), 1)  # gap after a strict ascent
    with pytest.raises(DomainError):
        insert_new_max(w("11"), 0)
    with pytest.raises(DomainError):
        insert_new_max(w("1212"), 4)  # not a modified ascent sequence


def test_remove_unique_max(w):
    assert remove_unique_max(w("121")) == w("11")
    assert remove_unique_max(w("1312")) == w("112")
    with pytest.raises(DomainError):
        remove_unique_max(w("12132"))  # contains 212
    with pytest.raises(DomainError):
        remove_unique_max(w("11"))  # two copies of the maximum


def test_active_sites(w):
    assert active_sites(w("1121")) == (1, 3, 4)
    assert active_sites(w("111")) == (1, 2, 3)
    assert active_sites(w("12")) == (2,)
    with pytest.raises(DomainError):
        active_sites(w("12132"))


def test_phi212_worked_examples(w):
    assert rgf_to_modasc_212(w("123224135")) == w("141233551")
    assert rgf_to_modasc_212(w("1232")) == w("1121")
    assert rgf_to_modasc_212((1,)) == (1,)
    assert rgf_to_modasc_212(()) == ()
    with pytest.raises(DomainError):
        rgf_to_modasc_212(w("1312"))


def test_phi212_inverse(w):
    assert modasc_212_to_rgf(w("141233551")) == w("123224135")
    assert modasc_212_to_rgf(w("1121")) == w("1232")
    assert modasc_212_to_rgf(()) == ()
    with pytest.raises(DomainError):
        modasc_212_to_rgf(w("12132"))


def test_rgf_insert(w):
    assert rgf_insert(w("123"), 2, 1) == w("1213")
    assert rgf_insert(w("12"), 1, 1) == w("112")
    assert rgf_insert(w("123"), 3, 3) == w("1233")
    with pytest.raises(DomainError):
        rgf_insert(w("112"), 2, 1)  # prefix statistic is only 1
    with pytest.raises(DomainError):
        rgf_insert(w("123"), 2, 3)  # i > k


def test_insert_2213_worked_examples(w):
    assert modasc_insert_2213(w("1112"), 2, 1) == w("12231")
    assert modasc_insert_2213(w("1512113421"), 2, 1) == w("12613224532")
    assert modasc_insert_2213(w("12144131111"), 6, 3) == w("131551242111")
    assert modasc_insert_2213(w("11"), 1, 1) == w("122")
    with pytest.raises(DomainError):
        modasc_insert_2213(w("1112"), 4, 4)  # only 3 ones
    with pytest.raises(DomainError):
        modasc_insert_2213(w("12213"), 1, 1)  # contains 2213


def test_insert_2231_worked_examples(w):
    assert modasc_insert_2231(w("1112"), 2, 1) == w("12213")
    assert modasc_insert_2231(w("11"), 1, 1) == w("122")
    assert modasc_insert_2231(w("111"), 3, 3) == w("1112")


def test_extract_2213_worked_examples(w):
    assert modasc_extract_2213(w("12613224532")) == (1, 5, 2, w("1512113421"))
    assert modasc_extract_2213(w("131551242111")) == (3, 7, 6, w("12144131111"))
    # the recovered j counts the letters at most 2 minus one, so the
    # all-ones parent of 122 reports j = 2
    assert modasc_extract_2213(w("122")) == (1, 2, 1, w("11"))
    with pytest.raises(DomainError):
        modasc_extract_2213(w("111"))  # base case has no 2


def test_extract_2231(w):
    assert modasc_extract_2231(w("12213")) == (1, 3, 2, w("1112"))
    assert modasc_extract_2231(w("122")) == (1, 2, 1, w("11"))
    with pytest.raises(DomainError):
        modasc_extract_2231(w("1"))


def test_phi_2213_examples(w):
    assert rgf_to_modasc_2213(w("123")) == w("111")
    assert rgf_to_modasc_2213(w("121")) == w("121")
    assert rgf_to_modasc_2213(w("112")) == w("122")
    assert rgf_to_modasc_2213(()) == ()
    assert rgf_to_modasc_2213((1,)) == (1,)


def test_phi_round_trips_small(w):
    from fishburn.enumeration import gen_rgf

    for n in range(7):
        for r in gen_rgf(n):
            for forward, backward, pattern in (
                    (rgf_to_modasc_212, modasc_212_to_rgf, w("212")),
                    (rgf_to_modasc_2213, modasc_2213_to_rgf, w("2213")),
                    (rgf_to_modasc_2231, modasc_2231_to_rgf, w("2231"))):
                x = forward(r)
                assert is_modasc(x)
                from fishburn.patterns import contains_classical
                assert not contains_classical(x, pattern)
                assert backward(x) == r
                if n:
                    assert max_value(r) + max_value(x) == n + 1


def test_insert_extract_round_trip_small(w):
    from fishburn.enumeration import gen_modasc_avoiding
    from fishburn.words import ones_count

    for n in range(1, 7):
        for x in gen_modasc_avoiding([w("2213")], n):
            j = ones_count(x)
            for k in range(1, j + 1):
                for i in range(1, k + 1):
                    y = modasc_insert_2213(x, k, i)
                    assert modasc_extract_2213(y) == (i, j, k, x)
