import pytest

from fishburn.errors import FixtureMissingError, ValidationError
from fishburn.oeis import (
    SEQUENCES,
    compare_prefix,
    computed_sequence,
    load_fixture,
    oeis_check,
    parse_bfile,
    SequenceFixture,
)


def test_parse_bfile_offset_from_header():
    fx = parse_bfile("# A000000 offset 2; demo\n2 10\n3 20\n", "A000000", "test")
    assert fx.offset == 2
    assert fx.values == (10, 20)


def test_parse_bfile_offset_from_first_index():
    fx = parse_bfile("5 1\n6 1\n", "A000000", "test")
    assert fx.offset == 5


def test_parse_bfile_rejects_gaps():
    with pytest.raises(ValidationError):
        parse_bfile("0 1\n2 1\n", "A000000", "test")
    with pytest.raises(ValidationError):
        parse_bfile("", "A000000", "test")


def test_load_bundled_fixtures():
    for oeis_id in SEQUENCES:
        fx = load_fixture(oeis_id)
        assert fx.values
        assert fx.source == "bundled"


def test_load_missing_fixture():
    with pytest.raises(FixtureMissingError):
        load_fixture("A999999")


def test_compare_prefix():
    fx = SequenceFixture("A000000", 0, (1, 2, 3, 4), "test")
    ok = compare_prefix(fx, [1, 2, 3])
    assert ok.ok and ok.match_length == 3 and ok.first_mismatch is None
    bad = compare_prefix(fx, [1, 2, 9])
    assert not bad.ok and bad.first_mismatch == 2 and bad.match_length == 2


def test_computed_sequences_small():
    assert computed_sequence("A000110", 5) == [1, 1, 2, 5, 15, 52]
    assert computed_sequence("A000670", 4) == [1, 1, 3, 13, 75]
    assert computed_sequence("A022493", 5) == [1, 1, 2, 5, 15, 53]
    assert computed_sequence("A005493", 5) == [1, 3, 10, 37]
    assert computed_sequence("A137251", 4) == [1, 1, 1, 1, 3, 1, 1, 6, 7, 1]
    assert computed_sequence("A259691", 4) == [1, 1, 1, 2, 2, 1, 5, 6, 3, 1]
    with pytest.raises(ValidationError):
        computed_sequence("A000001", 3)


def test_oeis_check_small_prefixes():
    for oeis_id, n_max in (("A000110", 6), ("A000670", 5), ("A022493", 6),
                           ("A005493", 6), ("A137251", 5), ("A259691", 5),
                           ("A202062", 5)):
        report = oeis_check(oeis_id, n_max)
        assert report.ok, report.line()
