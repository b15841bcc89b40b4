import pytest

from fishburn.words import parse_word


@pytest.fixture
def w():
    """Shorthand word builder: w("1212") -> (1, 2, 1, 2)."""
    return parse_word
