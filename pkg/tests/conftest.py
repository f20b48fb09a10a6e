import pytest

from partlat.core import parse_literal


@pytest.fixture
def lit():
    return parse_literal
