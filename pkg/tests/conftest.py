from __future__ import annotations

import pytest

from lrc_lab import code as code_mod
from lrc_lab import field, search


@pytest.fixture(scope="session")
def gf2():
    return field.field_new(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return field.field_new(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return field.field_new(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return field.field_new(5, 1)


@pytest.fixture(scope="session")
def hamming74():
    c = code_mod.hamming_7_4()
    code_mod.min_distance(c)
    return c


@pytest.fixture(scope="session")
def ext_hamming84():
    c = code_mod.extended_hamming_8_4()
    code_mod.min_distance(c)
    return c


@pytest.fixture(scope="session")
def rep5(gf2):
    c = code_mod.repetition_code(gf2, 5)
    code_mod.min_distance(c)
    return c


@pytest.fixture(scope="session")
def fixture_12_6_6():
    """The [12,6,6;3] polynomial-evaluation code over GF(13)."""
    return search.evaluation_fixture(13, 3, 6)
