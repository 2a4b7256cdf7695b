from __future__ import annotations

import numpy as np
import pytest

from lrc_lab import field, matrix
from lrc_lab.errors import DimensionMismatch
from lrc_lab.matrix import GFMatrix

from oracles import oracle_rank


def test_entries_are_validated(gf2):
    with pytest.raises(DimensionMismatch):
        GFMatrix(gf2, np.array([[0, 2]]))
    with pytest.raises(DimensionMismatch):
        GFMatrix(gf2, np.array([1, 0]))


def test_rref_idempotent_and_rank(gf3):
    rng = np.random.default_rng(3)
    for _ in range(50):
        m = rng.integers(0, 3, (4, 6))
        red, piv = matrix.rref(gf3, m)
        red2, piv2 = matrix.rref(gf3, red)
        assert np.array_equal(red, red2) and piv == piv2
        assert len(piv) == oracle_rank(gf3, m.tolist())


def test_kernel_is_annihilated(gf4):
    rng = np.random.default_rng(4)
    for _ in range(25):
        m = rng.integers(0, 4, (3, 6))
        ker = matrix.kernel_basis(gf4, m)
        assert ker.shape[0] == 6 - matrix.rank(gf4, m)
        if ker.shape[0]:
            prod = field.vmatmul(gf4, m, ker.T)
            assert not prod.any()


def test_row_space_comparison(gf2):
    a = np.array([[1, 0, 1], [0, 1, 1]])
    b = np.array([[1, 1, 0], [0, 1, 1]])
    assert matrix.same_row_space(gf2, a, b)
    c = np.array([[1, 0, 0], [0, 1, 1]])
    assert not matrix.same_row_space(gf2, a, c)


def test_file_round_trip_is_byte_idempotent(tmp_path, gf5):
    rng = np.random.default_rng(5)
    m = GFMatrix(gf5, rng.integers(0, 5, (3, 7)))
    p1 = tmp_path / "m1.matrix"
    p2 = tmp_path / "m2.matrix"
    matrix.write_matrix(p1, m)
    again = matrix.read_matrix(p1)
    matrix.write_matrix(p2, again)
    assert p1.read_bytes() == p2.read_bytes()
    assert again == m


def test_file_resolves_extension_fields(tmp_path, gf4):
    m = GFMatrix(gf4, np.array([[0, 1, 2, 3]]))
    path = tmp_path / "m.matrix"
    matrix.write_matrix(path, m)
    back = matrix.read_matrix(path)
    assert back.field == gf4
    assert back == m
