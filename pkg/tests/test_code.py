from __future__ import annotations

import numpy as np
import pytest

from lrc_lab import code as code_mod
from lrc_lab import field, matrix, search
from lrc_lab.code import SupportSet
from lrc_lab.errors import BudgetExceeded, RangeError, ZeroMatrix
from lrc_lab.matrix import GFMatrix

from oracles import oracle_distance_by_columns, oracle_min_distance, oracle_weight_distribution


def test_repetition_from_generator(gf2):
    c = code_mod.code_from_generator(GFMatrix(gf2, np.ones((1, 5), dtype=np.int64)))
    assert (c.n, c.k) == (5, 1)
    assert code_mod.min_distance(c) == 5


def test_hamming_from_parity(hamming74):
    assert (hamming74.n, hamming74.k) == (7, 4)
    assert code_mod.min_distance(hamming74) == 3


def test_duplicated_row_is_removed(gf2):
    g = GFMatrix(gf2, np.array([[1, 0, 1, 1], [1, 0, 1, 1], [0, 1, 1, 0]]))
    c = code_mod.code_from_generator(g)
    assert c.k == 2


def test_zero_generator_rejected(gf2):
    with pytest.raises(ZeroMatrix):
        code_mod.code_from_generator(GFMatrix(gf2, np.zeros((2, 4), dtype=np.int64)))


def test_dual_of_hamming_is_simplex(hamming74):
    d = code_mod.dual(hamming74)
    assert (d.n, d.k) == (7, 3)
    # brute-force enumeration of the 8 dual codewords
    assert oracle_weight_distribution(d) == {0: 1, 4: 7}
    assert code_mod.min_distance(d) == 4


def test_dual_of_repetition_is_sum_zero(rep5):
    d = code_mod.dual(rep5)
    assert (d.n, d.k) == (5, 4)
    assert code_mod.min_distance(d) == 2


def test_dual_involution_on_random_codes():
    for seed in range(100):
        q = (2, 3, 4, 5)[seed % 4]
        n = 4 + seed % 5
        k = 1 + seed % min(3, n - 1)
        c = search.random_code(q, n, k, seed=seed)
        dd = code_mod.dual(code_mod.dual(c))
        assert dd == c, f"dual(dual(C)) != C at seed {seed}"


def test_min_distance_examples(hamming74, rep5, gf2):
    assert code_mod.min_distance(hamming74) == 3
    assert code_mod.min_distance(rep5) == 5
    full = code_mod.full_space(gf2, 4)
    assert code_mod.min_distance(full) == 1


def test_min_distance_budget(hamming74):
    fresh = code_mod.code_from_generator(hamming74.generator)
    with pytest.raises(BudgetExceeded):
        code_mod.min_distance(fresh, budget=8)


def test_distance_two_oracle_agreement():
    # cross-check against the independent column-dependency oracle wherever
    # q^k <= 2^12
    checked = 0
    for seed in range(120):
        q = (2, 3, 4, 5)[seed % 4]
        n = 4 + seed % 5
        k = 1 + seed % min(4, n - 1)
        if q**k > 4096:
            continue
        c = search.random_code(q, n, k, seed=10_000 + seed)
        assert code_mod.min_distance(c) == oracle_distance_by_columns(c)
        checked += 1
    assert checked >= 100


def test_weight_distribution_examples(hamming74, gf2):
    assert code_mod.weight_distribution(hamming74) == {0: 1, 3: 7, 4: 7, 7: 1}
    rep2 = code_mod.repetition_code(gf2, 2)
    assert code_mod.weight_distribution(rep2) == {0: 1, 2: 1}


def test_weight_distribution_sums_to_qk():
    for seed in range(40):
        q = (2, 3, 4)[seed % 3]
        c = search.random_code(q, 5 + seed % 3, 2, seed=seed)
        wd = code_mod.weight_distribution(c)
        assert sum(wd.values()) == q**c.k
        assert wd == oracle_weight_distribution(c)


def test_puncture_and_shorten_examples(hamming74):
    p = code_mod.puncture(hamming74, 1)
    assert (p.n, p.k) == (6, 4)
    assert code_mod.min_distance(p) >= 2
    s = code_mod.shorten(hamming74, 1)
    assert (s.n, s.k) == (6, 3)
    assert code_mod.min_distance(s) >= 3
    with pytest.raises(RangeError):
        code_mod.puncture(hamming74, 3)  # s must stay below d


def test_puncture_shorten_properties():
    # d_new >= d - s after puncturing, d_new >= d after shortening
    per_field = {2: 0, 3: 0, 4: 0, 5: 0}
    seed = 0
    while min(per_field.values()) < 100:
        seed += 1
        q = (2, 3, 4, 5)[seed % 4]
        n = 5 + seed % 4
        k = 2 + seed % 2
        c = search.random_code(q, n, k, seed=seed)
        d = code_mod.min_distance(c)
        if d < 2:
            continue
        s = 1 + seed % (d - 1) if d > 1 else 1
        p = code_mod.puncture(c, s)
        assert code_mod.min_distance(p) >= d - s
        if k >= 2:
            sh = code_mod.shorten(c, 1)
            assert code_mod.min_distance(sh) >= d
        per_field[q] += 1


def test_explicit_coordinate_sets(hamming74):
    p = code_mod.puncture(hamming74, 2, coords=SupportSet((1, 3)))
    assert p.n == 5
    s = code_mod.shorten(hamming74, 2, coords=SupportSet((2, 5)))
    assert s.n == 5


def test_singleton_defect_and_classify(hamming74, rep5, gf2):
    assert code_mod.singleton_defect(hamming74) == 1
    assert code_mod.classify(hamming74) == ("AMDS", False)
    assert code_mod.singleton_defect(rep5) == 0
    assert code_mod.classify(rep5) == ("MDS", True)
    rep3 = code_mod.repetition_code(gf2, 3)
    assert code_mod.classify(rep3) == ("MDS", True)


def test_singleton_bound_on_random_codes():
    for seed in range(60):
        q = (2, 3, 5)[seed % 3]
        c = search.random_code(q, 6 + seed % 3, 2 + seed % 3, seed=seed)
        assert code_mod.min_distance(c) <= c.n - c.k + 1


def test_gh_transpose_is_always_zero():
    for seed in range(30):
        c = search.random_code(3, 7, 3, seed=seed)
        prod = field.vmatmul(c.field, c.generator.entries, c.parity_check.entries.T)
        assert not prod.any()


def test_code_equality_is_row_space_equality(gf2):
    g1 = GFMatrix(gf2, np.array([[1, 0, 1], [0, 1, 1]]))
    g2 = GFMatrix(gf2, np.array([[1, 1, 0], [0, 1, 1]]))
    assert code_mod.code_from_generator(g1) == code_mod.code_from_generator(g2)


def test_code_file_round_trip(tmp_path, hamming74, gf4):
    for c in (hamming74, search.random_code(4, 6, 3, seed=1)):
        path = tmp_path / "c.code"
        code_mod.write_code(path, c)
        again = code_mod.read_code(path)
        assert again == c
        path2 = tmp_path / "c2.code"
        code_mod.write_code(path2, again)
        assert path.read_bytes() == path2.read_bytes()
