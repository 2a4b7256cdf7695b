from __future__ import annotations

import numpy as np
import pytest

from lrc_lab import code as code_mod
from lrc_lab import field, lrc, search
from lrc_lab.errors import NegativeSlack, NoLocality, NotDivisible

from oracles import oracle_min_distance


# -- locality ----------------------------------------------------------------

def test_hamming_locality(hamming74):
    prof = lrc.locality(hamming74)
    assert prof.r == 3
    # all dual words have weight 4, so every support has size 4
    assert all(len(s) == 4 for s in prof.supports)
    assert prof.has_full_size_set


def test_repetition_locality(rep5):
    prof = lrc.locality(rep5)
    assert prof.r == 1
    assert all(len(s) == 2 for s in prof.supports)


def test_full_space_has_no_locality(gf2):
    with pytest.raises(NoLocality):
        lrc.locality(code_mod.full_space(gf2, 4))


def test_locality_is_minimal(hamming74, rep5):
    # dropping the cap below the reported r must fail the cover
    for c, r in ((hamming74, 3), (rep5, 1)):
        with pytest.raises(NoLocality):
            lrc.locality(c, r_max=r - 1)


def test_locality_minimal_on_random_codes():
    for seed in range(25):
        q = (2, 3, 4)[seed % 3]
        c = search.random_code(q, 6 + seed % 3, 2 + seed % 2, seed=seed)
        if code_mod.min_distance(c) < 2:
            continue
        r = lrc.locality(c).r
        if r == 0:
            continue
        with pytest.raises(NoLocality):
            lrc.locality(c, r_max=r - 1)


def test_recovery_witnesses_are_dual_codewords(fixture_12_6_6):
    _, fam = lrc.recovery_family(fixture_12_6_6, 3)
    g = fixture_12_6_6.generator.entries
    for supp, vec in fam.items():
        prod = field.vmatmul(fixture_12_6_6.field, g, vec.reshape(-1, 1))
        assert not prod.any()
        assert tuple(int(j) + 1 for j in np.nonzero(vec)[0]) == supp


def test_family_strategies_agree():
    # dual-enumeration and subset-kernel scans must find the same supports
    for seed in (1, 5, 9):
        c = search.random_code(2, 8, 4, seed=seed)
        minw_a, fam_a = lrc._family_by_dual_enum(c, 4)
        minw_b, fam_b = lrc._family_by_subsets(c, 4)
        assert set(fam_a) == set(fam_b)
        assert np.array_equal(np.minimum(minw_a, 9), np.minimum(minw_b, 9))


# -- disjoint partitions -------------------------------------------------------

def test_extended_hamming_partition(ext_hamming84):
    part = lrc.disjoint_partition(ext_hamming84, 3)
    assert part is not None
    assert sorted(len(s) for s in part) == [4, 4]
    covered = sorted(i for s in part for i in s)
    assert covered == list(range(1, 9))


def test_repetition_partition_parity(gf2):
    rep5 = code_mod.repetition_code(gf2, 5)
    code_mod.min_distance(rep5)
    assert lrc.disjoint_partition(rep5, 1) is None  # 5 is odd
    rep6 = code_mod.repetition_code(gf2, 6)
    code_mod.min_distance(rep6)
    part = lrc.disjoint_partition(rep6, 1)
    assert part is not None and len(part) == 3


# -- slack / solve_k / divisibility -------------------------------------------

def test_slack_examples():
    assert lrc.singleton_slack(5, 1, 5, 1) == 0
    assert lrc.singleton_slack(7, 4, 3, 3) == 0
    assert lrc.singleton_slack(7, 4, 3, 4) == 1
    with pytest.raises(NegativeSlack):
        lrc.singleton_slack(7, 4, 4, 3)


def test_is_singleton_optimal(hamming74, rep5):
    assert lrc.is_singleton_optimal(hamming74).optimal
    rep = lrc.is_singleton_optimal(rep5)
    assert rep.optimal and rep.r_true == 1 and rep.slack == 0


def test_solve_k_examples():
    assert lrc.solve_k(7, 3, 3) == 4
    assert lrc.solve_k(12, 6, 3) == 6
    assert lrc.solve_k(8, 5, 1) is None


def test_solve_k_uniqueness_sweep():
    # wherever solve_k answers, it is the unique zero-slack dimension in [1, n]
    for n in range(1, 65):
        for r in (1, 2, 3):
            for d in range(1, n + 1):
                zero = [
                    k
                    for k in range(1, n + 1)
                    if n - k - (k + r - 1) // r + 2 == d
                ]
                got = lrc.solve_k(n, d, r)
                if zero:
                    assert got == zero[0] and len(zero) == 1
                else:
                    assert got is None


def test_divisibility_identity_examples():
    assert lrc.divisibility_identity(12, 6, 6, 3)
    assert lrc.divisibility_identity(8, 4, 4, 3)
    with pytest.raises(NotDivisible):
        lrc.divisibility_identity(7, 4, 3, 3)


# -- normal form ---------------------------------------------------------------

def test_normal_form_hamming(hamming74):
    nf = lrc.build_normal_form(hamming74, 3)
    assert (nf.ell, nf.h) == (3, 0)
    assert len(nf.a_set) + len(nf.b_set) == 7
    # two weight-4 supports cover at most 6 of the 7 points, so ell must be 3
    assert nf.ell == 3


def test_normal_form_fixture(fixture_12_6_6):
    nf = lrc.build_normal_form(fixture_12_6_6, 3)
    assert (nf.ell, nf.h, len(nf.a_set), len(nf.b_set)) == (3, 3, 12, 0)


def test_normal_form_covers_and_is_basis(fixture_12_6_6, hamming74, rep5, ext_hamming84):
    from lrc_lab import matrix

    for c, r in [(fixture_12_6_6, 3), (hamming74, 3), (rep5, 1), (ext_hamming84, 3)]:
        nf = lrc.build_normal_form(c, r)
        union = set()
        for i, u in enumerate(nf.u_vectors):
            supp = set(int(j) + 1 for j in np.nonzero(u)[0])
            assert len(supp) <= r + 1
            if i:
                assert not supp <= union  # condition on successive supports
            union |= supp
        assert union == set(range(1, c.n + 1))
        assert matrix.same_row_space(c.field, nf.stacked().entries, c.parity_check.entries)
        # ceil(n/(r+1)) <= ell <= n-k
        assert -(-c.n // (r + 1)) <= nf.ell <= c.n - c.k


def test_eq10_on_search_witnesses():
    out = search.search_singleton_optimal(
        search.SearchTask(q=2, n=8, k=4, d_target=4, r_target=3)
    )
    assert out.status == "found"
    for w in out.witnesses[:5]:
        nf = lrc.build_normal_form(w.code, w.r)
        n, k, r = w.code.n, w.code.k, w.r
        assert k * (r + 1) < n * r
        assert n <= nf.ell * (r + 1)
        assert nf.ell <= n - k
        assert len(nf.a_set) + len(nf.b_set) == n
        assert (r + 1) * nf.ell - len(nf.b_set) >= n


def test_has_full_size_recovery_set(hamming74, rep5):
    full, regime = lrc.has_full_size_recovery_set(hamming74, 3)
    assert full and not regime  # 15 < 4 fails
    full, regime = lrc.has_full_size_recovery_set(rep5, 1)
    assert full and not regime  # 3 < 0 fails


def test_analyze_matches_oracle(fixture_12_6_6, hamming74):
    rep = lrc.analyze(fixture_12_6_6)
    assert rep.d == 6
    assert rep.optimal and rep.slack == 0
    assert rep.disjoint_partition is not None
    # slow-path oracle agreement on a size where raw enumeration is feasible
    reph = lrc.analyze(hamming74)
    assert reph.d == oracle_min_distance(hamming74) == 3
