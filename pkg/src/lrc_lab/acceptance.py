"""The acceptance suite behind `lrc-lab verify`.

Each criterion is a function returning a CriterionResult; the quick tier
runs trimmed sizes in under a minute, the full tier runs everything at
full size.  The pytest acceptance module drives the same functions, so
the CLI and the test suite cannot drift apart.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import bounds, code as code_mod, field, lrc, reports, search as search_mod, transform
from .code import LinearCode
from .errors import CeilingMismatch, EmptyResult, NoLocality, WorkbenchError


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _run(name: str, fn: Callable[[], str]) -> CriterionResult:
    t0 = time.time()
    try:
        detail = fn()
        return CriterionResult(name, True, detail, time.time() - t0)
    except AssertionError as exc:
        return CriterionResult(name, False, f"assertion failed: {exc}", time.time() - t0)
    except WorkbenchError as exc:
        return CriterionResult(name, False, f"{type(exc).__name__}: {exc}", time.time() - t0)


# ---------------------------------------------------------------------------
# shared fixtures

def fixture_12_6() -> LinearCode:
    return search_mod.evaluation_fixture(13, 3, 6)


def repetition_5_1() -> LinearCode:
    return code_mod.repetition_code(field.field_new(2, 1), 5)


# ---------------------------------------------------------------------------
# criteria

def criterion_1_repetition() -> str:
    rep = lrc.analyze(repetition_5_1())
    assert (rep.n, rep.k, rep.d, rep.r) == (5, 1, 5, 1), f"got {(rep.n, rep.k, rep.d, rep.r)}"
    assert rep.slack == 0 and rep.optimal, f"slack={rep.slack}, optimal={rep.optimal}"
    return "[5,1,5;1] analyzed: slack 0, locality 1, Singleton-optimal"


def criterion_2_nonexistence(qs: tuple[int, ...] = (2, 3), workers: int = 4) -> str:
    details = []
    for q in qs:
        task = search_mod.SearchTask(
            q=q, n=9, k=3, d_target=5, r_target=1, cap=10**9, workers=workers
        )
        out = search_mod.search_singleton_optimal(task)
        total = search_mod.gaussian_binomial(9, 3, q)
        assert out.status == "exhausted_none", f"q={q}: {out.status}"
        assert out.subspaces_visited == total, f"q={q}: visited {out.subspaces_visited} != {total}"
        assert out.certificate["visited"] == out.certificate["total"] == total
        details.append(f"q={q}: {total} subspaces, none optimal")
    return "; ".join(details)


def criterion_3_fixture() -> str:
    c = fixture_12_6()
    d = code_mod.min_distance(c)
    prof = lrc.locality(c)
    part = lrc.disjoint_partition(c, 3, profile=prof)
    assert (c.n, c.k, d, prof.r) == (12, 6, 6, 3), f"got {(c.n, c.k, d, prof.r)}"
    assert lrc.singleton_slack(12, 6, 6, 3) == 0
    assert part is not None and sorted(len(s) for s in part) == [4, 4, 4]
    return f"[12,6,6;3] verified; partition {[list(s.coords) for s in part]}"


def criterion_4_propagation() -> str:
    c = fixture_12_6()
    p2 = transform.propagate_optimal(c, 3, 2)
    assert p2.after == (8, 4, 4, 3) and p2.optimal_preserved, f"a=2 gave {p2.after}"
    p0 = transform.propagate_optimal(c, 3, 0)
    assert p0.after == (8, 6, 2, 3) and p0.optimal_preserved, f"a=0 gave {p0.after}"
    try:
        transform.propagate_optimal(c, 3, 3)
        raise AssertionError("a=3 did not raise CeilingMismatch")
    except CeilingMismatch:
        pass
    return "a=2 -> [8,4,4;3], a=0 -> [8,6,2;3], a=3 -> CeilingMismatch"


def criterion_5_reduction() -> str:
    c = fixture_12_6()
    red = transform.reduce_distance(c, 3)
    assert red.b == 2, f"b = {red.b}"
    assert len(red.steps) == 1, f"{len(red.steps)} steps"
    assert red.final == (8, 6, 2, 3), f"final {red.final}"
    assert red.steps[0].optimal_preserved
    return "one step -> Singleton-optimal [8,6,2;3], b = 2"


def criterion_6_ci_contract(n_codes: int = 100) -> str:
    checked = 0
    violations = 0
    seed = 0
    while checked < n_codes:
        seed += 1
        q = 2 if seed % 2 else 3
        rng = np.random.default_rng(seed)
        n = int(rng.integers(6, 11))
        k = int(rng.integers(2, min(5, n - 2) + 1))
        c = search_mod.random_code(q, n, k, seed=seed)
        if code_mod.min_distance(c) < 3:
            continue
        try:
            prof = lrc.locality(c)
            nf = lrc.build_normal_form(c, prof.r)
        except NoLocality:
            continue
        d = code_mod.min_distance(c)
        for size in (0, 1, 2):
            if size > nf.ell:
                continue
            try:
                rep = transform.derive_ci(nf, tuple(range(1, size + 1)), r=prof.r)
            except EmptyResult:
                continue
            if not rep.ok:
                violations += 1
        checked += 1
    assert violations == 0, f"{violations} contract violations in {checked} codes"
    return f"{checked} random codes (GF(2)/GF(3), d >= 3), |I| in {{0,1,2}}: no violations"


def criterion_7_normal_form_invariants() -> str:
    cases: list[tuple[LinearCode, int]] = []
    cases.append((fixture_12_6(), 3))
    cases.append((repetition_5_1(), 1))
    h74 = code_mod.hamming_7_4()
    cases.append((h74, 3))
    eh = code_mod.extended_hamming_8_4()
    cases.append((eh, 3))
    out = search_mod.search_singleton_optimal(
        search_mod.SearchTask(q=2, n=8, k=4, d_target=4, r_target=3, require_disjoint=True)
    )
    cases.extend((w.code, w.r) for w in out.witnesses)
    out2 = search_mod.search_singleton_optimal(
        search_mod.SearchTask(q=2, n=6, k=2, d_target=4, r_target=1)
    )
    cases.extend((w.code, w.r) for w in out2.witnesses)
    count = 0
    for c, r in cases:
        d = code_mod.min_distance(c)
        nf = lrc.build_normal_form(c, r)
        n, k, ell = c.n, c.k, nf.ell
        assert len(nf.a_set) + len(nf.b_set) == n
        assert (r + 1) * ell - len(nf.b_set) >= n
        assert n <= ell * (r + 1) and ell <= n - k
        if d >= 3:
            assert k * (r + 1) < n * r, f"Eq10 left end fails for {c}"
        count += 1
    return f"{count} normal forms checked (fixtures + search witnesses): all invariants hold"


def criterion_8_pipeline() -> str:
    c = fixture_12_6()
    nf = lrc.build_normal_form(c, 3)
    rep = transform.run_pipeline(nf)
    assert (rep.a, rep.b, rep.ell1, rep.h) == (12, 0, 3, 3), (
        f"(a,b,ell1,h) = {(rep.a, rep.b, rep.ell1, rep.h)}"
    )
    assert rep.ck is not None and rep.ck.n == 9 and rep.ck.k >= 6
    assert rep.ck_distance_claim == 3 and rep.ck_distance_actual >= 3 and rep.ck_claim_holds
    assert rep.identities["n_f_eq_d_minus_1_minus_eps"], "Eq 13 identity failed"
    return (
        f"a=12 b=0 ell1=3 h=3; C_K = [{rep.ck.n},{rep.ck.k},{rep.ck_distance_actual}]; "
        "n*f(n) = d-1-eps holds exactly"
    )


def criterion_9_divisibility_sweep(n_max: int = 12) -> str:
    checked = 0
    for n in range(4, n_max + 1):
        for r in (1, 2, 3):
            if n % (r + 1):
                continue
            # d >= 3 keeps the candidate flood manageable for r >= 2, where
            # no vectorized locality prefilter applies
            for d in range(3, n):
                k = lrc.solve_k(n, d, r)
                if k is None or k < 1:
                    continue
                if search_mod.gaussian_binomial(n, k, 2) > 3_000_000:
                    continue
                out = search_mod.search_singleton_optimal(
                    search_mod.SearchTask(q=2, n=n, k=k, d_target=d, r_target=r)
                )
                for w in out.witnesses:
                    assert lrc.divisibility_identity(w.code.n, w.code.k, w.d, w.r), (
                        f"identity fails for [{w.code.n},{w.code.k},{w.d};{w.r}]"
                    )
                    checked += 1
    assert checked > 0, "sweep found no witnesses at all"
    return f"identity n-k = n/(r+1) + d - 2 - floor((d-2)/(r+1)) holds for {checked} witnesses"


def criterion_10_bound_goldens() -> str:
    assert bounds.hamming_bound(2, 7, 3) == 16
    assert bounds.griesmer_bound(2, 4, 3) == 7
    assert bounds.window_bound(5, 4, 2) == 134
    assert bounds.mds_regime_bound(16, 6, 3) == 25
    assert bounds.mu_max_amds_length(2, 4) == (21, True)
    rows = bounds.classify_regime(5, 1)
    certified = [r for r in rows if r.kind == bounds.CERTIFIED]
    assert certified and certified[0].value == 8, f"classify(5,1) certified {certified}"
    return "hamming=16 griesmer=7 window<135 mds-regime=25 mu=21 classify(5,1): n<9"


def criterion_11_kernels(q_cap: int = 256, n_codes: int = 100, assoc_cap: int = 32) -> str:
    prime_powers = []
    for p in range(2, q_cap + 1):
        if not field.is_prime(p):
            continue
        m = 1
        while p**m <= q_cap:
            prime_powers.append((p, m))
            m += 1
    for p, m in prime_powers:
        fs = field.field_new(p, m)
        _field_axiom_sweep(fs, exhaustive_triples=fs.q <= assoc_cap)
    oracle_checked = 0
    for seed in range(n_codes):
        q = (2, 3, 4, 5)[seed % 4]
        rng = np.random.default_rng(1000 + seed)
        n = int(rng.integers(4, 9))
        k = int(rng.integers(1, min(4, n - 1) + 1))
        if q**k > 4096:
            continue
        c = search_mod.random_code(q, n, k, seed=1000 + seed)
        prod = field.vmatmul(c.field, c.generator.entries, c.parity_check.entries.T)
        assert not prod.any(), f"G H^T != 0 for {c}"
        d_fast = code_mod.min_distance(c)
        d_oracle = distance_by_column_dependency(c)
        assert d_fast == d_oracle, f"oracle disagrees on {c}: {d_fast} vs {d_oracle}"
        oracle_checked += 1
    return (
        f"{len(prime_powers)} fields swept (q <= {q_cap}); G H^T = 0 and the "
        f"column-dependency oracle agree on {oracle_checked} random codes"
    )


def _field_axiom_sweep(fs: field.FieldSpec, exhaustive_triples: bool) -> None:
    q = fs.q
    elems = np.arange(q, dtype=np.int64)
    # encode/decode round trip
    for v in range(q):
        assert field.encode(fs, field.decode(fs, v)) == v
    # a + (-a) = 0 and a * inv(a) = 1, exhaustively
    assert np.all(field.vadd(fs, elems, field.vneg(fs, elems)) == 0)
    for a in range(1, q):
        assert field.fe_mul(fs, a, field.fe_inv(fs, a)) == 1, f"inverse fails at {a} in {fs}"
        assert field.fe_pow(fs, a, q - 1) == 1, f"a^(q-1) != 1 at {a} in {fs}"
    # commutativity over all pairs
    aa = np.repeat(elems, q)
    bb = np.tile(elems, q)
    assert np.all(field.vadd(fs, aa, bb) == field.vadd(fs, bb, aa))
    assert np.all(field.vmul(fs, aa, bb) == field.vmul(fs, bb, aa))
    # associativity and distributivity: all triples for small q, sampled above
    if exhaustive_triples:
        a3 = np.repeat(elems, q * q)
        b3 = np.tile(np.repeat(elems, q), q)
        c3 = np.tile(elems, q * q)
    else:
        rng = np.random.default_rng(fs.q)
        a3 = rng.integers(0, q, 100_000)
        b3 = rng.integers(0, q, 100_000)
        c3 = rng.integers(0, q, 100_000)
    assert np.all(
        field.vadd(fs, field.vadd(fs, a3, b3), c3) == field.vadd(fs, a3, field.vadd(fs, b3, c3))
    )
    assert np.all(
        field.vmul(fs, field.vmul(fs, a3, b3), c3) == field.vmul(fs, a3, field.vmul(fs, b3, c3))
    )
    assert np.all(
        field.vmul(fs, a3, field.vadd(fs, b3, c3))
        == field.vadd(fs, field.vmul(fs, a3, b3), field.vmul(fs, a3, c3))
    )


def distance_by_column_dependency(c: LinearCode) -> int:
    """Independent distance oracle: least w such that some w columns of the
    parity-check matrix are linearly dependent."""
    from itertools import combinations

    from . import matrix as matrix_mod

    h = c.parity_check.entries
    if h.shape[0] == 0:
        return 1
    for w in range(1, c.n + 1):
        for cols in combinations(range(c.n), w):
            sub = h[:, list(cols)]
            if matrix_mod.rank(c.field, sub) < w:
                return w
    raise AssertionError("no dependent column set found")  # pragma: no cover


def criterion_12_determinism(qs: tuple[int, ...] = (2, 3), workers: tuple[int, ...] = (1, 4, 8)) -> str:
    details = []
    for q in qs:
        payloads = []
        for w in workers:
            task = search_mod.SearchTask(
                q=q, n=9, k=3, d_target=5, r_target=1, cap=10**9, workers=w
            )
            out = search_mod.search_singleton_optimal(task)
            payloads.append(reports.dump(reports.search_payload(out)).encode())
        assert all(p == payloads[0] for p in payloads), f"q={q}: outcomes differ across workers"
        details.append(f"q={q}: byte-identical across workers {workers}")
    return "; ".join(details)


# ---------------------------------------------------------------------------
# tiers

def quick_suite() -> list[tuple[str, Callable[[], str]]]:
    return [
        ("1 repetition [5,1,5;1]", criterion_1_repetition),
        ("2 nonexistence search (q=2)", lambda: criterion_2_nonexistence(qs=(2,), workers=2)),
        ("3 evaluation fixture [12,6,6;3]", criterion_3_fixture),
        ("4 propagation rule", criterion_4_propagation),
        ("5 distance reduction", criterion_5_reduction),
        ("6 deletion contract (20 codes)", lambda: criterion_6_ci_contract(20)),
        ("7 normal-form invariants", criterion_7_normal_form_invariants),
        ("8 column-operation pipeline", criterion_8_pipeline),
        ("9 divisibility sweep (n <= 8)", lambda: criterion_9_divisibility_sweep(8)),
        ("10 bound golden values", criterion_10_bound_goldens),
        ("11 kernels (q <= 64, 30 codes)", lambda: criterion_11_kernels(64, 30, 16)),
        ("12 determinism (q=2)", lambda: criterion_12_determinism(qs=(2,))),
    ]


def full_suite() -> list[tuple[str, Callable[[], str]]]:
    return [
        ("1 repetition [5,1,5;1]", criterion_1_repetition),
        ("2 nonexistence search (q=2,3)", criterion_2_nonexistence),
        ("3 evaluation fixture [12,6,6;3]", criterion_3_fixture),
        ("4 propagation rule", criterion_4_propagation),
        ("5 distance reduction", criterion_5_reduction),
        ("6 deletion contract (100 codes)", criterion_6_ci_contract),
        ("7 normal-form invariants", criterion_7_normal_form_invariants),
        ("8 column-operation pipeline", criterion_8_pipeline),
        ("9 divisibility sweep (n <= 12)", criterion_9_divisibility_sweep),
        ("10 bound golden values", criterion_10_bound_goldens),
        ("11 kernels (q <= 256, 100 codes)", criterion_11_kernels),
        ("12 determinism (q=2,3)", criterion_12_determinism),
    ]


def run_suite(tier: str) -> list[CriterionResult]:
    suite = quick_suite() if tier == "quick" else full_suite()
    return [_run(name, fn) for name, fn in suite]
