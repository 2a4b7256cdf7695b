"""Locality analysis and the parity-check normal form.

A coordinate i of a linear code can be repaired from a set R containing i
exactly when the dual code has a codeword whose support contains i and
lies inside R.  The locality of the code is therefore the least r such
that dual-codeword supports of size <= r+1 cover every coordinate, and
all analysis here works with that support family.

Two enumeration strategies find the family: scanning the dual code
directly (cheap when q^(n-k) is small) or testing generator-column
dependencies over coordinate subsets (cheap when C(n, r+1) is small);
the cheaper one is picked automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, ceil

import numpy as np

from . import code as code_mod
from . import field, matrix
from .code import LinearCode, SupportSet, support_of
from .errors import (
    InvariantViolation,
    NegativeSlack,
    NoLocality,
    NotDivisible,
    SearchBudgetExceeded,
)
from .matrix import GFMatrix

DUAL_ENUM_CAP = 1 << 20
DEFAULT_PARTITION_NODE_CAP = 1 << 20


# ---------------------------------------------------------------------------
# bound arithmetic (shared by bounds.py and the search filters)

def singleton_slack(n: int, k: int, d: int, r: int) -> int:
    """Gap between the locality-aware Singleton bound and d; >= 0 for real codes."""
    slack = (n - k - ceil(k / r) + 2) - d
    if slack < 0:
        raise NegativeSlack(
            f"d = {d} exceeds n-k-ceil(k/r)+2 = {d + slack} for [{n},{k};r={r}]: "
            "the claimed locality is below the true locality"
        )
    return slack


def solve_k(n: int, d: int, r: int) -> int | None:
    """The unique k in [1, n] with d = n - k - ceil(k/r) + 2, if any.

    k + ceil(k/r) is strictly increasing in k, so at most one k matches.
    """
    for k in range(1, n + 1):
        val = n - k - ceil(k / r) + 2
        if val == d:
            return k
        if val < d:
            return None
    return None


def divisibility_identity(n: int, k: int, d: int, r: int) -> bool:
    """Check n - k = n/(r+1) + d - 2 - floor((d-2)/(r+1)); requires (r+1) | n."""
    if n % (r + 1):
        raise NotDivisible(f"(r+1) = {r + 1} does not divide n = {n}")
    return n - k == n // (r + 1) + d - 2 - (d - 2) // (r + 1)


# ---------------------------------------------------------------------------
# recovery-support family

def _family_by_dual_enum(c: LinearCode, size_cap: int) -> tuple[np.ndarray, dict]:
    """Scan all dual codewords; returns (per-coord min weight, support -> witness)."""
    minw = np.full(c.n, c.n + 1, dtype=np.int64)
    fam: dict[tuple[int, ...], np.ndarray] = {}
    h = c.parity_check.entries
    q = c.field.q
    for msgs in code_mod._message_batches(q, c.n - c.k):
        words = field.vmatmul(c.field, msgs, h)
        weights = np.count_nonzero(words, axis=1)
        for row in np.nonzero(weights <= size_cap)[0]:
            w = int(weights[row])
            vec = words[row]
            supp = tuple(int(j) + 1 for j in np.nonzero(vec)[0])
            np.minimum.at(minw, [s - 1 for s in supp], w)
            if supp not in fam:
                fam[supp] = vec.copy()
    return minw, fam


def _full_support_kernel_vector(c: LinearCode, cols0: tuple[int, ...]) -> np.ndarray | None:
    """A dual codeword supported exactly on the given columns, if one exists."""
    fs = c.field
    sub = c.generator.entries[:, list(cols0)]
    ker = matrix.kernel_basis(fs, sub)
    if ker.shape[0] == 0:
        return None
    for msgs in code_mod._message_batches(fs.q, ker.shape[0], batch=1 << 12):
        vecs = field.vmatmul(fs, msgs, ker)
        hits = np.nonzero(np.count_nonzero(vecs, axis=1) == len(cols0))[0]
        if hits.size:
            out = np.zeros(c.n, dtype=np.int64)
            out[list(cols0)] = vecs[hits[0]]
            return out
    return None


def _family_by_subsets(c: LinearCode, size_cap: int) -> tuple[np.ndarray, dict]:
    minw = np.full(c.n, c.n + 1, dtype=np.int64)
    fam: dict[tuple[int, ...], np.ndarray] = {}
    for s in range(1, size_cap + 1):
        for cols0 in combinations(range(c.n), s):
            vec = _full_support_kernel_vector(c, cols0)
            if vec is None:
                continue
            supp = tuple(j + 1 for j in cols0)
            fam[supp] = vec
            np.minimum.at(minw, list(cols0), s)
    return minw, fam


def _scan_cost_dual(c: LinearCode) -> int:
    return code_mod.projective_count(c.field.q, c.n - c.k) * c.n


def _scan_cost_subsets(c: LinearCode, size_cap: int) -> int:
    return sum(comb(c.n, s) * s * s * c.k for s in range(1, size_cap + 1))


def recovery_family(c: LinearCode, r: int) -> tuple[np.ndarray, dict[tuple[int, ...], np.ndarray]]:
    """All dual-codeword supports of size <= r+1, with one witness vector each.

    Also returns the per-coordinate minimum dual-support size (capped at n+1
    when a coordinate is not covered at this r).
    """
    if c.n - c.k == 0:
        raise NoLocality("dual code is {0}; no recovery sets exist")
    size_cap = min(r + 1, c.n)
    if _scan_cost_dual(c) <= min(_scan_cost_subsets(c, size_cap), DUAL_ENUM_CAP * c.n):
        minw, fam = _family_by_dual_enum(c, size_cap)
    else:
        minw, fam = _family_by_subsets(c, size_cap)
    for supp, vec in fam.items():
        check = field.vmatmul(c.field, c.generator.entries, vec.reshape(-1, 1))
        if np.any(check):
            raise InvariantViolation("recovery witness is not a dual codeword")
        if support_of(vec).coords != supp:
            raise InvariantViolation("recovery witness support mismatch")
    return minw, fam


@dataclass
class LocalityProfile:
    """The recovery-support family of a code at its minimum locality."""

    r: int
    supports: list[SupportSet]
    witnesses: dict[tuple[int, ...], np.ndarray]
    cover_witness: list[SupportSet]
    has_full_size_set: bool
    per_coord_r: list[int]


def _greedy_cover(n: int, supports: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Cover [n] picking, per lowest uncovered coordinate, the support adding
    the most new coordinates; ties broken by lexicographically smallest."""
    covered: set[int] = set()
    chosen: list[tuple[int, ...]] = []
    while len(covered) < n:
        i = min(set(range(1, n + 1)) - covered)
        cands = [s for s in supports if i in s]
        if not cands:
            raise NoLocality(f"coordinate {i} is in no recovery support")
        best = min(cands, key=lambda s: (-len(set(s) - covered), s))
        chosen.append(best)
        covered |= set(best)
    return chosen


def locality(c: LinearCode, r_max: int | None = None) -> LocalityProfile:
    """Minimum locality of the code with witnesses, or NoLocality within r_max."""
    r_cap = c.n - 1 if r_max is None else r_max
    if r_cap < 0 or c.n - c.k == 0:
        raise NoLocality("dual code is {0}; no recovery sets exist")
    minw, fam = recovery_family(c, r_cap)
    worst = int(minw.max())
    if worst > r_cap + 1:
        missing = [int(i) + 1 for i in np.nonzero(minw > r_cap + 1)[0]]
        raise NoLocality(f"coordinates {missing} have no recovery set of size <= {r_cap + 1}")
    r = worst - 1
    supports = sorted(s for s in fam if len(s) <= r + 1)
    witnesses = {s: fam[s] for s in supports}
    cover = _greedy_cover(c.n, supports)
    return LocalityProfile(
        r=r,
        supports=[SupportSet(s) for s in supports],
        witnesses=witnesses,
        cover_witness=[SupportSet(s) for s in cover],
        has_full_size_set=any(len(s) == r + 1 for s in supports),
        per_coord_r=[int(w) - 1 for w in minw],
    )


def has_full_size_recovery_set(c: LinearCode, r: int, budget: int | None = None) -> tuple[bool, bool]:
    """(some recovery set has size exactly r+1, regime r^2+2r < n-d holds)."""
    _, fam = recovery_family(c, r)
    full = any(len(s) == r + 1 for s in fam)
    d = code_mod.min_distance(c) if budget is None else code_mod.min_distance(c, budget)
    regime = r * r + 2 * r < c.n - d
    return full, regime


# ---------------------------------------------------------------------------
# disjoint recovery sets: exact cover by supports

def disjoint_partition(
    c: LinearCode,
    r: int,
    profile: LocalityProfile | None = None,
    node_cap: int = DEFAULT_PARTITION_NODE_CAP,
) -> list[SupportSet] | None:
    """Partition [n] into recovery supports of size <= r+1, or None.

    Deterministic depth-first exact cover: always branch on the lowest
    uncovered coordinate, trying candidate supports in sorted order.
    """
    if profile is not None and profile.r <= r:
        supports = [s.coords for s in profile.supports]
    else:
        _, fam = recovery_family(c, r)
        supports = sorted(fam)
    by_coord: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(1, c.n + 1)}
    for s in supports:
        for i in s:
            by_coord[i].append(s)
    nodes = 0

    def dfs(covered: frozenset[int], chosen: list[tuple[int, ...]]):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise SearchBudgetExceeded(f"exact-cover search exceeded {node_cap} nodes")
        if len(covered) == c.n:
            return list(chosen)
        i = min(j for j in range(1, c.n + 1) if j not in covered)
        for s in by_coord[i]:
            if covered.isdisjoint(s):
                chosen.append(s)
                got = dfs(covered | frozenset(s), chosen)
                if got is not None:
                    return got
                chosen.pop()
        return None

    sol = dfs(frozenset(), [])
    return None if sol is None else [SupportSet(s) for s in sol]


# ---------------------------------------------------------------------------
# Singleton-type optimality

@dataclass
class OptimalityReport:
    n: int
    k: int
    d: int
    r_true: int
    r_claimed: int | None
    slack: int
    optimal: bool
    assumptions: dict[str, bool]


def is_singleton_optimal(
    c: LinearCode,
    r: int | None = None,
    profile: LocalityProfile | None = None,
) -> OptimalityReport:
    """Evaluate slack at the true locality (the caller's r is only cross-checked)."""
    prof = profile or locality(c)
    d = code_mod.min_distance(c)
    slack = singleton_slack(c.n, c.k, d, prof.r)
    assumptions = {
        "r_lt_k": prof.r < c.k,
        "n_ge_2r2": c.n >= 2 * (prof.r + 1),
        "d_ge_3": d >= 3,
        "divisible": c.n % (prof.r + 1) == 0,
    }
    return OptimalityReport(
        n=c.n,
        k=c.k,
        d=d,
        r_true=prof.r,
        r_claimed=r,
        slack=slack,
        optimal=slack == 0 and (r is None or r == prof.r),
        assumptions=assumptions,
    )


# ---------------------------------------------------------------------------
# the parity-check normal form H = [H1; H2]

@dataclass
class NormalForm:
    """Dual basis whose first ell rows greedily cover [n] by small supports.

    u_vectors are dual codewords with supports of size <= r+1; each support
    is not contained in the union of its predecessors, the union is all of
    [n], and [H1; H2] is a basis of the dual code.  A is the set of columns
    with exactly one nonzero entry in H1, B the rest.
    """

    code: LinearCode
    r: int
    u_vectors: list[np.ndarray]
    h1: GFMatrix
    h2: GFMatrix
    ell: int
    h: int
    a_set: SupportSet
    b_set: SupportSet

    def stacked(self) -> GFMatrix:
        fs = self.code.field
        if self.h == 0:
            return self.h1
        return GFMatrix(fs, np.vstack([self.h1.entries, self.h2.entries]))


def build_normal_form(c: LinearCode, r: int, check_eq10: bool | None = None) -> NormalForm:
    """Greedy construction of the [H1; H2] form at locality cap r."""
    minw, fam = recovery_family(c, r)
    if int(minw.max()) > r + 1:
        raise NoLocality(f"code does not have locality {r}")
    supports = sorted(fam)
    chosen = _greedy_cover(c.n, supports)
    us = [fam[s] for s in chosen]
    ell = len(us)
    fs = c.field
    h1 = np.array(us, dtype=np.int64)

    # complete to a basis of the dual with parity-check rows
    h2_rows = []
    current = h1.copy()
    base_rank = matrix.rank(fs, current)
    if base_rank != ell:
        raise InvariantViolation("greedy dual words are not independent")
    for row in c.parity_check.entries:
        if base_rank == c.n - c.k:
            break
        if not matrix.in_row_space(fs, current, row):
            h2_rows.append(row)
            current = np.vstack([current, row.reshape(1, -1)])
            base_rank += 1
    h = len(h2_rows)
    if ell + h != c.n - c.k:
        raise InvariantViolation("H1/H2 do not span the dual code")

    counts = np.count_nonzero(h1, axis=0)
    if np.any(counts == 0):
        raise InvariantViolation("H1 columns do not cover [n]")
    a_set = SupportSet(tuple(int(j) + 1 for j in np.nonzero(counts == 1)[0]))
    b_set = SupportSet(tuple(int(j) + 1 for j in np.nonzero(counts >= 2)[0]))

    nf = NormalForm(
        code=c,
        r=r,
        u_vectors=us,
        h1=GFMatrix(fs, h1),
        h2=GFMatrix(fs, np.array(h2_rows, dtype=np.int64).reshape(h, c.n)),
        ell=ell,
        h=h,
        a_set=a_set,
        b_set=b_set,
    )
    _check_normal_form(nf, check_eq10)
    return nf


def _check_normal_form(nf: NormalForm, check_eq10: bool | None) -> None:
    c, r, ell = nf.code, nf.r, nf.ell
    n, k = c.n, c.k
    if len(nf.a_set) + len(nf.b_set) != n:
        raise InvariantViolation("|A| + |B| != n")
    if (r + 1) * ell - len(nf.b_set) < n:
        raise InvariantViolation("(r+1) ell - |B| < n")
    if not n <= ell * (r + 1):
        raise InvariantViolation("ell < n/(r+1)")
    if ell > n - k:
        raise InvariantViolation("ell > n - k")
    if check_eq10 is None:
        check_eq10 = c.d_cache is not None and c.d_cache >= 3
    if check_eq10 and not k * (r + 1) < n * r:
        raise InvariantViolation("k/r < n/(r+1) fails despite d >= 3")


# ---------------------------------------------------------------------------
# whole-code analysis report (the CLI `analyze` payload)

@dataclass
class AnalyzeReport:
    n: int
    k: int
    d: int
    r: int
    slack: int
    optimal: bool
    ell: int
    h: int
    a: int
    b: int
    disjoint_partition: list[list[int]] | None
    assumptions: dict[str, bool]


def analyze(
    c: LinearCode,
    r: int | None = None,
    with_partition: bool = True,
    node_cap: int = DEFAULT_PARTITION_NODE_CAP,
) -> AnalyzeReport:
    """Full locality analysis; r=None computes the true locality."""
    prof = locality(c, r_max=r)
    d = code_mod.min_distance(c)
    opt = is_singleton_optimal(c, r=r, profile=prof)
    nf = build_normal_form(c, prof.r)
    partition = None
    if with_partition:
        try:
            sol = disjoint_partition(c, prof.r, profile=prof, node_cap=node_cap)
        except SearchBudgetExceeded:
            sol = None
        partition = None if sol is None else [list(s.coords) for s in sol]
    return AnalyzeReport(
        n=c.n,
        k=c.k,
        d=d,
        r=prof.r,
        slack=opt.slack,
        optimal=opt.optimal,
        ell=nf.ell,
        h=nf.h,
        a=len(nf.a_set),
        b=len(nf.b_set),
        disjoint_partition=partition,
        assumptions=opt.assumptions,
    )
