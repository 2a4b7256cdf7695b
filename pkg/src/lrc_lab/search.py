"""Exhaustive and randomized search for Singleton-optimal codes.

Subspaces of GF(q)^n are enumerated exactly once each through their
reduced-row-echelon canonical generator matrix, streamed pattern by
pivot pattern in lexicographic order.  The counter layout inside one
pattern is fixed (row 0 occupies the least significant base-q digits),
so the enumeration order, the shard boundaries, and therefore the full
SearchOutcome are independent of the worker count.

The hot filter never materializes matrices: each row of a candidate is a
packed base-q group value, and codeword weights come from lookup tables
(digit-sum and nonzero-count) indexed by those values.  Candidates that
survive the distance filter (and, for locality-1 tasks, a column-pairing
cover filter) are re-verified one by one through the ordinary slow path:
exact minimum distance, exact locality, zero slack, optional divisibility
and disjoint-recovery checks.  A search that exhausts every subspace with
no witness returns a certificate whose total is recomputed independently
from the Gaussian binomial.
"""

from __future__ import annotations

import multiprocessing as mp
import os
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import ceil, prod

import numpy as np

from . import code as code_mod
from . import field, lrc, matrix
from .code import LinearCode, SupportSet
from .errors import (
    CapExceeded,
    DimensionMismatch,
    NoLocality,
    ParameterUnsupported,
    RangeError,
)
from .field import FieldSpec
from .matrix import GFMatrix

DEFAULT_SUBSPACE_CAP = 10**8
SHARD_SIZE = 1 << 19
TABLE_VALUE_CAP = 1 << 11  # build weight tables only while q^(n-k) stays below this


def subspace_cap() -> int:
    env = os.environ.get("LRC_LAB_CAP")
    return int(env) if env else DEFAULT_SUBSPACE_CAP


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n (exact big integer)."""
    if not 0 <= k <= n:
        return 0
    num = prod(q**n - q**i for i in range(k))
    den = prod(q**k - q**i for i in range(k))
    return num // den


# ---------------------------------------------------------------------------
# canonical enumeration layout

@dataclass(frozen=True)
class _Pattern:
    pivots: tuple[int, ...]
    nonpivots: tuple[int, ...]
    offsets: tuple[int, ...]   # per row: first usable non-pivot digit position
    sizes: tuple[int, ...]     # per row: number of free digits
    count: int                 # q^sum(sizes)


def _pattern(q: int, n: int, pivots: tuple[int, ...]) -> _Pattern:
    nonpivots = tuple(j for j in range(n) if j not in pivots)
    offsets = []
    sizes = []
    for p in pivots:
        off = sum(1 for j in nonpivots if j < p)
        offsets.append(off)
        sizes.append(len(nonpivots) - off)
    return _Pattern(pivots, nonpivots, tuple(offsets), tuple(sizes), q ** sum(sizes))


def _patterns(q: int, n: int, k: int) -> list[_Pattern]:
    return [_pattern(q, n, piv) for piv in combinations(range(n), k)]


def decode_counter(q: int, n: int, pat: _Pattern, counter: int) -> np.ndarray:
    """The canonical RREF generator matrix for one counter value."""
    k = len(pat.pivots)
    g = np.zeros((k, n), dtype=np.int64)
    for i, p in enumerate(pat.pivots):
        g[i, p] = 1
    for i in range(k):
        group = counter % q ** pat.sizes[i]
        counter //= q ** pat.sizes[i]
        for s in range(pat.sizes[i]):
            g[i, pat.nonpivots[pat.offsets[i] + s]] = group % q
            group //= q
    return g


def enumerate_subspaces(q: int, n: int, k: int, cap: int | None = None):
    """Yield every k-dimensional subspace of GF(q)^n exactly once, as its
    canonical RREF generator matrix, in a fixed deterministic order."""
    total = gaussian_binomial(n, k, q)
    limit = cap if cap is not None else subspace_cap()
    if total > limit:
        raise CapExceeded(f"{total} subspaces exceed cap {limit}")
    for pat in _patterns(q, n, k):
        for counter in range(pat.count):
            yield decode_counter(q, n, pat, counter)


# ---------------------------------------------------------------------------
# vectorized shard filter

class _Scanner:
    """Per-process state: weight tables and message list for one task."""

    def __init__(self, fs: FieldSpec, n: int, k: int, d_target: int, r_target: int):
        self.fs = fs
        self.n = n
        self.k = k
        self.d = d_target
        self.r = r_target
        q = fs.q
        w = n - k
        self.w = w
        self.use_tables = q**w <= TABLE_VALUE_CAP
        self.msgs = self._projective_messages(q, k)
        if self.use_tables:
            self._build_tables()

    @staticmethod
    def _projective_messages(q: int, k: int) -> np.ndarray:
        out = []
        for lead in range(k):
            for v in range(q ** (k - 1 - lead)):
                m = [0] * k
                m[lead] = 1
                t = v
                for j in range(lead + 1, k):
                    m[j] = t % q
                    t //= q
                out.append(m)
        return np.array(out, dtype=np.int64)

    def _build_tables(self) -> None:
        fs, w = self.fs, self.w
        q = fs.q
        big = q**w
        vals = np.arange(big, dtype=np.int64)
        dig = np.zeros((big, w), dtype=np.int64)
        t = vals.copy()
        for j in range(w):
            dig[:, j] = t % q
            t //= q
        enc = q ** np.arange(w, dtype=np.int64)
        self.dig = dig
        self.nnz = (dig != 0).sum(axis=1).astype(np.uint8)
        add = field.vadd(fs, dig[:, None, :], dig[None, :, :])
        self.sumval = (add @ enc).astype(np.int32)
        self.scale = {1: vals.astype(np.int32)}
        for s in range(2, q):
            self.scale[s] = (field.vmul(fs, dig, np.int64(s)) @ enc).astype(np.int32)

    # -- group extraction ---------------------------------------------------

    def _groups(self, pat: _Pattern, counters: np.ndarray) -> list[np.ndarray]:
        q = self.fs.q
        out = []
        c = counters.copy()
        for i in range(self.k):
            size = pat.sizes[i]
            g = c % q**size
            c //= q**size
            out.append(g * q ** pat.offsets[i])  # embed into the full w-digit space
        return out

    def scan(self, pat: _Pattern, start: int, end: int) -> tuple[int, list[int]]:
        """Filter one counter range; returns (visited, surviving counters)."""
        counters = np.arange(start, end, dtype=np.int64)
        if self.use_tables:
            alive = self._filter_tables(pat, counters)
        else:
            alive = self._filter_direct(pat, counters)
        return end - start, [int(x) for x in counters[alive]]

    def _filter_tables(self, pat: _Pattern, counters: np.ndarray) -> np.ndarray:
        groups = self._groups(pat, counters)
        nnz = self.nnz
        alive = np.ones(counters.shape[0], dtype=bool)
        for e in groups:
            alive &= nnz[e] >= self.d - 1
        if not alive.any():
            return alive
        idx = np.nonzero(alive)[0]
        groups = [e[idx] for e in groups]
        sub_alive = np.ones(idx.shape[0], dtype=bool)
        for m in self.msgs:
            nzc = [i for i in range(self.k) if m[i]]
            if len(nzc) < 2:
                continue
            acc = self.scale[int(m[nzc[0]])][groups[nzc[0]]]
            for i in nzc[1:]:
                acc = self.sumval[acc, self.scale[int(m[i])][groups[i]]]
            sub_alive &= len(nzc) + nnz[acc] >= self.d
        if self.r == 1 and sub_alive.any():
            keep = np.nonzero(sub_alive)[0]
            rows = [self.dig[e[keep]] for e in groups]  # k arrays of (B, w) symbols
            sub_alive[keep] = self._cover_filter(rows)
        out = np.zeros_like(alive)
        out[idx] = sub_alive
        return out

    def _filter_direct(self, pat: _Pattern, counters: np.ndarray) -> np.ndarray:
        """Fallback without big tables: materialize per-row symbol arrays."""
        fs, q = self.fs, self.fs.q
        rows = []
        c = counters.copy()
        for i in range(self.k):
            size = pat.sizes[i]
            g = c % q**size
            c //= q**size
            sym = np.zeros((counters.shape[0], self.w), dtype=np.int64)
            t = g.copy()
            for s in range(size):
                sym[:, pat.offsets[i] + s] = t % q
                t //= q
            rows.append(sym)
        alive = np.ones(counters.shape[0], dtype=bool)
        for m in self.msgs:
            nzc = [i for i in range(self.k) if m[i]]
            acc = field.vmul(fs, rows[nzc[0]], np.int64(m[nzc[0]]))
            for i in nzc[1:]:
                acc = field.vadd(fs, acc, field.vmul(fs, rows[i], np.int64(m[i])))
            wt = len(nzc) + (acc != 0).sum(axis=1)
            alive &= wt >= self.d
        if self.r == 1 and alive.any():
            keep = np.nonzero(alive)[0]
            alive[keep] = self._cover_filter([s[keep] for s in rows])
        return alive

    def _cover_filter(self, rows: list[np.ndarray]) -> np.ndarray:
        """Locality <= 1: every column is zero or projectively repeated.

        A weight-<=2 dual word through column j exists iff column j is zero
        or some other column is a scalar multiple of it; pivot columns are
        the unit vectors, so one shared code table covers both kinds.
        """
        fs, q, k = self.fs, self.fs.q, self.k
        b = rows[0].shape[0]
        cols = np.stack(rows, axis=2)                      # (B, w, k) symbols
        nz = cols != 0
        first = np.argmax(nz, axis=2)                      # first nonzero row
        lead = np.take_along_axis(cols, first[:, :, None], axis=2)[:, :, 0]
        inv = np.array([0] + [field.fe_inv(fs, v) for v in range(1, q)], dtype=np.int64)
        norm = field.vmul(fs, cols, inv[lead][:, :, None])
        enc = q ** np.arange(k, dtype=np.int64)
        codes = norm @ enc                                 # (B, w)
        pivot_codes = np.broadcast_to(enc[None, :], (b, k))
        allc = np.concatenate([codes, pivot_codes], axis=1)
        s = np.sort(allc, axis=1)
        eq_next = np.zeros(s.shape, dtype=bool)
        eq_next[:, :-1] = s[:, :-1] == s[:, 1:]
        eq_prev = np.zeros(s.shape, dtype=bool)
        eq_prev[:, 1:] = eq_next[:, :-1]
        isolated = ~(eq_next | eq_prev) & (s != 0)
        return ~isolated.any(axis=1)


# ---------------------------------------------------------------------------
# multiprocessing plumbing

_WORKER: _Scanner | None = None
_WORKER_PATTERNS: list[_Pattern] | None = None


def _init_worker(q: int, n: int, k: int, d_target: int, r_target: int) -> None:
    global _WORKER, _WORKER_PATTERNS
    fs = field.field_from_order(q)
    _WORKER = _Scanner(fs, n, k, d_target, r_target)
    _WORKER_PATTERNS = _patterns(q, n, k)


def _scan_shard(shard: tuple[int, int, int]) -> tuple[int, list[int], int]:
    pat_idx, start, end = shard
    visited, survivors = _WORKER.scan(_WORKER_PATTERNS[pat_idx], start, end)
    return visited, survivors, pat_idx


# ---------------------------------------------------------------------------
# the search task

@dataclass
class SearchTask:
    q: int
    n: int
    k: int
    d_target: int
    r_target: int
    mode: str = "exhaustive"            # "exhaustive" | "random"
    random_count: int = 0
    seed: int = 0
    require_disjoint: bool = False
    require_divisible: bool = False
    cap: int | None = None
    workers: int = 1
    max_witnesses: int | None = None


@dataclass
class Witness:
    code: LinearCode
    d: int
    r: int
    slack: int
    partition: list[list[int]] | None


@dataclass
class SearchOutcome:
    status: str                         # "found" | "exhausted_none" | "budget_exceeded"
    task: SearchTask
    witnesses: list[Witness]
    subspaces_visited: int
    certificate: dict | None


def _verify_candidate(task: SearchTask, c: LinearCode) -> Witness | None:
    d = code_mod.min_distance(c)
    if d < task.d_target:
        return None
    try:
        prof = lrc.locality(c, r_max=task.r_target)
    except NoLocality:
        return None
    if prof.r != task.r_target:
        return None
    if lrc.singleton_slack(c.n, c.k, d, prof.r) != 0:
        return None
    if task.require_divisible and c.n % (prof.r + 1):
        return None
    partition = None
    if task.require_disjoint:
        sol = lrc.disjoint_partition(c, prof.r, profile=prof)
        if sol is None:
            return None
        partition = [list(s.coords) for s in sol]
    return Witness(code=c, d=d, r=prof.r, slack=0, partition=partition)


def _shards(pats: list[_Pattern]) -> list[tuple[int, int, int]]:
    out = []
    for idx, pat in enumerate(pats):
        start = 0
        while start < pat.count:
            end = min(start + SHARD_SIZE, pat.count)
            out.append((idx, start, end))
            start = end
    return out


def search_singleton_optimal(task: SearchTask) -> SearchOutcome:
    """Run one search task to completion; deterministic for fixed task."""
    if not 1 <= task.k <= task.n:
        raise RangeError(f"need 1 <= k <= n, got k={task.k}, n={task.n}")
    fs = field.field_from_order(task.q)
    if task.mode == "random":
        return _search_random(task, fs)
    total = gaussian_binomial(task.n, task.k, task.q)
    limit = task.cap if task.cap is not None else subspace_cap()
    if total > limit:
        raise CapExceeded(f"{total} subspaces exceed cap {limit}")
    pats = _patterns(task.q, task.n, task.k)
    shards = _shards(pats)
    visited = 0
    raw: list[tuple[int, int]] = []  # (pattern index, counter)
    if task.workers > 1 and len(shards) > 1:
        ctx = mp.get_context("fork")
        with ctx.Pool(
            task.workers,
            initializer=_init_worker,
            initargs=(task.q, task.n, task.k, task.d_target, task.r_target),
        ) as pool:
            for vis, survivors, pat_idx in pool.imap(_scan_shard, shards, chunksize=1):
                visited += vis
                raw.extend((pat_idx, c) for c in survivors)
    else:
        scanner = _Scanner(fs, task.n, task.k, task.d_target, task.r_target)
        for pat_idx, start, end in shards:
            vis, survivors = scanner.scan(pats[pat_idx], start, end)
            visited += vis
            raw.extend((pat_idx, c) for c in survivors)

    witnesses: list[Witness] = []
    for pat_idx, counter in raw:
        g = decode_counter(task.q, task.n, pats[pat_idx], counter)
        c = code_mod.code_from_generator(GFMatrix(fs, g))
        wit = _verify_candidate(task, c)
        if wit is not None:
            witnesses.append(wit)
            if task.max_witnesses and len(witnesses) >= task.max_witnesses:
                break
    if visited != total:
        raise RangeError(f"visited {visited} != subspace total {total}")  # pragma: no cover
    if witnesses:
        return SearchOutcome("found", task, witnesses, visited, None)
    certificate = {
        "scheme": "rref-pivot-pattern",
        "total": total,
        "visited": visited,
    }
    return SearchOutcome("exhausted_none", task, witnesses, visited, certificate)


def _search_random(task: SearchTask, fs: FieldSpec) -> SearchOutcome:
    witnesses: list[Witness] = []
    seen: set[bytes] = set()
    tried = 0
    for i in range(task.random_count):
        c = random_code(task.q, task.n, task.k, seed=task.seed + i)
        tried += 1
        canon = matrix.row_basis(fs, c.generator.entries).tobytes()
        if canon in seen:
            continue
        seen.add(canon)
        wit = _verify_candidate(task, c)
        if wit is not None:
            witnesses.append(wit)
            if task.max_witnesses and len(witnesses) >= task.max_witnesses:
                break
    status = "found" if witnesses else "budget_exceeded"
    return SearchOutcome(status, task, witnesses, tried, None)


# ---------------------------------------------------------------------------
# random full-rank codes

def random_code(q: int, n: int, k: int, seed: int = 0) -> LinearCode:
    """Uniformly random [n, k] code (rejection sampling on generator rank)."""
    if k > n:
        raise DimensionMismatch(f"k = {k} > n = {n}")
    fs = field.field_from_order(q)
    rng = np.random.default_rng(seed)
    while True:
        g = rng.integers(0, q, size=(k, n), dtype=np.int64)
        if matrix.rank(fs, g) == k:
            return code_mod.code_from_generator(GFMatrix(fs, g))


# ---------------------------------------------------------------------------
# polynomial-evaluation fixture generator (test plumbing)

def evaluation_fixture(q: int, r: int, k: int) -> LinearCode:
    """A Singleton-optimal [q-1, k, n-k-k/r+2; r] code with disjoint recovery
    sets on multiplicative cosets, via polynomials spanned by x^i * (x^(r+1))^j.

    Emitted only after passing the full optimality gate; anything else
    raises ParameterUnsupported.
    """
    fs = field.field_from_order(q)
    n = q - 1
    if n % (r + 1):
        raise ParameterUnsupported(f"(r+1) = {r + 1} must divide q-1 = {n}")
    if k % r:
        raise ParameterUnsupported(f"r = {r} must divide k = {k}")
    if k < 1 or k > n * r // (r + 1):
        raise ParameterUnsupported(f"k = {k} out of range for n = {n}, r = {r}")
    cosets = n // (r + 1)
    gen = int(field._tables(fs).alog[1]) if fs.q > 2 else 1
    points = [
        field.fe_pow(fs, gen, c + t * cosets)
        for c in range(cosets)
        for t in range(r + 1)
    ]
    exponents = [i + j * (r + 1) for j in range(k // r) for i in range(r)]
    g = np.zeros((k, n), dtype=np.int64)
    for row, e in enumerate(exponents):
        for col, alpha in enumerate(points):
            g[row, col] = field.fe_pow(fs, alpha, e)
    c = code_mod.code_from_generator(GFMatrix(fs, g))
    if c.k != k:
        raise ParameterUnsupported("evaluation matrix lost rank")

    # optimality gate: never hand out an unverified fixture
    d = code_mod.min_distance(c)
    try:
        prof = lrc.locality(c, r_max=r)
    except NoLocality:
        raise ParameterUnsupported("fixture does not reach locality r") from None
    if prof.r != r or lrc.singleton_slack(n, k, d, r) != 0:
        raise ParameterUnsupported(
            f"fixture [{n},{k},{d}] failed the optimality gate at r = {r}"
        )
    if lrc.disjoint_partition(c, r, profile=prof) is None:
        raise ParameterUnsupported("fixture has no disjoint recovery partition")
    return c
