"""Linear codes over GF(q).

A LinearCode always carries both a generator and a parity-check matrix,
kept consistent (G H^T = 0 is asserted on every construction).  Codes are
immutable; transformations return new codes, which makes the cached
minimum distance safe to share.

Coordinates are 1-based in every public support set and report, matching
the usual [n] = {1, ..., n} convention; numpy internals are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

import numpy as np

from . import field, matrix
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InvariantViolation,
    RangeError,
    ZeroMatrix,
)
from .field import FieldSpec
from .matrix import GFMatrix

DEFAULT_DISTANCE_BUDGET = 1 << 24


@dataclass(frozen=True)
class SupportSet:
    """A sorted set of 1-based coordinate indices."""

    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(sorted(set(int(x) for x in self.coords)))
        if len(c) != len(self.coords):
            raise RangeError("support set has repeated coordinates")
        if c and c[0] < 1:
            raise RangeError("coordinates are 1-based")
        object.__setattr__(self, "coords", c)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __contains__(self, i) -> bool:
        return i in self.coords

    def indices0(self) -> list[int]:
        return [c - 1 for c in self.coords]


def support_of(vec: np.ndarray) -> SupportSet:
    return SupportSet(tuple(int(j) + 1 for j in np.nonzero(vec)[0]))


@dataclass
class LinearCode:
    """A q-ary [n, k] linear code with generator and parity-check matrices."""

    field: FieldSpec
    n: int
    k: int
    generator: GFMatrix
    parity_check: GFMatrix
    d_cache: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        g, h = self.generator, self.parity_check
        if g.cols != self.n or h.cols != self.n or g.rows != self.k or h.rows != self.n - self.k:
            raise DimensionMismatch("generator/parity shapes inconsistent with (n, k)")
        if self.k and matrix.rank(self.field, g.entries) != self.k:
            raise InvariantViolation("generator is not full rank")
        if self.n - self.k and matrix.rank(self.field, h.entries) != self.n - self.k:
            raise InvariantViolation("parity check is not full rank")
        prod = field.vmatmul(self.field, g.entries, h.entries.T)
        if np.any(prod):
            raise InvariantViolation("G H^T != 0")

    # row-space equality: same code as a set of words
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and matrix.same_row_space(self.field, self.generator.entries, other.generator.entries)
        )

    def __hash__(self):
        canon = matrix.row_basis(self.field, self.generator.entries)
        return hash((self.field, self.n, self.k, canon.tobytes()))

    def params(self) -> tuple[int, int, int | None]:
        return (self.n, self.k, self.d_cache)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        d = f",{self.d_cache}" if self.d_cache is not None else ""
        return f"[{self.n},{self.k}{d}]_{self.field.q}"


def code_from_generator(g: GFMatrix) -> LinearCode:
    if g.is_zero():
        raise ZeroMatrix("generator matrix is zero")
    fs = g.field
    basis = matrix.row_basis(fs, g.entries)
    k, n = basis.shape
    h = matrix.kernel_basis(fs, basis)
    return LinearCode(fs, n, k, GFMatrix(fs, basis), GFMatrix(fs, h))


def code_from_parity(h: GFMatrix) -> LinearCode:
    fs = h.field
    n = h.cols
    basis = matrix.row_basis(fs, h.entries)
    if basis.shape[0] == n:
        raise ZeroMatrix("parity check has full column rank; code is {0}")
    g = matrix.kernel_basis(fs, basis) if basis.shape[0] else np.eye(n, dtype=np.int64)
    g = matrix.row_basis(fs, g)
    return LinearCode(fs, n, g.shape[0], GFMatrix(fs, g), GFMatrix(fs, basis))


def dual(c: LinearCode) -> LinearCode:
    g = matrix.row_basis(c.field, c.parity_check.entries)
    h = matrix.row_basis(c.field, c.generator.entries)
    return LinearCode(c.field, c.n, c.n - c.k, GFMatrix(c.field, g), GFMatrix(c.field, h))


def with_distance(c: LinearCode, d: int) -> LinearCode:
    return LinearCode(c.field, c.n, c.k, c.generator, c.parity_check, d_cache=d)


# ---------------------------------------------------------------------------
# codeword enumeration

def _message_batches(q: int, k: int, batch: int = 1 << 15):
    """Projective messages (first nonzero entry = 1), in deterministic order.

    Every nonzero codeword is a scalar multiple of exactly one enumerated
    message's codeword, and scaling preserves weight.
    """
    for lead in range(k):
        free = k - 1 - lead
        total = q**free
        for start in range(0, total, batch):
            cnt = min(batch, total - start)
            msgs = np.zeros((cnt, k), dtype=np.int64)
            msgs[:, lead] = 1
            c = np.arange(start, start + cnt, dtype=np.int64)
            for j in range(free):
                msgs[:, lead + 1 + j] = c % q
                c //= q
            yield msgs


def projective_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def min_distance(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exact minimum nonzero codeword weight by exhaustive message enumeration."""
    if c.k == 0:
        raise RangeError("zero code has no nonzero codeword")
    if c.d_cache is not None:
        return c.d_cache
    q = c.field.q
    if q**c.k > budget:
        raise BudgetExceeded(
            f"q^k = {q}^{c.k} exceeds distance budget {budget}; "
            "use distance_upper_bound for a sampled estimate"
        )
    g = c.generator.entries
    best = c.n
    for msgs in _message_batches(q, c.k):
        cw = field.vmatmul(c.field, msgs, g)
        w = int(np.min(np.count_nonzero(cw, axis=1)))
        if w < best:
            best = w
            if best == 1:
                break
    c.d_cache = best
    return best


def distance_upper_bound(c: LinearCode, samples: int = 10_000, seed: int = 0) -> int:
    """Sampled (non-exact) upper bound on the minimum distance."""
    rng = np.random.default_rng(seed)
    g = c.generator.entries
    best = c.n
    step = 1 << 12
    for start in range(0, samples, step):
        cnt = min(step, samples - start)
        msgs = rng.integers(0, c.field.q, size=(cnt, c.k), dtype=np.int64)
        msgs = msgs[np.any(msgs != 0, axis=1)]
        if msgs.size == 0:
            continue
        cw = field.vmatmul(c.field, msgs, g)
        best = min(best, int(np.min(np.count_nonzero(cw, axis=1))))
    return best


def weight_distribution(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> dict[int, int]:
    """Map weight -> number of codewords; counts sum to q^k."""
    q = c.field.q
    if c.k and q**c.k > budget:
        raise BudgetExceeded(f"q^k = {q}^{c.k} exceeds distance budget {budget}")
    counts: dict[int, int] = {0: 1}
    if c.k == 0:
        return counts
    g = c.generator.entries
    for msgs in _message_batches(q, c.k):
        cw = field.vmatmul(c.field, msgs, g)
        weights = np.count_nonzero(cw, axis=1)
        for w, cnt in zip(*np.unique(weights, return_counts=True)):
            # each projective class covers q-1 scalar multiples of equal weight
            counts[int(w)] = counts.get(int(w), 0) + int(cnt) * (q - 1)
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# classical propagation rules

def _trailing_support(n: int, s: int) -> SupportSet:
    return SupportSet(tuple(range(n - s + 1, n + 1)))


def puncture(c: LinearCode, s: int, coords: SupportSet | None = None) -> LinearCode:
    """Delete s coordinates; yields [n-s, k, >= d-s] for 1 <= s <= d-1."""
    d = min_distance(c)
    if not 1 <= s <= d - 1:
        raise RangeError(f"puncture count must be in [1, d-1] = [1, {d - 1}], got {s}")
    coords = coords or _trailing_support(c.n, s)
    if len(coords) != s or (coords.coords and coords.coords[-1] > c.n):
        raise RangeError("puncture coordinate set inconsistent with s")
    g = c.generator.delete_columns(coords.indices0())
    return code_from_generator(g)


def shorten(c: LinearCode, s: int, coords: SupportSet | None = None) -> LinearCode:
    """Pin s coordinates to zero and delete them; yields [n-s, >= k-s, >= d]."""
    if not 1 <= s <= c.k - 1:
        raise RangeError(f"shorten count must be in [1, k-1] = [1, {c.k - 1}], got {s}")
    coords = coords or _trailing_support(c.n, s)
    if len(coords) != s or (coords.coords and coords.coords[-1] > c.n):
        raise RangeError("shorten coordinate set inconsistent with s")
    # dual of the shortened code is the punctured dual: drop columns of H
    h = c.parity_check.delete_columns(coords.indices0())
    return code_from_parity(GFMatrix(c.field, matrix.row_basis(c.field, h.entries)))


# ---------------------------------------------------------------------------
# Singleton defect

def singleton_defect(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    d = min_distance(c, budget=budget)
    defect = c.n - c.k + 1 - d
    if defect < 0:
        raise InvariantViolation(f"Singleton bound violated: [{c.n},{c.k},{d}]")
    return defect


def classify(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> tuple[str, bool]:
    """Classify as ("MDS" | "AMDS" | "other", trivial?)."""
    defect = singleton_defect(c, budget=budget)
    category = "MDS" if defect == 0 else "AMDS" if defect == 1 else "other"
    trivial = c.k in (0, 1, c.n - 1, c.n)
    return category, trivial


# ---------------------------------------------------------------------------
# code file format: a "G" block and an "H" block

def code_to_lines(c: LinearCode) -> list[str]:
    lines = ["G"]
    lines += matrix.matrix_to_lines(c.generator)
    lines.append("H")
    lines += matrix.matrix_to_lines(c.parity_check)
    return lines


def code_from_lines(lines: list[str]) -> LinearCode:
    lines = [ln for ln in lines if ln.strip()]
    if not lines or lines[0].strip() != "G":
        raise ZeroMatrix("code file must start with a 'G' block")
    g, nxt = matrix.matrix_from_lines(lines, 1)
    if nxt >= len(lines) or lines[nxt].strip() != "H":
        # generator-only files are accepted; parity is recomputed
        return code_from_generator(g)
    h, _ = matrix.matrix_from_lines(lines, nxt + 1)
    c = code_from_generator(g)
    if not matrix.same_row_space(c.field, h.entries, c.parity_check.entries):
        raise InvariantViolation("H block is not a basis of the dual of the G block")
    # keep both blocks verbatim when they are bases already, so that
    # write(parse(file)) reproduces the file byte for byte
    gen = g if g.rows == c.k else c.generator
    par = h if h.rows == c.n - c.k else GFMatrix(c.field, matrix.row_basis(c.field, h.entries))
    return LinearCode(c.field, c.n, c.k, gen, par)


def write_code(path, c: LinearCode) -> None:
    with open(path, "w") as fh:
        fh.write("\n".join(code_to_lines(c)) + "\n")


def read_code(path) -> LinearCode:
    with open(path) as fh:
        return code_from_lines(fh.read().splitlines())


# ---------------------------------------------------------------------------
# small constructions used across the test-bench

def repetition_code(fs: FieldSpec, n: int) -> LinearCode:
    g = GFMatrix(fs, np.ones((1, n), dtype=np.int64))
    return code_from_generator(g)


def hamming_7_4(fs: FieldSpec | None = None) -> LinearCode:
    fs = fs or field.field_new(2, 1)
    h = GFMatrix(
        fs,
        np.array(
            [
                [1, 0, 1, 0, 1, 0, 1],
                [0, 1, 1, 0, 0, 1, 1],
                [0, 0, 0, 1, 1, 1, 1],
            ],
            dtype=np.int64,
        ),
    )
    return code_from_parity(h)


def extended_hamming_8_4(fs: FieldSpec | None = None) -> LinearCode:
    fs = fs or field.field_new(2, 1)
    g = GFMatrix(
        fs,
        np.array(
            [
                [1, 0, 0, 0, 0, 1, 1, 1],
                [0, 1, 0, 0, 1, 0, 1, 1],
                [0, 0, 1, 0, 1, 1, 0, 1],
                [0, 0, 0, 1, 1, 1, 1, 0],
            ],
            dtype=np.int64,
        ),
    )
    return code_from_generator(g)


def full_space(fs: FieldSpec, n: int) -> LinearCode:
    return code_from_generator(GFMatrix(fs, np.eye(n, dtype=np.int64)))
