"""Matrices over GF(q): row reduction, kernels, and the flat file format.

The file format is bit-exact and shared by every subcommand: a header line
"q rows cols" followed by `rows` lines of `cols` decimal entries in [0, q).
q is resolved back to (p, m) through the published modulus table, so the
same file always decodes to the same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field
from .errors import DimensionMismatch, ZeroMatrix
from .field import FieldSpec


@dataclass(frozen=True)
class GFMatrix:
    """An immutable rows x cols matrix of encoded field elements."""

    field: FieldSpec
    entries: np.ndarray  # int64, shape (rows, cols), read-only

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise DimensionMismatch("entry out of range for field")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.field, self.entries.shape, self.entries.tobytes()))

    def row(self, i: int) -> np.ndarray:
        return self.entries[i]

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def matmul(self, other: "GFMatrix") -> "GFMatrix":
        if self.field != other.field:
            raise DimensionMismatch("matrices over different fields")
        return GFMatrix(self.field, field.vmatmul(self.field, self.entries, other.entries))

    def transpose(self) -> "GFMatrix":
        return GFMatrix(self.field, self.entries.T)

    def take_columns(self, cols) -> "GFMatrix":
        return GFMatrix(self.field, self.entries[:, list(cols)])

    def delete_columns(self, cols) -> "GFMatrix":
        keep = [j for j in range(self.cols) if j not in set(cols)]
        return GFMatrix(self.field, self.entries[:, keep])

    def delete_rows(self, rows) -> "GFMatrix":
        keep = [i for i in range(self.rows) if i not in set(rows)]
        return GFMatrix(self.field, self.entries[keep, :])

    def is_zero(self) -> bool:
        return not np.any(self.entries)


def rref(fs: FieldSpec, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (reduced copy, pivot column list).

    Zero rows are kept in place at the bottom; rank = len(pivots).
    """
    out = np.array(mat, dtype=np.int64)
    rows, cols = out.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for i in range(r, rows):
            if out[i, c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            out[[r, piv]] = out[[piv, r]]
        inv = field.fe_inv(fs, int(out[r, c]))
        if inv != 1:
            out[r] = field.vscale(fs, out[r], inv)
        for i in range(rows):
            if i != r and out[i, c] != 0:
                out[i] = field.vsub(fs, out[i], field.vscale(fs, out[r], int(out[i, c])))
        pivots.append(c)
        r += 1
    return out, pivots


def rank(fs: FieldSpec, mat: np.ndarray) -> int:
    return len(rref(fs, mat)[1])


def row_basis(fs: FieldSpec, mat: np.ndarray) -> np.ndarray:
    """Canonical basis of the row space: RREF with zero rows dropped."""
    red, pivots = rref(fs, mat)
    return red[: len(pivots)]


def kernel_basis(fs: FieldSpec, mat: np.ndarray) -> np.ndarray:
    """Basis of {v : mat @ v = 0}, one row per free column of the RREF."""
    red, pivots = rref(fs, mat)
    cols = mat.shape[1]
    free = [j for j in range(cols) if j not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for idx, j in enumerate(free):
        out[idx, j] = 1
        for i, pc in enumerate(pivots):
            out[idx, pc] = field.fe_neg(fs, int(red[i, j]))
    return out


def in_row_space(fs: FieldSpec, mat: np.ndarray, vec: np.ndarray) -> bool:
    base = rank(fs, mat)
    stacked = np.vstack([mat, vec.reshape(1, -1)])
    return rank(fs, stacked) == base


def same_row_space(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> bool:
    ba = row_basis(fs, a)
    bb = row_basis(fs, b)
    return ba.shape == bb.shape and bool(np.array_equal(ba, bb))


# ---------------------------------------------------------------------------
# file format

def matrix_to_lines(mat: GFMatrix) -> list[str]:
    lines = [f"{mat.field.q} {mat.rows} {mat.cols}"]
    for i in range(mat.rows):
        lines.append(" ".join(str(int(v)) for v in mat.entries[i]))
    return lines


def matrix_from_lines(lines: list[str], start: int = 0) -> tuple[GFMatrix, int]:
    """Parse one matrix block; returns (matrix, index of first unread line)."""
    header = lines[start].split()
    if len(header) != 3:
        raise ZeroMatrix(f"bad matrix header: {lines[start]!r}")
    q, rows, cols = (int(x) for x in header)
    fs = field.field_from_order(q)
    data = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        vals = [int(x) for x in lines[start + 1 + i].split()]
        if len(vals) != cols:
            raise DimensionMismatch(f"row {i} has {len(vals)} entries, expected {cols}")
        data[i] = vals
    return GFMatrix(fs, data), start + 1 + rows


def write_matrix(path, mat: GFMatrix) -> None:
    with open(path, "w") as fh:
        fh.write("\n".join(matrix_to_lines(mat)) + "\n")


def read_matrix(path) -> GFMatrix:
    with open(path) as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    mat, _ = matrix_from_lines(lines)
    return mat
