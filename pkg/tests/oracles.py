"""Independent oracles for the dual-route checks.

Everything here deliberately avoids the library's linear-algebra path:
row reduction is reimplemented from scratch on Python lists, distances
are found through parity-check column dependencies or raw codeword
enumeration with itertools, and irreducibility is checked by exhaustive
root/divisor search.  Only the scalar field operations are shared, since
the field axioms are themselves swept exhaustively elsewhere.
"""

from __future__ import annotations

from itertools import combinations, product

from lrc_lab import field
from lrc_lab.code import LinearCode
from lrc_lab.field import FieldSpec


def oracle_rank(fs: FieldSpec, rows: list[list[int]]) -> int:
    """Gaussian elimination on plain lists."""
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = field.fe_inv(fs, mat[rank][c])
        mat[rank] = [field.fe_mul(fs, v, inv) for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [
                    field.fe_sub(fs, v, field.fe_mul(fs, f, w))
                    for v, w in zip(mat[i], mat[rank])
                ]
        rank += 1
    return rank


def oracle_distance_by_columns(c: LinearCode) -> int:
    """Least w such that some w parity-check columns are linearly dependent."""
    fs = c.field
    h = [[int(v) for v in row] for row in c.parity_check.entries]
    if not h:
        return 1
    n = c.n
    for w in range(1, n + 1):
        for cols in combinations(range(n), w):
            sub = [[row[j] for j in cols] for row in h]
            if oracle_rank(fs, sub) < w:
                return w
    raise AssertionError("every column set independent; not a proper code")


def oracle_all_codewords(c: LinearCode):
    """Every codeword, by raw message enumeration (no numpy)."""
    fs = c.field
    g = [[int(v) for v in row] for row in c.generator.entries]
    for msg in product(range(fs.q), repeat=c.k):
        word = [0] * c.n
        for i, m in enumerate(msg):
            if m == 0:
                continue
            for j in range(c.n):
                word[j] = field.fe_add(fs, word[j], field.fe_mul(fs, m, g[i][j]))
        yield word


def oracle_min_distance(c: LinearCode) -> int:
    best = c.n + 1
    for word in oracle_all_codewords(c):
        w = sum(1 for v in word if v)
        if 0 < w < best:
            best = w
    return best


def oracle_weight_distribution(c: LinearCode) -> dict[int, int]:
    out: dict[int, int] = {}
    for word in oracle_all_codewords(c):
        w = sum(1 for v in word if v)
        out[w] = out.get(w, 0) + 1
    return out


def oracle_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive check: no monic divisor of degree 1..m-1."""
    m = len(coeffs) - 1

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def monics(d):
        for tail in product(range(p), repeat=d):
            yield list(tail) + [1]

    for d1 in range(1, m):
        d2 = m - d1
        for f in monics(d1):
            for g in monics(d2):
                if poly_mul(f, g) == list(coeffs):
                    return False
    return True
