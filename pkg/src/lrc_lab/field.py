"""Exact arithmetic in GF(p^m) for small prime powers.

Elements are plain integers in [0, q) encoding the residue polynomial
base p, little-endian: value = sum_i c_i * p^i.  The encoding is canonical
because one fixed irreducible modulus per (p, m) ships with the package
(data/modulus_table.txt), so matrix files are bit-stable across builds.

All operations take the FieldSpec explicitly; elements carry no back
reference to their field, which keeps them copyable and serialization
trivial.  Multiplication and inversion go through precomputed log/antilog
tables, built lazily once per field and cached.

Everything here is pure and safe for unrestricted concurrent use.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, InverseOfZero, NotPrime, OrderExceedsCap, Unsupported

DEFAULT_ORDER_CAP = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) described by its characteristic, degree and fixed modulus.

    modulus is the little-endian coefficient tuple of a monic irreducible
    polynomial of degree m over GF(p); for m = 1 it is the placeholder
    (0, 1) = x, since prime fields need no modulus.
    """

    p: int
    m: int
    q: int
    modulus: tuple[int, ...]

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


# ---------------------------------------------------------------------------
# modulus table

@lru_cache(maxsize=1)
def _modulus_table() -> dict[tuple[int, int], tuple[int, ...]]:
    text = importlib.resources.files("lrc_lab").joinpath("data/modulus_table.txt").read_text()
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [int(x) for x in line.split()]
        p, m, coeffs = parts[0], parts[1], tuple(parts[2:])
        table[(p, m)] = coeffs
    return table


def _poly_eval(coeffs: tuple[int, ...], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _poly_rem(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = c * inv_lead % p
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _verify_irreducible(coeffs: tuple[int, ...], p: int) -> None:
    """Trial factorization: no roots, no monic divisor of degree <= m/2."""
    m = len(coeffs) - 1
    poly = list(coeffs)
    for x in range(p):
        if _poly_eval(coeffs, x, p) == 0:
            raise Unsupported(f"modulus {coeffs} has root {x} over GF({p})")
    for d in range(2, m // 2 + 1):
        for v in range(p**d):
            den = []
            t = v
            for _ in range(d):
                den.append(t % p)
                t //= p
            den.append(1)
            if all(c == 0 for c in _poly_rem(poly, tuple(den), p)):
                raise Unsupported(f"modulus {coeffs} divisible by {den} over GF({p})")


def field_new(p: int, m: int, cap: int = DEFAULT_ORDER_CAP) -> FieldSpec:
    """Build the GF(p^m) spec with the published modulus for (p, m)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise Unsupported(f"extension degree must be >= 1, got {m}")
    q = p**m
    if q > cap:
        raise OrderExceedsCap(f"q = {p}^{m} = {q} exceeds cap {cap}")
    if m == 1:
        return FieldSpec(p, 1, p, (0, 1))
    try:
        coeffs = _modulus_table()[(p, m)]
    except KeyError:
        raise Unsupported(f"no published modulus for GF({p}^{m})") from None
    _verify_irreducible(coeffs, p)
    return FieldSpec(p, m, q, coeffs)


def field_from_order(q: int, cap: int = DEFAULT_ORDER_CAP) -> FieldSpec:
    """Resolve a field order q = p^m to its FieldSpec (used by file parsers)."""
    if q < 2:
        raise Unsupported(f"field order must be >= 2, got {q}")
    p = q
    for f in range(2, q + 1):
        if f * f > q:
            break
        if q % f == 0:
            p = f
            break
    m = 0
    t = q
    while t > 1:
        if t % p:
            raise NotPrime(f"{q} is not a prime power")
        t //= p
        m += 1
    return field_new(p, m, cap=cap)


# ---------------------------------------------------------------------------
# encoding

def encode(fs: FieldSpec, coeffs: tuple[int, ...]) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * fs.p + c % fs.p
    return value


def decode(fs: FieldSpec, value: int) -> tuple[int, ...]:
    out = []
    for _ in range(fs.m):
        out.append(value % fs.p)
        value //= fs.p
    return tuple(out)


# ---------------------------------------------------------------------------
# log/antilog tables

class _Tables:
    __slots__ = ("log", "alog", "inv", "neg")

    def __init__(self, fs: FieldSpec):
        q = fs.q
        alog = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        g = _find_generator(fs)
        x = 1
        for i in range(q - 1):
            alog[i] = x
            log[x] = i
            x = _mul_poly(fs, x, g)
        if x != 1 or np.any(log[1:] < 0):  # pragma: no cover - generator contract
            raise Unsupported("generator search failed; modulus not irreducible?")
        inv = np.zeros(q, dtype=np.int64)
        inv[alog] = alog[(-log[alog]) % (q - 1)]
        neg = np.zeros(q, dtype=np.int64)
        for v in range(q):
            neg[v] = encode(fs, tuple((-c) % fs.p for c in decode(fs, v)))
        self.log = log
        self.alog = alog
        self.inv = inv
        self.neg = neg


def _mul_poly(fs: FieldSpec, a: int, b: int) -> int:
    """Table-free polynomial multiplication modulo the field modulus."""
    p, m = fs.p, fs.m
    if m == 1:
        return a * b % p
    da = decode(fs, a)
    db = decode(fs, b)
    prod = [0] * (2 * m - 1)
    for i, ca in enumerate(da):
        if ca == 0:
            continue
        for j, cb in enumerate(db):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    rem = _poly_rem(prod, fs.modulus, p)
    rem += [0] * (m - len(rem))
    return encode(fs, tuple(rem[:m]))


def _prime_factors(x: int) -> list[int]:
    out = []
    f = 2
    while f * f <= x:
        if x % f == 0:
            out.append(f)
            while x % f == 0:
                x //= f
        f += 1
    if x > 1:
        out.append(x)
    return out


def _find_generator(fs: FieldSpec) -> int:
    order = fs.q - 1
    factors = _prime_factors(order)
    for g in range(2, fs.q):
        if all(_pow_poly(fs, g, order // f) != 1 for f in factors):
            return g
    if fs.q == 2:
        return 1
    raise Unsupported("no multiplicative generator found")  # pragma: no cover


def _pow_poly(fs: FieldSpec, a: int, e: int) -> int:
    acc = 1
    base = a
    while e:
        if e & 1:
            acc = _mul_poly(fs, acc, base)
        base = _mul_poly(fs, base, base)
        e >>= 1
    return acc


@lru_cache(maxsize=64)
def _tables(fs: FieldSpec) -> _Tables:
    return _Tables(fs)


# ---------------------------------------------------------------------------
# scalar operations

def fe_add(fs: FieldSpec, a: int, b: int) -> int:
    if fs.m == 1:
        return (a + b) % fs.p
    if fs.p == 2:
        return a ^ b
    return encode(fs, tuple((x + y) % fs.p for x, y in zip(decode(fs, a), decode(fs, b))))


def fe_neg(fs: FieldSpec, a: int) -> int:
    if fs.m == 1:
        return (-a) % fs.p
    if fs.p == 2:
        return a
    return int(_tables(fs).neg[a])


def fe_sub(fs: FieldSpec, a: int, b: int) -> int:
    return fe_add(fs, a, fe_neg(fs, b))


def fe_mul(fs: FieldSpec, a: int, b: int) -> int:
    if fs.m == 1:
        return a * b % fs.p
    if a == 0 or b == 0:
        return 0
    t = _tables(fs)
    return int(t.alog[(t.log[a] + t.log[b]) % (fs.q - 1)])


def fe_inv(fs: FieldSpec, a: int) -> int:
    if a == 0:
        raise InverseOfZero("0 has no multiplicative inverse")
    if fs.m == 1:
        return pow(a, fs.p - 2, fs.p)
    return int(_tables(fs).inv[a])


def fe_pow(fs: FieldSpec, a: int, e: int) -> int:
    if e < 0:
        return fe_pow(fs, fe_inv(fs, a), -e)
    acc = 1
    base = a
    while e:
        if e & 1:
            acc = fe_mul(fs, acc, base)
        base = fe_mul(fs, base, base)
        e >>= 1
    return acc


# ---------------------------------------------------------------------------
# vectorized operations on arrays of encoded values

def vadd(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if fs.m == 1:
        return (a + b) % fs.p
    if fs.p == 2:
        return a ^ b
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    pk = 1
    for _ in range(fs.m):
        out += ((a // pk + b // pk) % fs.p) * pk
        pk *= fs.p
    return out


def vneg(fs: FieldSpec, a: np.ndarray) -> np.ndarray:
    if fs.m == 1:
        return (-a) % fs.p
    if fs.p == 2:
        return a.copy()
    return _tables(fs).neg[a]


def vsub(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return vadd(fs, a, vneg(fs, b))


def vmul(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if fs.m == 1:
        return a * b % fs.p
    t = _tables(fs)
    a, b = np.broadcast_arrays(a, b)
    nz = (a != 0) & (b != 0)
    out = np.zeros(a.shape, dtype=np.int64)
    out[nz] = t.alog[(t.log[a[nz]] + t.log[b[nz]]) % (fs.q - 1)]
    return out


def vscale(fs: FieldSpec, a: np.ndarray, s: int) -> np.ndarray:
    if s == 0:
        return np.zeros_like(a)
    if s == 1:
        return a.copy()
    return vmul(fs, a, np.full_like(a, s))


def vmatmul(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field; a is (r, t), b is (t, c)."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if fs.m == 1:
        # entries < p <= 2^16 and t <= a few thousand: no int64 overflow
        return (a.astype(np.int64) @ b.astype(np.int64)) % fs.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = vadd(fs, out, vmul(fs, a[:, t : t + 1], b[t : t + 1, :]))
    return out
