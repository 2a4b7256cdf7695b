#!/usr/bin/env python3
"""Regenerate src/lrc_lab/data/modulus_table.txt.

For every prime power p^m <= CAP with m >= 2, emits the lexicographically
smallest monic irreducible polynomial of degree m over GF(p).  The table is
committed so that the element encoding (and hence every matrix file) is
bit-stable across builds; this script only exists to reproduce it.

Line format: "p m c_0 c_1 ... c_m" with little-endian coefficients, c_m = 1.
"""

from __future__ import annotations

import sys
from pathlib import Path

CAP = 1 << 16


def primes_up_to(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(bound + 1) if sieve[i]]


def poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); polynomials little-endian, den monic-led."""
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


def is_zero(poly: list[int]) -> bool:
    return all(c == 0 for c in poly)


def irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    m = len(coeffs) - 1
    # quick root check (degree-1 factors)
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    for d in range(2, m // 2 + 1):
        for v in range(p**d):
            den = []
            t = v
            for _ in range(d):
                den.append(t % p)
                t //= p
            den.append(1)
            if is_zero(poly_mod(coeffs, den, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    for v in range(p**m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if irreducible(coeffs, p):
            return coeffs
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "lrc_lab" / "data" / "modulus_table.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        "# Irreducible moduli for GF(p^m), m >= 2, p^m <= 65536.",
        "# p m c_0 c_1 ... c_m   (little-endian, monic; lexicographically smallest)",
    ]
    for p in primes_up_to(256):
        m = 2
        while p**m <= CAP:
            coeffs = smallest_irreducible(p, m)
            lines.append(f"{p} {m} " + " ".join(str(c) for c in coeffs))
            print(f"GF({p}^{m}): {coeffs}", file=sys.stderr)
            m += 1
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}", file=sys.stderr)


if __name__ == "__main__":
    main()
