"""Length and distance bounds for codes and Singleton-optimal LRCs.

Certified bounds are exact inequalities (big-integer arithmetic, no
floats); asymptotic advisories carry a hidden (1 + o(1)) factor and are
reported as exact (coefficient, exponent) pairs on q rather than numbers.
Every report lists the assumptions it consumed, so conditional rows (the
MDS conjecture, divisibility of n by r+1, disjoint recovery sets, the
size regime) are auditable.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, ceil

from .errors import ConditionUnmet, OutOfTable, RangeError, Unsupported, WindowEmpty

CERTIFIED = "certified_finite"
ADVISORY = "asymptotic_advisory"
NONEXISTENCE = "nonexistence"

MDS_CONJECTURE = "mds_conjecture"
DIVISIBLE = "divisible"
DISJOINT = "disjoint_recovery"
SIZE_REGIME = "size_regime"
R_SMALL = "r_in_o(n)"


def principal_mod(x: int, m: int) -> int:
    """Remainder in {0, ..., m-1}."""
    return x % m


def shifted_mod(x: int, m: int) -> int:
    """Remainder in {1, ..., m}."""
    v = x % m
    return m if v == 0 else v


@dataclass
class BoundQuery:
    """Inputs the bound calculator can draw on; leave unknowns as None."""

    q: int | None = None
    n: int | None = None
    k: int | None = None
    d: int | None = None
    r: int | None = None
    lam: Fraction | None = None
    assume_mds_conjecture: bool = False
    divisible: bool = False
    disjoint_recovery: bool = False

    def s(self) -> int | None:
        """s with k = -s (mod r), 0 <= s <= r-1."""
        if self.k is None or self.r is None:
            return None
        return (-self.k) % self.r


@dataclass
class BoundReport:
    name: str
    kind: str
    value: int | None = None
    coefficient: Fraction | None = None
    exponent: Fraction | None = None
    order: str | None = None
    conditions: list[str] = dc_field(default_factory=list)
    statement: str = ""

    def render_value(self) -> str:
        if self.kind == NONEXISTENCE:
            return "no such code"
        if self.value is not None:
            return str(self.value)
        parts = []
        if self.coefficient is not None and self.coefficient != 1:
            parts.append(str(self.coefficient))
        if self.exponent is not None:
            parts.append(f"q^({self.exponent})" if self.exponent != 1 else "q")
        return "O(" + (" * ".join(parts) if parts else self.order or "1") + ")"


# ---------------------------------------------------------------------------
# classical certified bounds

def hamming_bound(q: int, n: int, d: int) -> int:
    """Sphere-packing cap on code size: q^n over the volume of radius-t balls."""
    if q < 2 or not 1 <= d <= n:
        raise RangeError(f"need q > 1 and 1 <= d <= n, got q={q}, n={n}, d={d}")
    t = (d - 1) // 2
    ball = sum(comb(n, i) * (q - 1) ** i for i in range(t + 1))
    return q**n // ball


def griesmer_bound(q: int, k: int, d: int) -> int:
    """Minimum length of any [n, k, d] code: sum of ceil(d / q^i)."""
    if k < 1 or d < 1:
        raise RangeError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return sum(ceil(d / q**i) for i in range(k))


def singleton_type_max_d(n: int, k: int, r: int) -> int:
    """Largest distance allowed at locality r: n - k - ceil(k/r) + 2."""
    if not 1 <= k <= n or r < 1:
        raise RangeError(f"need 1 <= k <= n and r >= 1, got n={n}, k={k}, r={r}")
    return n - k - ceil(k / r) + 2


def residual_distance_cap(q: int) -> int:
    """Any [n, n-d, >=d] code with dimension >= 2 forces d <= 2q."""
    return 2 * q


def mu_max_amds_length(r: int, q: int) -> tuple[int, bool]:
    """Maximum length of an [n, n-r-1, r+1] code: (value, exact?).

    r = 2 is exact (q^2 + q + 1); r = 3 is only an upper bound (q^2 + q + 2).
    """
    if r == 2:
        return q * q + q + 1, True
    if r == 3:
        return q * q + q + 2, False
    raise Unsupported(f"mu(r, q) implemented only for r in {{2, 3}}, got r={r}")


# ---------------------------------------------------------------------------
# certified length bounds for Singleton-optimal LRCs

def proportional_bound(q: int, lam: Fraction | float) -> int:
    """When d = lam * n, the length is capped by 2q / lam."""
    lam = Fraction(lam).limit_denominator() if isinstance(lam, float) else Fraction(lam)
    if not 0 < lam < 1:
        raise RangeError(f"need 0 < lambda < 1, got {lam}")
    return int(Fraction(2 * q) / lam)


def mds_regime_bound(q: int, k: int, r: int) -> int:
    """n <= q + 1 + k + k/r, conditional on the MDS conjecture and k % r != 1."""
    if k % r == 1:
        raise ConditionUnmet(
            f"k = {k} is 1 mod r = {r}; the bound does not apply "
            "(length-(q + 2 sqrt q) constructions exist in that residue class)"
        )
    return int(Fraction(q + 1 + k) + Fraction(k, r))


def window_bound(d: int, r: int, s: int) -> int:
    """Strict cap n < (d+r)(r-1+(d-2)r)/(r-d+2), valid for s+2 < d < r+2."""
    if not 0 <= s <= r - 1:
        raise RangeError(f"need 0 <= s <= r-1, got s={s}, r={r}")
    if not s + 2 < d < r + 2:
        if s == r - 1:
            raise WindowEmpty(f"s = r-1 = {s}: the window ({s + 2}, {r + 2}) contains no integer")
        raise WindowEmpty(f"d = {d} outside the open window ({s + 2}, {r + 2})")
    strict = Fraction((d + r) * (r - 1 + (d - 2) * r), r - d + 2)
    return ceil(strict) - 1


# ---------------------------------------------------------------------------
# asymptotic advisories

def asymptotic_length_bound(q: int, d: int, r: int, k_mod_r: int) -> list[BoundReport]:
    """Leading-term length advisories for d = o(n/r), as exact
    (coefficient, exponent) pairs; a (1 + o(1)) factor is implicit.

    Needs d >= 5: the packing radius (d - t)/4 must be at least 1, so the
    exponents are undefined at d = 3, 4 (where d equals its shifted residue).
    """
    if d < 5:
        raise RangeError(f"need d >= 5 for a positive packing radius, got {d}")
    t = shifted_mod(d, 4)
    eps = Fraction(shifted_mod(k_mod_r, r), r)
    coeff = Fraction((r + 1) * (d - 1), 4 * r * (q - 1))
    if t in (1, 2):
        e_main = Fraction(4 * r, (d - t) * (r + 1)) * (d - 1 - eps)
        e_alt = Fraction(4 * (d - 2), d - t)
    else:
        e_main = Fraction(4 * r, (d - t) * (r + 1)) * (d - 2 - eps)
        e_alt = Fraction(4 * (d - 3), d - t)
    reports = [
        BoundReport(
            name="small-locality exponent",
            kind=ADVISORY,
            coefficient=coeff,
            exponent=e_main,
            conditions=["rd = o(n)"],
            statement=f"n <= (1+o(1)) * {coeff} * q^({e_main})  [t={t}, eps={eps}]",
        ),
        BoundReport(
            name="locality-free exponent",
            kind=ADVISORY,
            coefficient=coeff,
            exponent=e_alt,
            conditions=["rd = o(n)", "d <= r+1"],
            statement=f"n <= (1+o(1)) * {coeff} * q^({e_alt})  [t={t}]",
        ),
        BoundReport(
            name="combined exponent",
            kind=ADVISORY,
            coefficient=coeff,
            exponent=min(e_main, e_alt),
            conditions=["rd = o(n)"],
            statement=f"n <= (1+o(1)) * {coeff} * q^({min(e_main, e_alt)})",
        ),
    ]
    return reports


# ---------------------------------------------------------------------------
# regime classification tables

def _adv(name: str, order: str, conditions: list[str], exponent: Fraction | None = None) -> BoundReport:
    return BoundReport(
        name=name,
        kind=ADVISORY,
        order=order,
        exponent=exponent,
        conditions=conditions,
        statement=f"n = O({order})",
    )


def _cert(name: str, value: int, conditions: list[str], statement: str) -> BoundReport:
    return BoundReport(name=name, kind=CERTIFIED, value=value, conditions=conditions, statement=statement)


def _nonexist(name: str, conditions: list[str], statement: str) -> BoundReport:
    return BoundReport(name=name, kind=NONEXISTENCE, conditions=conditions, statement=statement)


def _small_d_rows(d: int, r: int, s: int | None) -> list[BoundReport]:
    """Unconstrained classification for d in {5, 6, 7, 8}."""
    rows: list[BoundReport] = []
    if d == 5:
        if r == 1:
            rows.append(_adv("d=5, r=1", "1", []))
            rows.append(_cert("d=5, r=1 finite", 8, [], "n < 9"))
        elif r in (2, 3):
            rows.append(_adv(f"d=5, r={r}", "q", [MDS_CONJECTURE]))
        else:
            if s is not None and s <= 2:
                rows.append(_adv("d=5, r>=4, k=0,-1,-2 mod r", "r", []))
                cap = ceil(Fraction((r + 5) * (4 * r - 1), r - 3)) - 1
                rows.append(
                    _cert(
                        "d=5, r>=4, k=0,-1,-2 mod r finite",
                        cap,
                        [],
                        f"n < (r+5)(4r-1)/(r-3) = {Fraction((r + 5) * (4 * r - 1), r - 3)}",
                    )
                )
            rows.append(_adv("d=5, r>=4", "q^2", [R_SMALL]))
    elif d == 6:
        if r == 1:
            rows.append(_adv("d=6, r=1", "q", [MDS_CONJECTURE]))
        elif r == 2:
            if s == 0:  # k even
                rows.append(_adv("d=6, r=2, k even", "q", [MDS_CONJECTURE]))
            elif s == 1:
                rows.append(_adv("d=6, r=2, k odd", "q^2", []))
            else:
                rows.append(_adv("d=6, r=2", "q^2", []))
        elif r in (3, 4):
            rows.append(_adv(f"d=6, r={r}", "q^2", []))
        else:
            if s is not None and s <= 3:
                rows.append(_adv("d=6, r>=5, k=0..-3 mod r", "r", []))
                cap = ceil(Fraction((r + 6) * (5 * r - 1), r - 4)) - 1
                rows.append(
                    _cert(
                        "d=6, r>=5, k=0..-3 mod r finite",
                        cap,
                        [],
                        f"n < (r+6)(5r-1)/(r-4) = {Fraction((r + 6) * (5 * r - 1), r - 4)}",
                    )
                )
            rows.append(
                _adv("d=6, r>=5", f"q^(4r-2)/(r+1)", [R_SMALL], Fraction(4 * r - 2, r + 1))
            )
    elif d == 7:
        if r == 1:
            rows.append(_adv("d=7, r=1", "1", []))
        elif r == 2:
            rows.append(_adv("d=7, r=2", "q", [MDS_CONJECTURE]))
        elif r == 3:
            if s is not None and s == 0:
                rows.append(_adv("d=7, r=3, k=0 mod 3", "q", [MDS_CONJECTURE]))
            elif s is not None:
                rows.append(_adv("d=7, r=3, k!=0 mod 3", "q^2", []))
            else:
                rows.append(_adv("d=7, r=3", "q^2", []))
        elif r in (4, 5):
            rows.append(_adv(f"d=7, r={r}", "q^2", []))
        else:
            if s is not None and s <= 4:
                rows.append(_adv("d=7, r>=6, k=0..-4 mod r", "r", []))
                cap = ceil(Fraction((r + 7) * (6 * r - 1), r - 5)) - 1
                rows.append(
                    _cert(
                        "d=7, r>=6, k=0..-4 mod r finite",
                        cap,
                        [],
                        f"n < (r+7)(6r-1)/(r-5) = {Fraction((r + 7) * (6 * r - 1), r - 5)}",
                    )
                )
            rows.append(
                _adv("d=7, r>=6", f"q^(4r-2)/(r+1)", [R_SMALL], Fraction(4 * r - 2, r + 1))
            )
    elif d == 8:
        if r == 1:
            rows.append(_adv("d=8, r=1", "q", [MDS_CONJECTURE]))
        elif r == 2:
            rows.append(_adv("d=8, r=2", "q^2", []))
        elif r == 3 and s is not None and s != 2:
            rows.append(_adv("d=8, r=3, k!=-2 mod 3", "q^2", []))
    return rows


def _constrained_rows(d: int, r: int, s: int | None) -> list[BoundReport]:
    """Classification under (r+1) | n with disjoint recovery sets and the
    n = Omega(d r^2) size regime."""
    base = [DIVISIBLE, DISJOINT, SIZE_REGIME]
    rows: list[BoundReport] = []
    k_even = None if s is None else ((2 - s) % 2 == 0 if r == 2 else None)

    if r == 1:
        if d % 2 == 0:
            rows.append(_adv("r=1, d even", "q", base + [MDS_CONJECTURE]))
        else:
            rows.append(_adv("r=1, d odd", "1", base))
    elif r == 2:
        if d % 3 != 0:
            rows.append(_adv("r=2, d != 0 mod 3", "q", base + [MDS_CONJECTURE]))
        else:
            if k_even:
                rows.append(_adv("r=2, d = 0 mod 3, k even", "q", base + [MDS_CONJECTURE]))
            rows.append(_adv("r=2, d = 0 mod 3", "q^1.5", base, Fraction(3, 2)))
    elif r == 3:
        m = d % 4
        if m == 0:
            rows.append(_adv("r=3, d = 0 mod 4", "q^2", base))
        elif m == 1:
            rows.append(_adv("r=3, d = 1 mod 4", "q", base + [MDS_CONJECTURE]))
        else:
            rows.append(_adv(f"r=3, d = {m} mod 4", "q^2", base))
            if m == 3 and s is not None and (0 - s) % 3 == 0:
                rows.append(_adv("r=3, d = 3 mod 4, 3 | k", "q", base + [MDS_CONJECTURE]))
    elif r == 4:
        m = d % 5
        if m in (0, 1, 2):
            rows.append(_adv(f"r=4, d = {m} mod 5", "q^2", base))
        else:
            rows.append(_adv(f"r=4, d = {m} mod 5", "q^3", base))

    # residue-class rows modulo r+1 (any r); the reductions force k's residue,
    # so combinations that contradict it cannot exist
    m1 = d % (r + 1)
    if d >= 5 and r >= 4:
        if m1 == 5 % (r + 1) and s is not None and s <= 2 and r > 3:
            rows.append(
                _nonexist(
                    "d = 5 mod r+1, k = 0,-1,-2 mod r",
                    base,
                    "divisibility forces k = -3 mod r; these residues cannot occur",
                )
            )
        if m1 == 6 % (r + 1) and s is not None and s <= 3 and r >= 5:
            rows.append(
                _nonexist(
                    "d = 6 mod r+1, k = 0..-3 mod r",
                    base,
                    "divisibility forces k = -4 mod r; these residues cannot occur",
                )
            )
    if r > 3 and d >= r + 2 and m1 in (1, 2, 3, 4, 5):
        rows.append(_adv(f"d = {m1} mod r+1", "q^2", base))
    if d >= r + 2:
        for t in range(1, r // 4 + 1):
            for i in (-1, 0, 1, 2):
                if m1 == (4 * t - i) % (r + 1):
                    rows.append(
                        _adv(
                            f"d = 4t-i mod r+1 (t={t}, i={i})",
                            f"q^(3-1/{t})",
                            base,
                            Fraction(3) - Fraction(1, t),
                        )
                    )
    return rows


def classify_regime(
    d: int,
    r: int,
    k_mod_r: int | None = None,
    *,
    divisible: bool = False,
    disjoint_recovery: bool = False,
) -> list[BoundReport]:
    """Every classification row applicable to (d, r, k mod r).

    Unconstrained small-distance rows need d in {5, ..., 8}; the constrained
    rows additionally require the divisibility and disjointness flags.
    """
    if r < 1 or d < 1:
        raise RangeError(f"need d, r >= 1, got d={d}, r={r}")
    s = None if k_mod_r is None else (-k_mod_r) % r
    rows: list[BoundReport] = []
    if 5 <= d <= 8:
        rows.extend(_small_d_rows(d, r, s))
    if divisible and disjoint_recovery and d >= 5:
        rows.extend(_constrained_rows(d, r, s))
    if not rows:
        raise OutOfTable(
            f"no classification row covers d={d}, r={r}"
            + ("" if divisible and disjoint_recovery else " without the divisibility/disjointness flags")
        )
    return rows


# ---------------------------------------------------------------------------
# the bound calculator behind the CLI

def collect_reports(query: BoundQuery) -> list[BoundReport]:
    """Evaluate every bound whose inputs are present in the query."""
    out: list[BoundReport] = []
    q, n, k, d, r = query.q, query.n, query.k, query.d, query.r
    if q is not None and n is not None and d is not None:
        out.append(
            _cert("hamming", hamming_bound(q, n, d), [], "max code size by sphere packing")
        )
    if q is not None and k is not None and d is not None:
        out.append(_cert("griesmer", griesmer_bound(q, k, d), [], "min length of an [n,k,d] code"))
    if n is not None and k is not None and r is not None:
        out.append(
            _cert(
                "singleton-type",
                singleton_type_max_d(n, k, r),
                [],
                "max distance at locality r",
            )
        )
    if q is not None:
        out.append(
            _cert("residual-distance-cap", residual_distance_cap(q), [], "d <= 2q for [n, n-d] residuals")
        )
        if r in (2, 3):
            val, exact = mu_max_amds_length(r, q)
            out.append(
                _cert(
                    "max-amds-length",
                    val,
                    [],
                    f"max length of an [n, n-{r}-1, {r}+1] code" + ("" if exact else " (upper bound)"),
                )
            )
    if q is not None and query.lam is not None:
        out.append(
            _cert(
                "proportional",
                proportional_bound(q, query.lam),
                [],
                "n <= 2q/lambda when d = lambda n",
            )
        )
        if query.assume_mds_conjecture and k is not None and r is not None and k % r != 1:
            out.append(
                BoundReport(
                    name="proportional-mds",
                    kind=ADVISORY,
                    coefficient=Fraction(1) / Fraction(query.lam),
                    exponent=Fraction(1),
                    conditions=[MDS_CONJECTURE],
                    statement="n <= q/lambda + O(1) when d = lambda n and k != 1 mod r",
                )
            )
    if query.assume_mds_conjecture and q is not None and k is not None and r is not None:
        try:
            out.append(
                _cert(
                    "mds-regime",
                    mds_regime_bound(q, k, r),
                    [MDS_CONJECTURE],
                    "n <= q + 1 + k + k/r",
                )
            )
        except ConditionUnmet:
            pass
    if d is not None and r is not None:
        s = query.s()
        if s is not None:
            try:
                out.append(
                    _cert(
                        "window",
                        window_bound(d, r, s),
                        [],
                        "n < (d+r)(r-1+(d-2)r)/(r-d+2) in the open window",
                    )
                )
            except (WindowEmpty, RangeError):
                pass
        if q is not None and d >= 5:
            k_mod = k % r if k is not None else r  # r means k = 0 mod r
            out.extend(asymptotic_length_bound(q, d, r, k_mod))
        try:
            out.extend(
                classify_regime(
                    d,
                    r,
                    None if k is None else k % r,
                    divisible=query.divisible,
                    disjoint_recovery=query.disjoint_recovery,
                )
            )
        except OutOfTable:
            pass
    return out
