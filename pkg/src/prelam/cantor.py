"""The Cantor set C, the grid set K and the gaps of its horizontal slices.

K is the union over p/q in lowest terms and |n| >= q of (C + 2n) x {p/q}.
At level r = p/q the slice complement has three kinds of components: the
central gap ]-2q+1, 2q[, the gaps ]2k-1, 2k[ between consecutive copies,
and translated gaps of C inside each copy.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .circle import fmt
from .errors import DomainError, NotAGap, OutOfRange

CENTRAL, COPY, BLOCK = "central", "cantor-copy", "inter-block"


def in_cantor(x) -> bool:
    """Exact membership in the middle-thirds set via x -> 3x (mod the kept thirds)."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise OutOfRange(f"{x} is outside [0, 1]")
    seen = set()
    while x not in seen:
        seen.add(x)
        if 3 * x <= 1:
            x = 3 * x
        elif 3 * x >= 2:
            x = 3 * x - 2
        else:
            return False
    return True


def in_K(x, y) -> bool:
    x, y = Fraction(x), Fraction(y)
    q = y.denominator
    n = math.floor(x / 2)
    if x - 2 * n > 1:
        return False
    return abs(n) >= q and in_cantor(x - 2 * n)


# ---------------------------------------------------------------- gap indexing

def gap_by_index(s) -> tuple:
    """Cantor gap indexed by the dyadic s in (0, 1): 1/2 -> (1/3, 2/3)."""
    s = Fraction(s)
    if not 0 < s < 1:
        raise NotAGap(f"{s} is outside (0, 1)")
    d = s.denominator
    k = d.bit_length() - 1
    if d != 1 << k:
        raise NotAGap(f"{s} is not dyadic")
    m = s.numerator
    a = Fraction(0)
    for i in range(1, k):
        bit = (m >> (k - i)) & 1
        a += Fraction(2 * bit, 3 ** i)
    a += Fraction(1, 3 ** k)
    return a, a + Fraction(1, 3 ** k)


def gap_index(interval) -> Fraction:
    """Inverse of gap_by_index."""
    a, b = (Fraction(v) for v in interval)
    w = b - a
    if w <= 0 or w.numerator != 1:
        raise NotAGap(f"({a}, {b}) is not a Cantor gap")
    k = round(math.log(w.denominator, 3))
    if 3 ** k != w.denominator or k < 1:
        raise NotAGap(f"({a}, {b}) is not a Cantor gap")
    # a = sum_{i<k} t_i 3^-i + 3^-k with t_i in {0, 2}
    rest = (a - Fraction(1, 3 ** k)) * 3 ** (k - 1)
    if rest.denominator != 1:
        raise NotAGap(f"({a}, {b}) is not a Cantor gap")
    n = int(rest)
    s = Fraction(1, 2 ** k)
    for i in range(k - 1):
        t = n % 3
        n //= 3
        if t == 1:
            raise NotAGap(f"({a}, {b}) is not a Cantor gap")
        s += Fraction(t // 2, 2 ** (k - 1 - i))
    if n:
        raise NotAGap(f"({a}, {b}) is not a Cantor gap")
    return s


def dyadic_to_rational(s) -> Fraction:
    """Increasing bijection from dyadics in (0, 1) onto Q (Stern-Brocot descent)."""
    s = Fraction(s)
    if not 0 < s < 1 or s.denominator & (s.denominator - 1):
        raise DomainError(f"{s} is not a dyadic in (0, 1)")
    lo, hi = (-1, 0), (1, 0)   # -inf and +inf as fractions
    cur = (0, 1)
    dlo, dhi = Fraction(0), Fraction(1)
    mid = Fraction(1, 2)
    while s != mid:
        if s < mid:
            hi, dhi = cur, mid
        else:
            lo, dlo = cur, mid
        cur = (lo[0] + hi[0], lo[1] + hi[1])
        mid = (dlo + dhi) / 2
    return Fraction(*cur)


def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, math.isqrt(n) + 1)):
            yield n
        n += 1


def psi(r) -> int:
    r = Fraction(r)
    q = r.denominator
    if q % 2 == 0 or q == 1:
        return 0
    lp = next(p for p in range(3, q + 1) if q % p == 0)
    for i, p in enumerate(_primes(), start=1):
        if p == lp:
            return 1 + i


def theta(phi: int) -> int:
    if phi < 3:
        raise DomainError(f"theta is defined for phi >= 3, got {phi}")
    return phi // 2 if phi % 2 == 0 else (phi + 1) // 2


# ---------------------------------------------------------------- slices

@dataclass(frozen=True)
class GapLabel:
    kind: str
    lo: Fraction
    hi: Fraction
    r: Fraction
    n: Optional[int] = None
    s: Optional[Fraction] = None
    k: Optional[int] = None

    @property
    def phi(self) -> int:
        if self.kind == CENTRAL:
            return psi(self.r)
        if self.kind == COPY:
            return psi(dyadic_to_rational(self.s))
        return 0

    @property
    def depth(self) -> int:
        return 0 if self.s is None else self.s.denominator.bit_length() - 1

    def to_json(self):
        d = {"kind": self.kind, "interval": [fmt(self.lo), fmt(self.hi)], "r": fmt(self.r),
             "phi": self.phi}
        if self.n is not None:
            d["n"] = self.n
            d["s"] = fmt(self.s)
        if self.k is not None:
            d["k"] = self.k
        mp = marked_point(self)
        if mp is not None:
            d["marked"] = fmt(mp.x)
        return d


@dataclass(frozen=True)
class MarkedPoint:
    x: Fraction
    component: GapLabel


@functools.lru_cache(maxsize=None)
def _copy_gaps(depth):
    return tuple((s, gap_by_index(s)) for s in _dyadics(depth))


def _dyadics(depth):
    for k in range(1, depth + 1):
        for m in range(1, 2 ** k, 2):
            yield Fraction(m, 2 ** k)


def slice_gaps(r, window, depth: int = 8) -> list:
    """Components of the slice complement at level r meeting [lo, hi].

    Cantor-copy gaps are listed down to `depth` (gaps of length >= 3^-depth).
    """
    r = Fraction(r)
    lo, hi = (Fraction(v) for v in window)
    if not lo < hi:
        raise DomainError("window must satisfy lo < hi")
    q = r.denominator
    out = []

    def meets(a, b):
        return a < hi and b > lo

    if meets(-2 * q + 1, 2 * q):
        out.append(GapLabel(CENTRAL, Fraction(-2 * q + 1), Fraction(2 * q), r))
    for k in range(math.floor(lo / 2), math.ceil(hi / 2) + 2):
        if (k >= q + 1 or k <= -q) and meets(2 * k - 1, 2 * k):
            out.append(GapLabel(BLOCK, Fraction(2 * k - 1), Fraction(2 * k), r, k=k))
    cgaps = _copy_gaps(depth)
    for n in range(math.floor((lo - 1) / 2), math.ceil(hi / 2) + 1):
        if abs(n) < q or not meets(2 * n, 2 * n + 1):
            continue
        for s, (a, b) in cgaps:
            if meets(2 * n + a, 2 * n + b):
                out.append(GapLabel(COPY, 2 * n + a, 2 * n + b, r, n=n, s=s))
    out.sort(key=lambda g: g.lo)
    return out


def marked_point(g: GapLabel) -> Optional[MarkedPoint]:
    if g.phi == 0:
        return None
    if g.kind == CENTRAL:
        q = g.r.denominator
        x = Fraction(-2 * q + 2) if g.r.numerator % 2 == 0 else Fraction(2 * q - 1)
        return MarkedPoint(x, g)
    return MarkedPoint((g.lo + g.hi) / 2, g)


# ---------------------------------------------------------------- evidence

@dataclass
class SliceReport:
    passed: bool
    q_like: bool
    adjacent: list = field(default_factory=list)
    psi_found: dict = field(default_factory=dict)
    missing: list = field(default_factory=list)
    left_phis: list = field(default_factory=list)
    right_phis: list = field(default_factory=list)

    def to_json(self):
        return {"pass": self.passed, "q_like": self.q_like,
                "adjacent": self.adjacent,
                "psi_found": {str(k): v for k, v in self.psi_found.items()},
                "missing": self.missing, "left_phis": self.left_phis,
                "right_phis": self.right_phis}


def slice_order_report(r, window, depth: int, psi_values=(3, 4, 5), at=None) -> SliceReport:
    """Finite evidence that one slice is ordered like Q and carries every degree.

    * consecutive gaps of depth < `depth` inside a copy, and the copy's
      ends, are separated by a gap of depth exactly `depth`;
    * each copy between two inter-block gaps in the window has gaps of every
      requested phi value;
    * phi values of marked points to the left and right of `at` (default
      the window midpoint) are listed.
    """
    if depth < 1:
        return SliceReport(True, True)
    r = Fraction(r)
    lo, hi = (Fraction(v) for v in window)
    gaps = slice_gaps(r, (lo, hi), depth)
    by_copy = {}
    for g in gaps:
        if g.kind == COPY:
            by_copy.setdefault(g.n, []).append(g)
    adjacent, missing, found = [], [], {}
    for n, gs in sorted(by_copy.items()):
        full = 2 * n >= lo and 2 * n + 1 <= hi
        if not full:
            continue
        old = [g for g in gs if g.depth < depth]
        new = [g for g in gs if g.depth == depth]
        bounds = [Fraction(2 * n)] + [x for g in old for x in (g.lo, g.hi)] + [Fraction(2 * n + 1)]
        for a, b in zip(bounds[::2], bounds[1::2]):
            if not any(a <= g.lo and g.hi <= b for g in new):
                adjacent.append([fmt(a), fmt(b)])
        phis = {g.phi for g in gs}
        for v in psi_values:
            if v in phis:
                found.setdefault(v, []).append(n)
            else:
                missing.append({"copy": n, "psi": v})
    at = (lo + hi) / 2 if at is None else Fraction(at)
    left, right = [], []
    for g in gaps:
        mp = marked_point(g)
        if mp is not None and lo <= mp.x <= hi and mp.x != at:
            (left if mp.x < at else right).append(g.phi)
    q_like = not adjacent
    return SliceReport(q_like and not missing, q_like, adjacent, found, missing,
                       sorted(set(left)), sorted(set(right)))
