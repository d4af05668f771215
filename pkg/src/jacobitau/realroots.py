"""Certified real-root isolation by Sturm bisection.

Every isolated root carries the squarefree integer polynomial that certifies
it, so intervals can be refined later (for instance until two roots of
different polynomials are provably ordered) without going back to the
caller's polynomial.

Interval convention: a root is either exact (``lo == hi``) or lies in the
open interval ``(lo, hi)``, the only root of its certifying polynomial in
``(lo, hi]``.  Isolation splits at the origin first, so no open interval
straddles zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .poly import (
    RatPoly,
    SturmCounter,
    cauchy_bound,
    count_real_roots,
    gcd,
    sign_at_int,
    squarefree_decomposition,
)

DEFAULT_PRECISION = Fraction(1, 10**8)

NEG_INF = -math.inf


@dataclass(frozen=True)
class Root:
    """One distinct real root: isolating interval plus multiplicity."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    owner: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self) -> "Root":
        """Halve the isolating interval (no-op for exact roots)."""
        if self.exact:
            return self
        mid = self.mid
        s_mid = sign_at_int(self.owner, mid)
        if s_mid == 0:
            return Root(mid, mid, self.multiplicity, self.owner)
        if s_mid != sign_at_int(self.owner, self.hi):
            return Root(mid, self.hi, self.multiplicity, self.owner)
        return Root(self.lo, mid, self.multiplicity, self.owner)

    def refine_to(self, precision: Fraction) -> "Root":
        r = self
        while not r.exact and r.width >= precision:
            r = r.refined()
        return r

    def as_dict(self) -> dict:
        from .poly import frac_str

        return {
            "lo": frac_str(self.lo),
            "hi": frac_str(self.hi),
            "mid": frac_str(self.mid),
            "mult": self.multiplicity,
        }

    def __float__(self):
        return float(self.mid)


def point_root(c) -> Root:
    """An exact root at the rational ``c``, certified by ``x - c``."""
    c = Fraction(c)
    return Root(c, c, 1, (-c.numerator, c.denominator))


@dataclass(frozen=True)
class RootList:
    """Distinct real roots ordered by distance from the origin."""

    roots: tuple[Root, ...]
    all_real: bool
    negative_count: int
    degree: int

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def by_value(self) -> list[Root]:
        return sorted_by_value(list(self.roots))

    def as_dict(self) -> dict:
        return {"roots": [r.as_dict() for r in self.roots], "all_real": self.all_real}


# -- exact comparison ---------------------------------------------------------


def _disjoint(a: Root, b: Root) -> bool:
    return a.hi <= b.lo or b.hi <= a.lo


@lru_cache(maxsize=4096)
def _owner_gcd(p: tuple[int, ...], q: tuple[int, ...]) -> RatPoly:
    return gcd(RatPoly(p), RatPoly(q))


def same_root(a: Root, b: Root) -> bool:
    """Exact test whether two isolated roots are the same real number."""
    if a.exact and b.exact:
        return a.lo == b.lo
    if a.exact or b.exact:
        point, other = (a, b) if a.exact else (b, a)
        c = point.lo
        return other.lo < c < other.hi and sign_at_int(other.owner, c) == 0
    if _disjoint(a, b):
        return False
    g = _owner_gcd(a.owner, b.owner)
    if g.is_constant():
        return False
    # each owner has a single root in its interval, so a common root in the
    # (open) overlap must be the root of both
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return count_real_roots(g, lo, hi) - (g(hi) == 0) > 0


def compare(a: Root, b: Root) -> tuple[int, Root, Root]:
    """Exact ordering of two real roots: -1, 0 or 1, plus the refined roots."""
    if same_root(a, b):
        return 0, a, b
    while not _disjoint(a, b):
        if a.width >= b.width:
            a = a.refined()
        else:
            b = b.refined()
    return (-1 if a.hi <= b.lo else 1), a, b


def _reflect(r: Root) -> Root:
    owner = tuple(c if k % 2 == 0 else -c for k, c in enumerate(r.owner))
    return Root(-r.hi, -r.lo, r.multiplicity, owner)


def compare_abs(a: Root, b: Root) -> int:
    """Order two roots by modulus; a tie between r and -r puts -r first."""
    a_neg, b_neg = a.hi <= 0, b.hi <= 0
    if a_neg and b_neg:
        return -compare(a, b)[0]
    if not a_neg and not b_neg:
        return compare(a, b)[0]
    c = compare(_reflect(a) if a_neg else a, _reflect(b) if b_neg else b)[0]
    if c == 0:
        return -1 if a_neg else 1
    return c


def sorted_by_value(roots: list[Root]) -> list[Root]:
    """Insertion sort with certified comparisons (inputs are distinct roots)."""
    out: list[Root] = []
    for r in roots:
        i = len(out)
        while i > 0:
            c, left, r = compare(out[i - 1], r)
            out[i - 1] = left
            if c < 0:
                break
            i -= 1
        out.insert(i, r)
    return out


# -- isolation ------------------------------------------------------------------


def _isolate_squarefree(sq: RatPoly, multiplicity: int) -> list[Root]:
    owner = tuple(c.numerator for c in sq.coeffs)
    counter = SturmCounter(sq)
    bound = cauchy_bound(sq)
    found: list[Root] = []
    stack = [(-bound, Fraction(0)), (Fraction(0), bound)]
    counts = {stack[0]: counter.count(-bound, 0), stack[1]: counter.count(0, bound)}
    while stack:
        lo, hi = stack.pop()
        k = counts.pop((lo, hi))
        if k == 0:
            continue
        if k == 1:
            if sign_at_int(owner, hi) == 0:
                found.append(Root(hi, hi, multiplicity, owner))
            else:
                found.append(Root(lo, hi, multiplicity, owner))
            continue
        mid = (lo + hi) / 2
        left, right = (lo, mid), (mid, hi)
        counts[left] = counter.count(lo, mid)
        counts[right] = k - counts[left]
        stack.extend((left, right))
    return found


def isolate(p: RatPoly, precision=DEFAULT_PRECISION) -> RootList:
    """Isolate and refine every distinct real root of ``p``.

    Multiplicities come from the squarefree decomposition; each root is
    refined until its interval is narrower than ``precision``.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    roots: list[Root] = []
    total = 0
    for factor, mult in squarefree_decomposition(p):
        for r in _isolate_squarefree(factor, mult):
            roots.append(r.refine_to(precision))
            total += mult
    roots = sorted_by_value(roots)
    ordered = _order_by_distance(roots)
    neg = sum(1 for r in ordered if r.lo < 0)
    deg = int(p.degree)
    return RootList(tuple(ordered), total == deg, neg, deg)


def _order_by_distance(roots_by_value: list[Root]) -> list[Root]:
    neg = [r for r in roots_by_value if r.hi <= 0 and not (r.exact and r.lo == 0)]
    zero = [r for r in roots_by_value if r.exact and r.lo == 0]
    pos = [r for r in roots_by_value if r.lo >= 0 and not (r.exact and r.lo == 0)]
    neg.reverse()
    out = list(zero)
    i = j = 0
    while i < len(neg) and j < len(pos):
        if compare_abs(neg[i], pos[j]) < 0:
            out.append(neg[i])
            i += 1
        else:
            out.append(pos[j])
            j += 1
    out.extend(neg[i:])
    out.extend(pos[j:])
    return out


def zr(rl: RootList, i: int) -> Union[Root, Fraction, float]:
    """i-th distinct real root by distance from the origin.

    ``zr(rl, 0)`` is 0 and indices past the last root give ``-inf``.
    """
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i == 0:
        return Fraction(0)
    if i > len(rl.roots):
        return NEG_INF
    return rl.roots[i - 1]


class RootVerdict(str, enum.Enum):
    NEGATIVE_SIMPLE = "negative_simple"
    NEGATIVE_WITH_MULTIPLICITY = "negative_with_multiplicity"
    HAS_NONNEGATIVE_OR_COMPLEX = "has_nonnegative_or_complex"


def all_negative_simple(p: RatPoly) -> RootVerdict:
    """Three-way verdict on whether every root is real, negative and simple.

    A nonzero constant has no roots and counts as negative-simple.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.is_constant():
        return RootVerdict.NEGATIVE_SIMPLE
    if p(0) == 0:
        return RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
    counter = SturmCounter(p)
    sq = counter.squarefree
    if counter.count(None, 0) != sq.degree:
        return RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
    if sq.degree != p.degree:
        return RootVerdict.NEGATIVE_WITH_MULTIPLICITY
    return RootVerdict.NEGATIVE_SIMPLE


def vieta_sum(p: RatPoly) -> Fraction:
    """Sum of all complex roots with multiplicity, -c_{d-1}/c_d."""
    if p.is_constant():
        return Fraction(0)
    return -p[int(p.degree) - 1] / p.lc


def as_root(x) -> Optional[Root]:
    """Coerce zr-style values (Root, rational) to a Root; ``-inf`` gives None."""
    if isinstance(x, Root):
        return x
    if isinstance(x, float) and x == NEG_INF:
        return None
    return point_root(x)


def strictly_less(a, b) -> bool:
    """Certified ``a < b`` for zr-style values (Root, rational, or -inf)."""
    ra, rb = as_root(a), as_root(b)
    if ra is None:
        return rb is not None
    if rb is None:
        return False
    c, _, _ = compare(ra, rb)
    return c < 0
