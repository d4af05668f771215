"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values stored in ascending
degree order.  The zero polynomial has an empty coefficient tuple and
degree ``-inf``.  Every operation returns a new canonical polynomial.

Sturm machinery lives here as well, because root counting, isolation and
the stability tests all lean on the same sign-evaluation kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Bound = Union[int, Fraction, float, None]


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RatPoly:
    """Polynomial with exact rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "RatPoly":
        p = cls((lead,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "RatPoly":
        if not isinstance(other, RatPoly):
            other = RatPoly((other,))
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        if not isinstance(other, RatPoly):
            other = RatPoly((other,))
        return add(self, -other)

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other: "RatPoly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return derivative(self)

    def compose_square(self) -> "RatPoly":
        """Return ``p(x**2)``."""
        out = [Fraction(0)] * max(2 * len(self.coeffs) - 1, 0)
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return RatPoly(out)

    def reflect(self) -> "RatPoly":
        """Return ``p(-x)``."""
        return RatPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return scale(self, 1 / self.lc)

    def primitive(self) -> "RatPoly":
        """Divide by the positive content; result has coprime integer coefficients."""
        if self.is_zero():
            return self
        return scale(self, 1 / content(self))

    def to_strings(self) -> list[str]:
        return [frac_str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{frac_str(c)}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


ZERO = RatPoly()
ONE = RatPoly((1,))
X = RatPoly((0, 1))


def frac_str(c: Fraction) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers)."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def as_poly(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return RatPoly((p,))
    return RatPoly(tuple(p))


# -- arithmetic -------------------------------------------------------------


def add(a: RatPoly, b: RatPoly) -> RatPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return RatPoly(tuple(a[k] + b[k] for k in range(n)))


def mul(a: RatPoly, b: RatPoly) -> RatPoly:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return RatPoly(out)


def scale(a: RatPoly, c: Scalar) -> RatPoly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return RatPoly(tuple(x * c for x in a.coeffs))


def shift_mul_x(a: RatPoly, k: int = 1) -> RatPoly:
    """Multiply by ``x**k``."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if a.is_zero():
        return ZERO
    return RatPoly((Fraction(0),) * k + a.coeffs)


def derivative(p: RatPoly) -> RatPoly:
    return RatPoly(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0))


def poly_divmod(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return ZERO, a
    quot = [Fraction(0)] * (len(rem) - db)
    lead = b.coeffs[-1]
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lead
        quot[k] = c
        if c:
            for j, y in enumerate(b.coeffs):
                rem[k + j] -= c * y
    return RatPoly(quot), RatPoly(rem[:db])


def content(p: RatPoly) -> Fraction:
    """Positive rational content: gcd of numerators over lcm of denominators."""
    if p.is_zero():
        return Fraction(0)
    num = reduce(math.gcd, (c.numerator for c in p.coeffs))
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in p.coeffs))
    return Fraction(abs(num), den)


def _int_prim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    g = reduce(math.gcd, cs, 0)
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _int_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b, over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db]
        r = [x * lb for x in r]
        if c:
            for j, y in enumerate(b):
                r[shift + j] -= c * y
    return r[:db]


def _neg_rem_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """A positive multiple of -rem(a, b), made primitive."""
    r = _int_prem(a, b)
    delta = len(a) - len(b) + 1
    if b[-1] > 0 or delta % 2 == 0:
        r = [-x for x in r]
    return _int_prim(r)


def gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor via the Euclidean remainder sequence."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined")
    x, y = list(int_coeffs(a)), list(int_coeffs(b))
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prim(_int_prem(x, y))
    return RatPoly(x).monic()


def exact_div(a: RatPoly, b: RatPoly) -> RatPoly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("division is not exact")
    return q


def squarefree_part(p: RatPoly) -> RatPoly:
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.is_constant():
        return ONE
    return exact_div(p, gcd(p, derivative(p))).primitive()


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: p = c * prod(a_i ** i) with squarefree, coprime a_i.

    Only nonconstant factors are returned, each primitive.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.is_constant():
        return []
    dp = derivative(p)
    a0 = gcd(p, dp)
    b = exact_div(p, a0)
    c = exact_div(dp, a0)
    d = c - derivative(b)
    out = []
    i = 1
    while not b.is_constant():
        a = gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - derivative(b)
        if not a.is_constant():
            out.append((a.primitive(), i))
        i += 1
    return out


# -- sign evaluation --------------------------------------------------------


def int_coeffs(p: RatPoly) -> tuple[int, ...]:
    """Integer coefficients of the primitive form of ``p`` (sign preserved)."""
    return tuple(c.numerator for c in p.primitive().coeffs)


def sign_at_int(coeffs: Sequence[int], x: Bound) -> int:
    """Sign of the integer polynomial at an exact rational or at +-inf."""
    if not coeffs:
        return 0
    if isinstance(x, float):
        if x == math.inf:
            return (coeffs[-1] > 0) - (coeffs[-1] < 0)
        if x == -math.inf:
            s = (coeffs[-1] > 0) - (coeffs[-1] < 0)
            return s if (len(coeffs) - 1) % 2 == 0 else -s
        x = Fraction(x)
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # den**deg * p(num/den), evaluated with integers only
    acc = coeffs[-1]
    pw = den
    for c in reversed(coeffs[:-1]):
        acc = acc * num + c * pw
        pw *= den
    return (acc > 0) - (acc < 0)


def sign_at(p: RatPoly, x: Bound) -> int:
    return sign_at_int(int_coeffs(p), x)


# -- Sturm sequences --------------------------------------------------------


def _int_sturm(cs: Sequence[int]) -> list[list[int]]:
    chain = [list(cs)]
    d = _int_prim([k * c for k, c in enumerate(cs)][1:])
    if not d:
        return chain
    chain.append(d)
    while True:
        r = _neg_rem_int(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append(r)


def sturm_chain(p: RatPoly) -> list[RatPoly]:
    """Sturm sequence p, p', -rem(...), ... with each member made primitive.

    Dividing by the positive content keeps signs intact while stopping
    coefficient growth.  For non-squarefree input the chain ends at a
    multiple of gcd(p, p') instead of a constant.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    return [RatPoly(c) for c in _int_sturm(int_coeffs(p))]


def _variations(signs: Iterable[int]) -> int:
    last = 0
    v = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


class SturmCounter:
    """Sturm chain of the squarefree part, kept for repeated counting."""

    __slots__ = ("chain",)

    def __init__(self, p: RatPoly):
        chain = _int_sturm(int_coeffs(p))
        if len(chain[-1]) > 1:
            chain = _int_sturm(int_coeffs(squarefree_part(p)))
        self.chain = chain

    @property
    def squarefree(self) -> RatPoly:
        return RatPoly(self.chain[0])

    def variations(self, x: Bound) -> int:
        return _variations(sign_at_int(c, x) for c in self.chain)

    def count(self, lo: Bound = None, hi: Bound = None) -> int:
        """Number of distinct real roots in the half-open interval (lo, hi]."""
        lo = -math.inf if lo is None else lo
        hi = math.inf if hi is None else hi
        if not _lt(lo, hi):
            return 0
        return self.variations(lo) - self.variations(hi)


def _lt(a: Bound, b: Bound) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return float(a) < float(b)
    return a < b


def count_real_roots(p: RatPoly, lo: Bound = None, hi: Bound = None) -> int:
    """Distinct real roots of ``p`` in (lo, hi]; ``None`` or +-inf for open ends."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.is_constant():
        return 0
    return SturmCounter(p).count(lo, hi)


def is_real_rooted(p: RatPoly) -> bool:
    """True iff every complex root of ``p`` is real (constants included)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.is_constant():
        return True
    sq = squarefree_part(p)
    return count_real_roots(sq) == sq.degree


def cauchy_bound(p: RatPoly) -> Fraction:
    """A power of two strictly exceeding every root modulus."""
    lead = abs(p.lc)
    m = max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b
