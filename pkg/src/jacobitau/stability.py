"""Hurwitz stability over the rationals.

Stability is strict: every zero must satisfy ``Re z < 0``.  The Routh table
is built with exact pivots and no epsilon rows, so a vanishing pivot is a
failure witness rather than a special case to perturb around.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .jacobi import JacobiParams, f_poly, g_poly, phi_full
from .poly import RatPoly, Scalar


@dataclass(frozen=True)
class StabilityWitness:
    stage: int
    quantity: Fraction

    def as_dict(self) -> dict:
        from .poly import frac_str

        return {"stage": self.stage, "quantity": frac_str(self.quantity)}


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    failure_witness: Optional[StabilityWitness] = None

    def __bool__(self):
        return self.stable

    def as_dict(self) -> dict:
        return {
            "stable": self.stable,
            "witness": None if self.failure_witness is None else self.failure_witness.as_dict(),
        }


def routh_table(p: RatPoly) -> list[list[Fraction]]:
    """Rows of the Routh array (leading coefficient normalized positive).

    Construction stops after the first row whose leading entry is zero.
    """
    cs = list(reversed(p.coeffs))
    if cs[0] < 0:
        cs = [-c for c in cs]
    rows = [cs[0::2], cs[1::2]]
    deg = len(cs) - 1
    while len(rows) < deg + 1:
        upper, lower = rows[-2], rows[-1]
        if not lower or lower[0] == 0:
            break
        nxt = []
        for j in range(len(upper) - 1):
            below = lower[j + 1] if j + 1 < len(lower) else Fraction(0)
            nxt.append((lower[0] * upper[j + 1] - upper[0] * below) / lower[0])
        rows.append(nxt)
    return rows


def routh_hurwitz(p: RatPoly) -> StabilityVerdict:
    """Exact Routh-Hurwitz test; stable iff all n+1 first-column entries are positive."""
    if p.is_zero():
        raise ValueError("stability of the zero polynomial is undefined")
    deg = int(p.degree)
    if deg == 0:
        return StabilityVerdict(True)
    rows = routh_table(p)
    for stage in range(deg + 1):
        if stage >= len(rows) or not rows[stage]:
            return StabilityVerdict(False, StabilityWitness(stage, Fraction(0)))
        pivot = rows[stage][0]
        if pivot <= 0:
            return StabilityVerdict(False, StabilityWitness(stage, pivot))
    return StabilityVerdict(True)


def necessary_ratio(p: RatPoly) -> Fraction:
    """b1^2 / (b0 b2) for p = sum b_k mu^k.

    A real-rooted p of degree m >= 2 with positive coefficients has this
    ratio at least 2m/(m-1).
    """
    if p.degree < 2:
        raise ValueError("necessary ratio needs degree >= 2")
    b0, b1, b2 = p[0], p[1], p[2]
    if b0 * b2 == 0:
        raise ValueError("b0*b2 = 0")
    return b1 * b1 / (b0 * b2)


def necessary_determinant(p: RatPoly) -> Fraction:
    """The 3x3 Hurwitz minor of mu^m p(1/mu) paired with its derivative."""
    m = int(p.degree)
    b0, b1, b2 = p[0], p[1], p[2]
    rows = [
        [m * b0, (m - 1) * b1, (m - 2) * b2],
        [b0, b1, b2],
        [Fraction(0), m * b0, (m - 1) * b1],
    ]
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def necessary_bound(m: int) -> Fraction:
    return Fraction(2 * m, m - 1)


def phi_ratio_closed_form(n: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """Closed form of b1^2/(b0 b2) for phi_n^{(alpha,beta)}, n >= 4."""
    a, b = Fraction(alpha), Fraction(beta)
    s = n + a + b
    num = n * (n - 1) * (a + 3) * (a + 4) * (s + 1) * (s + 2)
    den = (n - 2) * (n - 3) * (a + 1) * (a + 2) * (s + 3) * (s + 4)
    return num / den


def ratio_limit(alpha: Scalar) -> Fraction:
    """Large-n limit (a+3)(a+4)/((a+1)(a+2)) of the coefficient ratio."""
    a = Fraction(alpha)
    return (a + 3) * (a + 4) / ((a + 1) * (a + 2))


def alpha_window_violation(alpha: Scalar) -> bool:
    """True iff alpha lies outside ((1-sqrt33)/2, (1+sqrt33)/2).

    Decided by the sign of 2a^2 - 2a - 16, so sqrt(33) never appears.
    """
    a = Fraction(alpha)
    if a in (-1, -2):
        raise ValueError(f"alpha = {a} is a pole of the limit ratio")
    return 2 * a * a - 2 * a - 16 >= 0


def stability_of_theorem4(n: int, alpha: Scalar, beta: Scalar) -> StabilityVerdict:
    """Routh-Hurwitz on Phi_n(1; mu), the full tower of P_n^{(alpha, beta-1)}."""
    if n < 4:
        raise ValueError("n must be at least 4")
    return routh_hurwitz(phi_full(JacobiParams(n, alpha, beta), beta_shift=True))


def stability_of_fg(which: str, n: int, alpha: Scalar, beta: Scalar, A: Scalar) -> StabilityVerdict:
    """Routh-Hurwitz on f(1; mu) or g(1; mu)."""
    if n <= 3:
        raise ValueError("n must exceed 3")
    if Fraction(A) <= 0:
        raise ValueError("A must be positive")
    params = JacobiParams(n, alpha, beta)
    if which == "f":
        return routh_hurwitz(f_poly(params, A))
    if which == "g":
        return routh_hurwitz(g_poly(params, A))
    raise ValueError(f"unknown intermediary polynomial {which!r}")
