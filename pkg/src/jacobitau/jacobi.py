"""Derivative towers of Jacobi polynomials at x = 1 and the polynomials built from them.

All objects are evaluated at ``x = 1`` only.  The k-th derivative of
``P_n^{(a,b)}`` there has the closed form::

    2**-k * (n+a+b+1)_k * (a+k+1)_{n-k} / (n-k)!

which has no parameter-dependent denominators, so towers exist for every
rational ``(a, b)``.

Note on notation: ``pochhammer(x, k)`` is the rising factorial
``x (x+1) ... (x+k-1)``, so the product ``(a+1)(a+2)...(a+n)`` is
``pochhammer(a + 1, n)``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from .poly import RatPoly, Scalar, derivative, shift_mul_x

__all__ = [
    "JacobiParams",
    "DerivTower",
    "IdentityTag",
    "UndefinedIdentityError",
    "pochhammer",
    "deriv_tower",
    "phi",
    "phi_hypergeometric",
    "phi_full",
    "f_poly",
    "g_poly",
    "identity_sides",
    "verify_identity",
]


@dataclass(frozen=True, order=True)
class JacobiParams:
    """Degree ``n`` and rational parameters ``alpha``, ``beta``."""

    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    def shift(self, dn: int = 0, da: Scalar = 0, db: Scalar = 0) -> "JacobiParams":
        return JacobiParams(self.n + dn, self.alpha + da, self.beta + db)


@dataclass(frozen=True)
class DerivTower:
    params: JacobiParams
    values: tuple[Fraction, ...]


def pochhammer(x: Scalar, k: int) -> Fraction:
    """Rising factorial (x)_k; (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = Fraction(1)
    x = Fraction(x)
    for j in range(k):
        out *= x + j
    return out


@lru_cache(maxsize=8192)
def _tower(n: int, a: Fraction, b: Fraction) -> tuple[Fraction, ...]:
    # rising[k] = (n+a+b+1)_k, tail[k] = (a+k+1)_{n-k}
    rising = [Fraction(1)]
    for k in range(n):
        rising.append(rising[-1] * (n + a + b + 1 + k))
    tail = [Fraction(1)] * (n + 1)
    for k in range(n - 1, -1, -1):
        tail[k] = tail[k + 1] * (a + k + 1)
    return tuple(rising[k] * tail[k] / (2**k * factorial(n - k)) for k in range(n + 1))


def deriv_tower(params: JacobiParams) -> DerivTower:
    """All derivatives of P_n^{(alpha,beta)} at x = 1, orders 0..n."""
    return DerivTower(params, _tower(params.n, params.alpha, params.beta))


def _as_params(params, alpha=None, beta=None) -> JacobiParams:
    if isinstance(params, JacobiParams):
        return params
    return JacobiParams(params, alpha, beta)


def phi(params, alpha: Optional[Scalar] = None, beta: Optional[Scalar] = None) -> RatPoly:
    """phi_n(mu) = sum_k P_n^{(2k)}(1) mu^k, degree floor(n/2).

    Accepts either a :class:`JacobiParams` or ``phi(n, alpha, beta)``.
    """
    p = _as_params(params, alpha, beta)
    t = _tower(p.n, p.alpha, p.beta)
    out = RatPoly(t[0::2])
    if __debug__ and SELF_CHECK:
        alt = phi_hypergeometric(p)
        assert alt is None or alt == out, f"phi routes disagree at {p}"
    return out


# Cross-check every phi against the hypergeometric route (doubles the cost).
SELF_CHECK = os.environ.get("JACOBITAU_SELF_CHECK", "") not in ("", "0")


def phi_hypergeometric(params: JacobiParams) -> Optional[RatPoly]:
    """phi_n from the terminating hypergeometric sum in mu/4.

    Returns ``None`` when some (alpha+1)_{2k} vanishes and the sum is not
    defined term by term.
    """
    n, a, b = params.n, params.alpha, params.beta
    lead = pochhammer(a + 1, n) / factorial(n)
    coeffs = []
    for k in range(n // 2 + 1):
        den = pochhammer(a + 1, 2 * k)
        if den == 0:
            return None
        coeffs.append(
            lead * pochhammer(-n, 2 * k) * pochhammer(n + a + b + 1, 2 * k) / den / Fraction(4) ** k
        )
    return RatPoly(coeffs)


def phi_full(params: JacobiParams, beta_shift: bool = True) -> RatPoly:
    """Full tower contracted against mu**k, k = 0..n.

    With ``beta_shift`` the tower of P_n^{(alpha, beta-1)} is used, which is
    the polynomial Phi_n(1; mu) whose stability is tested.
    """
    p = params.shift(db=-1) if beta_shift else params
    return RatPoly(_tower(p.n, p.alpha, p.beta))


def f_poly(params: JacobiParams, A: Scalar) -> RatPoly:
    """f(1; mu) = sum_k mu^k (A P_n^{(k)}(1) + mu P_{n-1}^{(k)}(1)).

    The degree is n (the mu-shifted P_{n-1} tower tops out at mu^n).
    """
    _need_n_above_3(params)
    tn = phi_full(params, beta_shift=False)
    tm = phi_full(params.shift(dn=-1), beta_shift=False)
    return tn * Fraction(A) + shift_mul_x(tm, 1)


def g_poly(params: JacobiParams, A: Scalar) -> RatPoly:
    """g(1; mu) = sum_k mu^k (mu P_n^{(k)}(1) + A P_{n-1}^{(k)}(1)), degree n+1."""
    _need_n_above_3(params)
    tn = phi_full(params, beta_shift=False)
    tm = phi_full(params.shift(dn=-1), beta_shift=False)
    return shift_mul_x(tn, 1) + tm * Fraction(A)


def _need_n_above_3(params: JacobiParams):
    if params.n <= 3:
        raise ValueError(f"intermediary polynomials need n > 3, got n={params.n}")


# -- identity web -------------------------------------------------------------


class UndefinedIdentityError(ValueError):
    """A coefficient of the identity has a vanishing denominator."""


class IdentityTag(str, enum.Enum):
    SUMM1 = "fl_summ1"
    SUMM2 = "fl_summ2"
    SUMM3 = "fl_summ3"
    SUMM4 = "fl_summ4"
    DIFF1 = "fl_diff1"
    DIFF2 = "fl_diff2"
    DIFF3 = "fl_diff3"
    DIFF4 = "fl_diff4"
    DIFF5 = "fl_diff5"
    CHAIN1 = "chain_rel_1"
    CHAIN2 = "chain_rel_2"
    MAIN = "main_rel"
    PHI_DIFF = "phi_diff"


def _nonzero(value: Fraction, what: str, params: JacobiParams) -> Fraction:
    if value == 0:
        raise UndefinedIdentityError(f"identity undefined at parameters {params}: {what} = 0")
    return value


def _dmu2(p: RatPoly) -> RatPoly:
    """2 mu p'(mu)."""
    return shift_mul_x(derivative(p), 1) * 2


def identity_sides(tag: IdentityTag, params: JacobiParams, A: Optional[Scalar] = None) -> list[RatPoly]:
    """Every member of the (possibly chained) equality, in order.

    The identity holds iff all returned polynomials are equal.
    """
    tag = IdentityTag(tag)
    n, a, b = params.n, params.alpha, params.beta
    if n < 2:
        raise UndefinedIdentityError(f"identity undefined at parameters {params}: n < 2")

    def ph(dn=0, da=0, db=0):
        return phi(params.shift(dn, da, db))

    s = 2 * n + a + b  # 2n+a+b
    t = n + a + b  # n+a+b

    if tag in (IdentityTag.SUMM1, IdentityTag.SUMM2, IdentityTag.SUMM3, IdentityTag.SUMM4):
        _nonzero(s, "2n+alpha+beta", params)
    if tag is IdentityTag.SUMM1:
        return [ph(db=-1) * s, ph() * t + ph(dn=-1) * (n + a)]
    if tag is IdentityTag.SUMM2:
        return [ph(da=-1) * s, ph() * t - ph(dn=-1) * (n + b)]
    if tag is IdentityTag.SUMM3:
        return [ph() * t, ph(db=-1) * (n + b) + ph(da=-1) * (n + a)]
    if tag is IdentityTag.SUMM4:
        return [ph(dn=-1), ph(db=-1) - ph(da=-1)]
    if tag is IdentityTag.DIFF1:
        return [ph(dn=-1, db=1) * (n + a), ph() * n - _dmu2(ph())]
    if tag is IdentityTag.DIFF2:
        return [ph(db=1) * (t + 1), ph() * (t + 1) + _dmu2(ph())]
    if tag is IdentityTag.DIFF3:
        return [ph(da=-1, db=1) * (n + a), ph() * a + _dmu2(ph())]
    if tag is IdentityTag.DIFF4:
        _nonzero(t, "n+alpha+beta", params)
        return [_dmu2(ph(db=-1)) * ((n + b) / t), ph(da=-1) * (n + a) - ph() * a]
    if tag is IdentityTag.DIFF5:
        return [_dmu2(ph(db=-1)), ph(da=-1) * n - ph(dn=-1) * a]
    if tag is IdentityTag.CHAIN1:
        _nonzero(t, "n+alpha+beta", params)
        return [
            ph() * n - _dmu2(ph()),
            ph(dn=-1, db=1) * (n + a),
            ph(dn=-1) * (n + a) + _dmu2(ph(dn=-1)) * ((n + a) / t),
        ]
    if tag is IdentityTag.CHAIN2:
        _nonzero(t, "n+alpha+beta", params)
        return [
            ph() * n - ph(dn=-1) * (n + a),
            _dmu2(ph(db=-1)) * (s / t),
            _dmu2(ph()) + _dmu2(ph(dn=-1)) * ((n + a) / t),
        ]
    if tag is IdentityTag.MAIN:
        if A is None:
            raise ValueError("main_rel needs the free scalar A")
        A = Fraction(A)
        na = _nonzero(n + a, "n+alpha", params)
        lhs = ph() * (t / na) + ph(dn=-1) * A
        rhs = ph(db=-1) * (((1 + A) * n + a + b) / na) + _dmu2(ph(db=-1)) * ((1 - A) / na)
        return [lhs, rhs]
    if tag is IdentityTag.PHI_DIFF:
        p = ph()
        return [p - p[0], shift_mul_x(ph(dn=-2, da=2, db=2), 1) * (pochhammer(t + 1, 2) / 4)]
    raise AssertionError(tag)


def verify_identity(tag: IdentityTag, params: JacobiParams, A: Optional[Scalar] = None) -> bool:
    """Exact check that both sides agree as canonical polynomials."""
    sides = identity_sides(tag, params, A)
    return all(side == sides[0] for side in sides[1:])
