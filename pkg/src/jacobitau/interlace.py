"""Interlacing of real zeros and the Hermite-Biehler decomposition.

Verdicts are certificates: the interleaving order of roots is decided by
refining Sturm-isolated intervals until they are disjoint, never by
comparing floating-point approximations.

Convention for constants: a nonzero constant has no zeros, so the pair
(constant, q) interlaces strictly exactly when q has at most one zero and
that zero is real and simple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import RatPoly, Scalar, count_real_roots, exact_div, gcd, is_real_rooted, shift_mul_x
from .realroots import Root, compare, isolate


class InterlaceVerdict(str, enum.Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"
    FAIL = "fail"


@dataclass(frozen=True)
class InterlaceResult:
    verdict: InterlaceVerdict
    certificate: dict = field(default_factory=dict)

    @property
    def strict(self) -> bool:
        return self.verdict is InterlaceVerdict.STRICT

    def __bool__(self):
        return self.verdict is not InterlaceVerdict.FAIL


def _fail(reason: str, **extra) -> InterlaceResult:
    return InterlaceResult(InterlaceVerdict.FAIL, {"violation": reason, **extra})


def _simple_real_roots(p: RatPoly, label: str):
    """Isolated roots sorted by value, or a failure reason."""
    if p.is_constant():
        return []
    rl = isolate(p, precision=1)
    if not rl.all_real:
        return f"{label} has non-real zeros"
    if any(r.multiplicity > 1 for r in rl):
        return f"{label} has a multiple zero"
    return rl.by_value()


def merge_roots(ps: Sequence[Root], qs: Sequence[Root]) -> list[tuple[str, Root]]:
    """Merge two value-sorted lists of distinct roots into one certified order."""
    ps, qs = list(ps), list(qs)
    out = []
    i = j = 0
    while i < len(ps) and j < len(qs):
        c, ps[i], qs[j] = compare(ps[i], qs[j])
        if c == 0:
            raise ValueError("common root in merge; polynomials are not coprime")
        if c < 0:
            out.append(("p", ps[i]))
            i += 1
        else:
            out.append(("q", qs[j]))
            j += 1
    out.extend(("p", r) for r in ps[i:])
    out.extend(("q", r) for r in qs[j:])
    return out


def _sequence_payload(seq) -> list[dict]:
    return [{"poly": label, **root.as_dict()} for label, root in seq]


def _strict_check(p: RatPoly, q: RatPoly) -> InterlaceResult:
    rp = _simple_real_roots(p, "p")
    if isinstance(rp, str):
        return _fail(rp)
    rq = _simple_real_roots(q, "q")
    if isinstance(rq, str):
        return _fail(rq)
    seq = merge_roots(rp, rq)
    for k in range(1, len(seq)):
        if seq[k][0] == seq[k - 1][0]:
            return _fail(
                f"two consecutive zeros of {seq[k][0]} without a zero of the other between them",
                sequence=_sequence_payload(seq),
                position=k,
            )
    return InterlaceResult(InterlaceVerdict.STRICT, {"sequence": _sequence_payload(seq)})


def interlace_check(p: RatPoly, q: RatPoly) -> InterlaceResult:
    """Strict / non-strict / failed interlacing of the zeros of ``p`` and ``q``."""
    if p.is_zero() or q.is_zero():
        raise ValueError("interlacing is undefined for the zero polynomial")
    g = gcd(p, q)
    if g.is_constant():
        return _strict_check(p, q)
    if not (is_real_rooted(p) and is_real_rooted(q)):
        return _fail("non-real zeros", common_factor=g.to_strings())
    res = _strict_check(exact_div(p, g), exact_div(q, g))
    if res.verdict is InterlaceVerdict.STRICT:
        return InterlaceResult(
            InterlaceVerdict.NONSTRICT, {**res.certificate, "common_factor": g.to_strings()}
        )
    return InterlaceResult(InterlaceVerdict.FAIL, {**res.certificate, "common_factor": g.to_strings()})


# -- Hermite-Biehler ------------------------------------------------------------


def hb_compose(p: RatPoly, q: RatPoly) -> RatPoly:
    """f(z) = p(z^2) + z q(z^2)."""
    return p.compose_square() + shift_mul_x(q.compose_square(), 1)


def even_odd_split(h: RatPoly) -> tuple[RatPoly, RatPoly]:
    """(even, odd_div) with h(x) = even(x^2) + x odd_div(x^2)."""
    return RatPoly(h.coeffs[0::2]), RatPoly(h.coeffs[1::2])


def hb_check(p: RatPoly, q: RatPoly) -> bool:
    """Hermite-Biehler side of stability for f = p(z^2) + z q(z^2).

    True iff p(0) q(0) > 0 and the zeros of p(z) and z q(z) are
    nonpositive and strictly interlacing.
    """
    if p.is_zero() or q.is_zero():
        return False
    if p[0] * q[0] <= 0:
        return False
    if count_real_roots(p, 0, None) or count_real_roots(q, 0, None):
        return False
    return interlace_check(p, shift_mul_x(q, 1)).strict


# -- real pairs -----------------------------------------------------------------


def real_pair_probe(p: RatPoly, q: RatPoly, samples: Iterable[Sequence[Scalar]]) -> bool:
    """Sampled necessary condition for (p, x q) being a real pair.

    Each sample is ``(A, B)`` (reused as ``(C, D)``) or ``(A, B, C, D)``; the
    combinations ``A p + B x q`` and ``C p + D q`` must have only real zeros.
    This is a falsifier, not a proof: the certified decision is
    ``interlace_check(p, x q)``.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("at least one sample is required")
    return find_falsifier(p, q, samples) is None


def find_falsifier(p: RatPoly, q: RatPoly, samples: Iterable[Sequence[Scalar]]):
    """First sample whose combination has a non-real zero, as (which, sample)."""
    xq = shift_mul_x(q, 1)
    for s in samples:
        A, B, C, D = (tuple(s) * 2)[:4] if len(s) == 2 else tuple(s)
        for which, r in (("r1", p * A + xq * B), ("r2", p * C + q * D)):
            if not r.is_zero() and not is_real_rooted(r):
                return which, tuple(Fraction(v) for v in (A, B, C, D))
    return None

