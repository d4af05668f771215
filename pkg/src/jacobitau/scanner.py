"""Parameter scans over (n, alpha, beta) grids.

Each check maps one grid point to a :class:`ScanReport` whose verdict is
``holds``, ``fails`` or ``undefined`` (a hypothesis is false, so nothing is
asserted).  Reports carry exact rational parameters, which is all that is
needed to reproduce them; :func:`reverify` does exactly that.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Optional

from .interlace import hb_check, interlace_check
from .jacobi import JacobiParams, phi
from .poly import RatPoly, Scalar, frac_str, shift_mul_x
from .realroots import RootVerdict, all_negative_simple, isolate, strictly_less, vieta_sum, zr
from .stability import stability_of_theorem4

DEFAULT_A_VALUES = (Fraction(1, 2), Fraction(1), Fraction(3))


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDEFINED = "undefined"


# -- grids ----------------------------------------------------------------------


def parse_range(text: str, integer: bool = False) -> list:
    """Inclusive ``a:b:step`` (or ``a:b`` with step 1) over exact rationals."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"bad range {text!r}; expected a:b or a:b:step")
    lo, hi = Fraction(parts[0]), Fraction(parts[1])
    step = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
    if step <= 0:
        raise ValueError("range step must be positive")
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    if integer:
        if any(v.denominator != 1 for v in out):
            raise ValueError(f"integer range expected, got {text!r}")
        return [int(v) for v in out]
    return out


@dataclass(frozen=True)
class GridSpec:
    ns: tuple[int, ...]
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]
    a_values: tuple[Fraction, ...] = DEFAULT_A_VALUES

    def __post_init__(self):
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(Fraction(b) for b in self.betas))
        object.__setattr__(self, "a_values", tuple(Fraction(a) for a in self.a_values))

    @classmethod
    def from_ranges(cls, alpha_range: str, beta_range: str, n_range: str, a_values=DEFAULT_A_VALUES):
        return cls(
            tuple(parse_range(n_range, integer=True)),
            tuple(parse_range(alpha_range)),
            tuple(parse_range(beta_range)),
            tuple(a_values),
        )

    def points(self) -> list[JacobiParams]:
        return [JacobiParams(n, a, b) for n, a, b in product(self.ns, self.alphas, self.betas)]

    def __len__(self):
        return len(self.ns) * len(self.alphas) * len(self.betas)


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    check_id: str
    n: int
    alpha: Fraction
    beta: Fraction
    verdict: Verdict
    region: str = ""
    expected: bool = False
    extra: dict = field(default_factory=dict)
    witness: Optional[dict] = None
    elapsed: float = 0.0

    @property
    def params(self) -> JacobiParams:
        return JacobiParams(self.n, self.alpha, self.beta)

    @property
    def unexpected(self) -> bool:
        """A failure at a point where the check is claimed to hold."""
        return self.expected and self.verdict is Verdict.FAILS

    def sort_key(self):
        return (self.check_id, self.n, self.alpha, self.beta, sorted(self.extra.items()))

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "n": self.n,
            "alpha": frac_str(self.alpha),
            "beta": frac_str(self.beta),
            "verdict": self.verdict.value,
            "region": self.region,
            "expected": self.expected,
            "extra": dict(self.extra),
            "witness": self.witness,
            "elapsed": self.elapsed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        return cls(
            check_id=d["check_id"],
            n=int(d["n"]),
            alpha=Fraction(d["alpha"]),
            beta=Fraction(d["beta"]),
            verdict=Verdict(d["verdict"]),
            region=d.get("region", ""),
            expected=bool(d.get("expected", False)),
            extra=dict(d.get("extra") or {}),
            witness=d.get("witness"),
            elapsed=float(d.get("elapsed", 0.0)),
        )

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list[str]:
        return [
            self.check_id,
            str(self.n),
            frac_str(self.alpha),
            frac_str(self.beta),
            ";".join(f"{k}={v}" for k, v in sorted(self.extra.items())),
            self.region,
            self.verdict.value,
            "yes" if self.expected else "no",
            "" if self.witness is None else json.dumps(self.witness, sort_keys=True),
            f"{self.elapsed:.4f}",
        ]


CSV_HEADER = ["check_id", "n", "alpha", "beta", "extra", "region", "verdict", "expected", "witness", "elapsed"]


# -- regions --------------------------------------------------------------------


def in_conj_a_region(a: Fraction, b: Fraction) -> bool:
    return (-1 < a < 0 and b > -1) or (0 <= a < 1 and b > 0) or (1 <= a < 2 and b > 1)


def in_ccw_region(a: Fraction, b: Fraction) -> bool:
    return -1 < a < 1 and b > -1


def _ccw_region(a, b) -> str:
    if in_ccw_region(a, b):
        return "ccw"
    if 1 <= a < 2 and b > 0:
        return "ccw_alpha_1_2"
    if -1 < a < 0 and -2 < b:
        return "ccw_beta_above_minus2"
    return "outside"


def _conj_b_region(a, b) -> str:
    if -1 < a < 0 < b:
        return "proved_neg_alpha"
    if 0 < a < 1 < b:
        return "proved_pos_alpha"
    if -1 < b < 0 < a < 1:
        return "pocket"
    return "outside"


def _derivs_region(a, b) -> bool:
    return (-1 < a < 1 and b > -1) or (1 <= a < 2 and b > 0)


# -- per-point checks -----------------------------------------------------------


def _ph(p: JacobiParams, dn=0, da=0, db=0) -> RatPoly:
    return phi(p.shift(dn, da, db))


def _interlace_report(res) -> Optional[dict]:
    return {"verdict": res.verdict.value, **res.certificate}


def _check_conj_a(p: JacobiParams, extra: dict):
    res = interlace_check(_ph(p), _ph(p, dn=-1))
    region = "cw_star" if in_conj_a_region(p.alpha, p.beta) else "outside"
    verdict = Verdict.HOLDS if res.strict else Verdict.FAILS
    return verdict, region, region == "cw_star", None if res.strict else _interlace_report(res)


def _check_conj_b(p: JacobiParams, extra: dict):
    shift = 1 if extra.get("pair") == "shift" else 0
    res = interlace_check(_ph(p, da=shift, db=shift), _ph(p, dn=-2, da=shift, db=shift))
    region = _conj_b_region(p.alpha, p.beta)
    # the shifted pair is claimed only on the negative-alpha strip
    expected = region == "proved_neg_alpha" or (region == "proved_pos_alpha" and not shift)
    verdict = Verdict.HOLDS if res.strict else Verdict.FAILS
    return verdict, region, expected, None if res.strict else _interlace_report(res)


def _check_ccw(p: JacobiParams, extra: dict):
    v = all_negative_simple(_ph(p))
    region = _ccw_region(p.alpha, p.beta)
    if v is RootVerdict.NEGATIVE_SIMPLE:
        return Verdict.HOLDS, region, region != "outside", None
    return Verdict.FAILS, region, region != "outside", {"root_verdict": v.value}


def _check_derivs(p: JacobiParams, extra: dict):
    polys = [_ph(p).derivative(), _ph(p, dn=-1).derivative(), _ph(p, db=-1).derivative()]
    names = ["d_phi_n", "d_phi_n_minus_1", "d_phi_n_beta_minus_1"]
    expected = _derivs_region(p.alpha, p.beta)
    region = "lemma" if expected else "outside"
    verdicts = {}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if polys[i].is_zero() or polys[j].is_zero():
            return Verdict.UNDEFINED, region, False, {"reason": "zero derivative"}
        res = interlace_check(polys[i], polys[j])
        verdicts[f"{names[i]}|{names[j]}"] = res.verdict.value
        if not res:
            return Verdict.FAILS, region, expected, {"pair": [names[i], names[j]], **_interlace_report(res)}
    return Verdict.HOLDS, region, expected, {"pairs": verdicts}


def chain_holds(values) -> Optional[int]:
    """Index of the first broken ``<`` in a chain of zr values, or None.

    A link between two ``-inf`` entries is vacuous and counts as satisfied.
    """
    for k in range(len(values) - 1):
        a, b = values[k], values[k + 1]
        if _is_neg_inf(a) and _is_neg_inf(b):
            continue
        if not strictly_less(a, b):
            return k
    return None


def _is_neg_inf(x) -> bool:
    return isinstance(x, float) and x == float("-inf")


def _zr_chains(p: JacobiParams) -> dict:
    """Named chains of zr inequalities behind the phi_n / phi_{n-2} interlacing, per index i."""
    roots = {}

    def z(i, dn=0, up=0):
        key = (dn, up)
        if key not in roots:
            roots[key] = isolate(_ph(p, dn=dn, da=up, db=up), precision=1)
        return zr(roots[key], i)

    chains = {}
    for i in range(1, p.n // 2 + 1):
        chains[f"z_rel0a[{i}]"] = [z(i, -2, 1), z(i, -1, 1), z(i - 1, -2, 1)]
        chains[f"z_rel0b[{i}]"] = [z(i, -1, 1), z(i, 0, 1), z(i - 1, -1, 1)]
        chains[f"cz_rel3[{i}]"] = [z(i, -2, 1), z(i, 0, 0), z(i - 1, -2, 1)]
        chains[f"cz_rel5[{i}]"] = [z(i, 0, 1), z(i, 0, 0), z(i - 1, 0, 1)]
        chains[f"z_rel1[{i}]"] = [z(i, -2, 1), z(i, -1, 1), z(i, 0, 1), z(i, 0, 0), z(i - 1, -2, 1)]
        chains[f"z_rel2[{i}]"] = [z(i, -2, 1), z(i, -2, 0), z(i, -1, 0), z(i, 0, 0), z(i - 1, -2, 1)]
    return chains


def combination_pairs(p: JacobiParams, A: Scalar) -> dict[str, tuple[RatPoly, RatPoly]]:
    """The two phi-combination pairs built from the even and odd parts of f and g."""
    A = Fraction(A)
    n, a, b = p.n, p.alpha, p.beta
    s = n + a + b
    f_pair = (
        _ph(p) * (2 * A) + shift_mul_x(_ph(p, dn=-2, da=1, db=1), 1) * s,
        _ph(p, dn=-1, da=1, db=1) * (A * (s + 1)) + _ph(p, dn=-1) * 2,
    )
    g_pair = (
        shift_mul_x(_ph(p, dn=-1, da=1, db=1), 1) * (s + 1) + _ph(p, dn=-1) * (2 * A),
        _ph(p) * 2 + _ph(p, dn=-2, da=1, db=1) * (A * s),
    )
    return {"f": f_pair, "g": g_pair}


def _check_chains(p: JacobiParams, extra: dict):
    region = "proved_neg_alpha" if -1 < p.alpha < 0 < p.beta else "outside"
    expected = region != "outside"
    if p.n < 5:
        return Verdict.UNDEFINED, region, False, {"reason": "n < 5"}
    for name, values in _zr_chains(p).items():
        k = chain_holds(values)
        if k is not None:
            return Verdict.FAILS, region, expected, {"chain": name, "link": k}
    for name, (u, v) in (
        ("interl_2_n_minus_2", (_ph(p), shift_mul_x(_ph(p, dn=-2, da=1, db=1), 1))),
        ("interl_2_n", (_ph(p), shift_mul_x(_ph(p, da=1, db=1), 1))),
    ):
        res = interlace_check(u, v)
        if not res.strict:
            return Verdict.FAILS, region, expected, {"pair": name, **_interlace_report(res)}
    a_values = [Fraction(x) for x in str(extra.get("A", "")).split(",") if x]
    for A in a_values:
        for which, (even, odd) in combination_pairs(p, A).items():
            if not hb_check(even, odd):
                return Verdict.FAILS, region, expected, {"pair": f"comb_{which}", "A": frac_str(A)}
    return Verdict.HOLDS, region, expected, None


def _z1(poly: RatPoly):
    return zr(isolate(poly, precision=1), 1)


def _strict_all(pairs) -> bool:
    return all(interlace_check(u, v).strict for u, v in pairs)


def _check_sec5(p: JacobiParams, extra: dict):
    lemma = extra.get("lemma", "instr1")
    if p.n < 3:
        return Verdict.UNDEFINED, lemma, False, {"reason": "n < 3"}
    if lemma == "instr1":
        pn, pm, pk = _ph(p), _ph(p, dn=-1), _ph(p, dn=-2)
        hyp = (
            _strict_all([(pn, pm), (pn, pk), (pm, pk)])
            and strictly_less(_z1(pk), _z1(pm))
            and strictly_less(_z1(pm), _z1(pn))
        )
        conclusion = (_ph(p, db=-1), _ph(p, dn=-1, db=-1))
    elif lemma == "final":
        pn, up_n, up_m = _ph(p), _ph(p, da=1, db=1), _ph(p, dn=-1, da=1, db=1)
        hyp = (
            _strict_all([(pn, up_n), (pn, up_m)])
            and strictly_less(_z1(up_m), _z1(pn))
            and strictly_less(_z1(up_n), _z1(pn))
        )
        conclusion = (_ph(p, da=1), _ph(p, dn=-1, da=1))
    else:
        raise ValueError(f"unknown lemma {lemma!r}")
    if not hyp:
        return Verdict.UNDEFINED, lemma, True, None
    res = interlace_check(*conclusion)
    if res.strict:
        return Verdict.HOLDS, lemma, True, None
    return Verdict.FAILS, lemma, True, _interlace_report(res)


def _check_thm4(p: JacobiParams, extra: dict):
    region = "stable_strip" if -1 < p.alpha < 0 and p.beta > -1 else "outside"
    if p.n < 4:
        return Verdict.UNDEFINED, region, False, {"reason": "n < 4"}
    v = stability_of_theorem4(p.n, p.alpha, p.beta)
    if v.stable:
        return Verdict.HOLDS, region, region == "stable_strip", None
    return Verdict.FAILS, region, region == "stable_strip", v.as_dict()


def lem_main_sides(p: JacobiParams) -> tuple[bool, bool, Optional[bool]]:
    """(simple real zeros of the beta-1 polynomial, strict negative interlacing, zr_1 order).

    The zr_1 entry is None when the beta-1 polynomial is not real-rooted.
    """
    shifted = _ph(p, db=-1)
    left = all_negative_simple(shifted) is RootVerdict.NEGATIVE_SIMPLE
    pn, pm = _ph(p), _ph(p, dn=-1)
    right = (
        all_negative_simple(pn) is not RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
        and all_negative_simple(pm) is not RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
        and interlace_check(pn, pm).strict
    )
    order = None
    if isolate(shifted, precision=1).all_real:
        z_m, z_n = _z1(pm), _z1(pn)
        order = not strictly_less(z_n, z_m)
    return left, right, order


def _check_lem_main(p: JacobiParams, extra: dict):
    if not (p.alpha > -1 and p.n + p.alpha + p.beta > 0 and p.n >= 4):
        return Verdict.UNDEFINED, "outside", False, {"reason": "hypothesis of the lemma"}
    left, right, order = lem_main_sides(p)
    region = "real_rooted" if left else "not_simple_real"
    witness = {"simple_real": left, "strict_interlace": right, "zr1_order": order}
    if left == right and order is not False:
        return Verdict.HOLDS, region, True, witness
    return Verdict.FAILS, region, True, witness


CHECKS: dict[str, Callable] = {
    "conjA": _check_conj_a,
    "conjB": _check_conj_b,
    "ccw": _check_ccw,
    "lemma-derivs": _check_derivs,
    "chains": _check_chains,
    "sec5": _check_sec5,
    "thm4": _check_thm4,
    "lem-main": _check_lem_main,
}

# extra-parameter fan-out per check; each dict yields one report per point
_FANOUT: dict[str, Callable[[GridSpec], list[dict]]] = {
    "conjB": lambda g: [{"pair": "base"}, {"pair": "shift"}],
    "sec5": lambda g: [{"lemma": "instr1"}, {"lemma": "final"}],
    "chains": lambda g: [{"A": ",".join(frac_str(a) for a in g.a_values)}],
}


def check_point(check_id: str, params: JacobiParams, extra: Optional[dict] = None) -> ScanReport:
    """Run one check at one parameter point."""
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}")
    extra = dict(extra or {})
    t0 = time.perf_counter()
    verdict, region, expected, witness = CHECKS[check_id](params, extra)
    return ScanReport(
        check_id=check_id,
        n=params.n,
        alpha=params.alpha,
        beta=params.beta,
        verdict=verdict,
        region=region,
        expected=expected,
        extra=extra,
        witness=witness,
        elapsed=time.perf_counter() - t0,
    )


def _run_task(task) -> ScanReport:
    check_id, n, a, b, extra = task
    return check_point(check_id, JacobiParams(n, a, b), extra)


def run_scan(check_id: str, grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    """Run ``check_id`` over ``grid``; reports come back canonically sorted."""
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}")
    fan = _FANOUT.get(check_id, lambda g: [{}])(grid)
    tasks = [(check_id, p.n, p.alpha, p.beta, e) for p in grid.points() for e in fan]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        reports = [_run_task(t) for t in tasks]
    return sorted(reports, key=ScanReport.sort_key)


def scan_conjecture_a(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    if any(a <= -1 for a in grid.alphas):
        raise ValueError("alpha must exceed -1")
    return run_scan("conjA", grid, jobs)


def scan_conjecture_b(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    if any(a <= -1 for a in grid.alphas):
        raise ValueError("alpha must exceed -1")
    return run_scan("conjB", grid, jobs)


def scan_ccw(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    return run_scan("ccw", grid, jobs)


def check_section2_lemma(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    return run_scan("lemma-derivs", grid, jobs)


def check_chains(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    return run_scan("chains", grid, jobs)


def check_section5(grid: GridSpec, jobs: int = 1) -> list[ScanReport]:
    return run_scan("sec5", grid, jobs)


def summarize(reports: Iterable[ScanReport]) -> dict:
    reports = list(reports)
    counts = {v.value: 0 for v in Verdict}
    for r in reports:
        counts[r.verdict.value] += 1
    unexpected = [r.to_dict() for r in reports if r.unexpected]
    return {"total": len(reports), "counts": counts, "unexpected": len(unexpected), "unexpected_reports": unexpected}


def reverify(report: ScanReport) -> bool:
    """Recompute a report from its exact parameters and compare verdicts."""
    again = check_point(report.check_id, report.params, report.extra)
    return again.verdict is report.verdict and again.witness == report.witness


# -- phi_n / phi_{n-2} failure pocket ------------------------------------------


def _conj_b_base_holds(n: int, a: Fraction, b: Fraction) -> bool:
    return interlace_check(phi(n, a, b), phi(n - 2, a, b)).strict


def refine_boundary(n: int, holds_at, fails_at, depth: int = 2):
    """Bisect the segment from a holding point to a failing one ``depth`` times.

    Returns the final (holds, fails) pair of (alpha, beta) points.
    """
    h, f = tuple(map(Fraction, holds_at)), tuple(map(Fraction, fails_at))
    if not _conj_b_base_holds(n, *h) or _conj_b_base_holds(n, *f):
        raise ValueError("refine_boundary needs a holding start and a failing end")
    for _ in range(depth):
        mid = ((h[0] + f[0]) / 2, (h[1] + f[1]) / 2)
        if _conj_b_base_holds(n, *mid):
            h = mid
        else:
            f = mid
    return h, f


def search_conjecture_b_pocket(
    ns: Iterable[int],
    alphas: Iterable[Scalar],
    betas: Iterable[Scalar],
    depth: int = 2,
    limit: Optional[int] = None,
) -> list[ScanReport]:
    """Failing points of (phi_n, phi_{n-2}) interlacing, tightened near the boundary.

    For each failing grid point with a holding neighbour along alpha, the
    segment between them is bisected ``depth`` times and the failing end is
    reported.  Points with no holding neighbour are reported as found.
    """
    alphas = sorted(Fraction(a) for a in alphas)
    betas = sorted(Fraction(b) for b in betas)
    out = []
    for n in ns:
        for b in betas:
            row = [_conj_b_base_holds(n, a, b) for a in alphas]
            for k, ok in enumerate(row):
                if ok:
                    continue
                a = alphas[k]
                if k > 0 and row[k - 1]:
                    _, (a, b2) = refine_boundary(n, (alphas[k - 1], b), (a, b), depth)
                    assert b2 == b
                out.append(check_point("conjB", JacobiParams(n, a, b), {"pair": "base"}))
                if limit is not None and len(out) >= limit:
                    return sorted(out, key=ScanReport.sort_key)
    return sorted(out, key=ScanReport.sort_key)


# -- thresholds and asymptotics ---------------------------------------------------


def find_threshold_thm4(n: int, beta: Scalar, bracket, tol: Scalar) -> Fraction:
    """Bisection on alpha for the onset of instability of Phi_n(1; mu).

    Midpoints are plain exact midpoints.  Returns the unstable end of the
    final bracket.
    """
    lo, hi = (Fraction(x) for x in bracket)
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    s_lo = stability_of_theorem4(n, lo, beta).stable
    s_hi = stability_of_theorem4(n, hi, beta).stable
    if s_lo == s_hi:
        raise ValueError("bracket does not straddle")
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        if stability_of_theorem4(n, mid, beta).stable == s_lo:
            lo = mid
        else:
            hi = mid
    return hi if s_lo else lo


def vieta_asymptotics(n_max: int, alpha: Scalar, beta: Scalar, n_min: int = 4) -> list[tuple[int, Fraction]]:
    """Exact zero sums of phi_n for n = n_min..n_max."""
    if n_max < n_min:
        raise ValueError(f"n_max must be at least {n_min}")
    return [(n, vieta_sum(phi(n, alpha, beta))) for n in range(n_min, n_max + 1)]


def split_parity(rows: list[tuple[int, Fraction]]) -> dict[str, list[tuple[int, Fraction]]]:
    return {"even": [r for r in rows if r[0] % 2 == 0], "odd": [r for r in rows if r[0] % 2 == 1]}


def find_nonreal_positive(ns: Iterable[int], alpha: Scalar, betas: Iterable[Scalar]):
    """First (n, beta) where phi_n has positive coefficients but a non-real zero."""
    for n in ns:
        for b in betas:
            p = phi(n, alpha, b)
            if all(c > 0 for c in p.coeffs) and not isolate(p, precision=1).all_real:
                return n, Fraction(b)
    return None
