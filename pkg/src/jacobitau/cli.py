"""Command-line entry point.

Rationals are read and written as ``p/q`` strings; decimals in the output
are for reading only.  Exit codes: 0 all verdicts as expected, 2 some
unexpected failure, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from . import scanner
from .interlace import interlace_check
from .jacobi import JacobiParams, phi, phi_full
from .poly import RatPoly, frac_str
from .realroots import all_negative_simple, isolate
from .stability import stability_of_fg, stability_of_theorem4

_NEG_NUMBER = re.compile(r"^-(\d|\.\d)")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _params(ns) -> JacobiParams:
    return JacobiParams(ns.n, ns.alpha, ns.beta)


def _params_json(p: JacobiParams) -> dict:
    return {"n": p.n, "alpha": frac_str(p.alpha), "beta": frac_str(p.beta)}


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _add_point_args(sp, need_n=True):
    sp.add_argument("--n", type=int, required=need_n)
    sp.add_argument("--alpha", type=rational, required=True)
    sp.add_argument("--beta", type=rational, required=True)


def cmd_phi(ns) -> int:
    p = _params(ns)
    poly = phi_full(p, beta_shift=ns.beta_shift) if ns.full else phi(p.shift(db=-1) if ns.beta_shift else p)
    _emit({"params": _params_json(p), "full": ns.full, "beta_shift": ns.beta_shift, "coeffs": poly.to_strings()})
    return 0


def cmd_roots(ns) -> int:
    p = _params(ns)
    poly = phi(p)
    rl = isolate(poly, precision=ns.precision)
    out = rl.as_dict()
    out["verdict"] = all_negative_simple(poly).value
    out["params"] = _params_json(p)
    _emit(out)
    return 0


def _parse_coeffs(text: str) -> RatPoly:
    return RatPoly([Fraction(c) for c in text.split(",") if c.strip()])


def cmd_interlace(ns) -> int:
    if ns.pair == "custom":
        if ns.p is None or ns.q is None:
            raise ValueError("--pair custom needs --p and --q (ascending coefficients, comma separated)")
        p, q = _parse_coeffs(ns.p), _parse_coeffs(ns.q)
        label = {"p": ns.p, "q": ns.q}
    else:
        m = re.fullmatch(r"phi:([^,]+),([^,]+)", ns.pair)
        if not m:
            raise ValueError(f"bad --pair {ns.pair!r}")
        if ns.alpha is None or ns.beta is None:
            raise ValueError("phi pairs need --alpha and --beta")
        degs = [_degree_expr(t, ns.n) for t in m.groups()]
        p, q = (phi(d, ns.alpha, ns.beta) for d in degs)
        label = {"n": degs, "alpha": frac_str(ns.alpha), "beta": frac_str(ns.beta)}
    res = interlace_check(p, q)
    _emit({"pair": label, "verdict": res.verdict.value, "certificate": res.certificate})
    return 0


def _degree_expr(token: str, n) -> int:
    token = token.strip()
    if token.lstrip("-").isdigit():
        return int(token)
    m = re.fullmatch(r"N(?:-(\d+))?", token)
    if not m:
        raise ValueError(f"bad degree {token!r}; use an integer or N, N-1, N-2")
    if n is None:
        raise ValueError("symbolic pair degrees need --n")
    return n - int(m.group(1) or 0)


def cmd_stability(ns) -> int:
    if ns.target == "thm4":
        v = stability_of_theorem4(ns.n, ns.alpha, ns.beta)
    else:
        if ns.A is None:
            raise ValueError(f"--target {ns.target} needs --A")
        v = stability_of_fg(ns.target, ns.n, ns.alpha, ns.beta, ns.A)
    _emit({"params": _params_json(_params(ns)), "target": ns.target, **v.as_dict()})
    return 0


def cmd_scan(ns) -> int:
    a_values = tuple(Fraction(x) for x in ns.A.split(",")) if ns.A else scanner.DEFAULT_A_VALUES
    grid = scanner.GridSpec.from_ranges(ns.alpha_range, ns.beta_range, ns.n_range, a_values)
    reports = scanner.run_scan(ns.check, grid, jobs=ns.jobs)
    out = open(ns.csv, "w", newline="") if ns.csv else sys.stdout
    try:
        w = csv.writer(out)
        w.writerow(scanner.CSV_HEADER)
        for r in reports:
            w.writerow(r.csv_row())
    finally:
        if ns.csv:
            out.close()
    summary = scanner.summarize(reports)
    summary["check"] = ns.check
    text = json.dumps(summary, indent=2, sort_keys=True)
    if ns.summary:
        with open(ns.summary, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stderr.write(text + "\n")
    return 2 if summary["unexpected"] else 0


def cmd_threshold(ns) -> int:
    lo, hi = (Fraction(x) for x in ns.bracket.split(":"))
    a = scanner.find_threshold_thm4(ns.n, ns.beta, (lo, hi), ns.tol)
    _emit({"n": ns.n, "beta": frac_str(ns.beta), "alpha_star": frac_str(a), "decimal": f"{float(a):.6f}"})
    return 0


def cmd_vieta(ns) -> int:
    w = csv.writer(sys.stdout)
    w.writerow(["n", "sum", "decimal"])
    for n, s in scanner.vieta_asymptotics(ns.n_max, ns.alpha, ns.beta):
        w.writerow([n, frac_str(s), f"{float(s):.10f}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="jacobitau", description="Exact zero-location checks for Jacobi derivative-tower polynomials.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("phi", help="coefficients of phi_n (or the full tower polynomial)")
    _add_point_args(sp)
    sp.add_argument("--full", action="store_true", help="all derivative orders, not only even ones")
    sp.add_argument("--beta-shift", action="store_true", help="use beta-1 in place of beta")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("roots", help="isolated real zeros of phi_n")
    _add_point_args(sp)
    sp.add_argument("--precision", type=rational, default=Fraction(1, 10**8))
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("interlace", help="interlacing verdict for a pair of polynomials")
    sp.add_argument("--pair", required=True, help="phi:N,N-1 | phi:N,N-2 | phi:6,4 | custom")
    sp.add_argument("--n", type=int)
    sp.add_argument("--alpha", type=rational)
    sp.add_argument("--beta", type=rational)
    sp.add_argument("--p", help="ascending coefficients for --pair custom, e.g. 3,4,1")
    sp.add_argument("--q", help="ascending coefficients for --pair custom")
    sp.set_defaults(func=cmd_interlace)

    sp = sub.add_parser("stability", help="exact Routh-Hurwitz verdict")
    sp.add_argument("--target", choices=["thm4", "f", "g"], required=True)
    _add_point_args(sp)
    sp.add_argument("--A", type=rational)
    sp.set_defaults(func=cmd_stability)

    sp = sub.add_parser("scan", help="run a check over a parameter grid")
    sp.add_argument("--check", choices=sorted(scanner.CHECKS), required=True)
    sp.add_argument("--alpha-range", required=True, help="a:b:step, inclusive")
    sp.add_argument("--beta-range", required=True, help="a:b:step, inclusive")
    sp.add_argument("--n-range", required=True, help="a:b, inclusive")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--A", help="comma separated A values for --check chains")
    sp.add_argument("--csv", help="write CSV here instead of stdout")
    sp.add_argument("--summary", help="write the JSON summary here instead of stderr")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("threshold", help="bisect the alpha where Phi_n(1; mu) loses stability")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--beta", type=rational, required=True)
    sp.add_argument("--bracket", required=True, help="lo:hi")
    sp.add_argument("--tol", type=rational, default=Fraction(1, 10**5))
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("vieta", help="exact zero sums of phi_n")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--alpha", type=rational, required=True)
    sp.add_argument("--beta", type=rational, required=True)
    sp.set_defaults(func=cmd_vieta)
    return ap


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "-4/5" as an option flag
    out: list[str] = []
    for tok in argv:
        if out and _NEG_NUMBER.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return ns.func(ns)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"jacobitau: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
