"""Command-line front end.

    qaddform eval FAMILY N [params] [--x X]
    qaddform verify {thm41,cor51,suite,ncalg-identities,repr,limits,all} ...
    qaddform repr check [--suite ...]
    qaddform limits scan --l 2 --c 1/2 --r 1 --m 8,16,32
    qaddform ncalg {eval,verify} ...
    qaddform report FILE

Verification output is JSON lines: a header object first, then one record per
check in a stable order.  Exit status is 0 when every record passes, 1 when
any fails and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .coeffring import SqrtField
from .errors import QAddFormError
from .report import VerificationReport, read_jsonl, summary, to_csv, to_jsonl

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FAMILIES = ("aw", "pjacobi", "qlaguerre", "bigqjacobi", "chebyshev", "jacobiR")
VERIFY_SUITES = ("thm41", "cor51", "suite", "ncalg-identities", "repr", "limits", "all")


class UsageError(Exception):
    pass


def number(text: str):
    """'p/q' or an integer gives an exact Fraction; anything with '.' or 'e' is a float."""
    text = text.strip()
    try:
        if any(ch in text.lower() for ch in ".e") and "/" not in text:
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(Fraction(x)) if "/" in x else float(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


# ------------------------------------------------------------------- eval
def _exact(*vals) -> bool:
    return all(not isinstance(v, float) for v in vals if v is not None)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def eval_family(args) -> str:
    from . import polyfam

    fam, n = args.family, args.n
    if n < 0:
        raise UsageError("degree must be nonnegative")
    if fam == "chebyshev":
        poly = polyfam.chebyshev_T(n)
    elif fam == "jacobiR":
        alpha = args.alpha if args.alpha is not None else 0
        beta = args.beta if args.beta is not None else 0
        poly = polyfam.classical_jacobi_R(n, alpha, beta)
    elif fam == "aw":
        _need(args, "a", "b", "c", "d", "q")
        vals = [args.a, args.b, args.c, args.d, args.q]
        if not _exact(*vals):
            vals = [float(v) for v in vals]
        poly = polyfam.askey_wilson(n, *vals[:4], vals[4])
    elif fam == "bigqjacobi":
        _need(args, "c", "d", "q")
        alpha = int(args.alpha or 0)
        beta = int(args.beta or 0)
        c, d, q = args.c, args.d, args.q
        if not _exact(c, d, q):
            c, d, q = float(c), float(d), float(q)
        poly = polyfam.big_qjacobi(n, alpha, beta, c, d, q)
    else:
        _need(args, "s", "t", "q")
        alpha = int(args.alpha or 0)
        beta = int(args.beta or 0)
        if _exact(args.s, args.t, args.q):
            K = SqrtField(args.q)
            s, t, q, v = K(args.s), K(args.t), K.q, K.v
        else:
            s, t, q = float(args.s), float(args.t), float(args.q)
            v = q ** 0.5
        if fam == "pjacobi":
            poly = polyfam.pjacobi(n, alpha, beta, s, t, q, sqrt_q=v)
        else:
            poly = polyfam.qlaguerre(n, alpha, s, t, q, sqrt_q=v)
    if args.x is None:
        return str(poly)
    x = args.x
    if isinstance(x, float) or any(isinstance(c, float) for c in poly.coeffs):
        acc = 0.0
        for c in reversed(poly.coeffs):
            acc = acc * float(x) + float(c)
        return repr(acc)
    val = poly(x)
    rational = getattr(val, "as_rational", None)
    if rational is not None and rational() is not None:
        val = rational()
    return str(val)


# ------------------------------------------------------------------- suites
@dataclass
class SuiteConfig:
    """What to run and where the report goes; ``tol`` is ignored by exact checks."""

    suite: str
    grid: str | None = None
    mode: str = "exact"
    tol: float | None = None
    out: str | None = None
    csv: str | None = None
    workers: int | None = None
    params: dict = field(default_factory=dict)


def _thm41_single(cfg: SuiteConfig) -> list[VerificationReport]:
    from .verify import Thm41Params, thm41_exact, thm41_pointwise

    p = cfg.params
    P = Thm41Params(p["l"], p["m"], p["p"], p["q"], p["s"], p["t"])
    if cfg.mode == "exact":
        return [thm41_exact(P)]
    return [thm41_pointwise(P, tol=cfg.tol or 1e-9)]


def _grid(cfg: SuiteConfig):
    from .verify import packaged_grid, read_grid

    if cfg.grid in (None, "default"):
        return packaged_grid()
    return read_grid(cfg.grid)


def _thm41_grid(cfg: SuiteConfig) -> list[VerificationReport]:
    from .verify import run_thm41_grid

    return run_thm41_grid(_grid(cfg), cfg.workers)


def _cor51(cfg: SuiteConfig) -> list[VerificationReport]:
    from .verify import cor51_check

    p = cfg.params
    tol = cfg.tol or 1e-9
    if p.get("l") is not None:
        _require(p, "m", "n", "p")
        return [cor51_check(p["l"], p["m"], p["n"], p["p"], float(_get(p, "s", 1)), float(_get(p, "t", 1)),
                            float(_get(p, "q", 0.5)), tol, _get(p, "variant", "plus"))]
    out = []
    for variant in ("plus", "minus"):
        for l in range(4):
            for n in range(l + 1):
                for m in range(4):
                    for pp in range(3):
                        out.append(cor51_check(l, m, n, pp, 1.0, 1.0, 0.5, tol, variant))
    return out


def _get(p: dict, key: str, default):
    val = p.get(key)
    return default if val is None else val


def _require(p: dict, *names):
    missing = [n for n in names if p.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _ncalg(cfg: SuiteConfig) -> list[VerificationReport]:
    from .ncalg.identities import run_suite

    return run_suite(cfg.params.get("ids"))


def _repr(cfg: SuiteConfig) -> list[VerificationReport]:
    from .representation import REPR_SUITES, run_repr_suite

    p = cfg.params
    return run_repr_suite(_get(p, "suites", REPR_SUITES), float(_get(p, "q", 0.5)), float(_get(p, "sigma", 1)),
                          float(_get(p, "tau", 1)), int(_get(p, "N", 40)))


def _limits(cfg: SuiteConfig) -> list[VerificationReport]:
    from .limits import LimitScanConfig, classical_suite, qlim_scan

    return classical_suite() + [qlim_scan(LimitScanConfig())]


def _all(cfg: SuiteConfig) -> list[VerificationReport]:
    sub = SuiteConfig("all", cfg.grid, workers=cfg.workers)
    return _ncalg(sub) + _repr(sub) + _thm41_grid(sub) + _cor51(sub) + _limits(sub)


RUNNERS: dict[str, Callable[[SuiteConfig], list[VerificationReport]]] = {
    "thm41": _thm41_single, "suite": _thm41_grid, "cor51": _cor51, "ncalg-identities": _ncalg,
    "repr": _repr, "limits": _limits, "all": _all,
}


def run_suite(cfg: SuiteConfig) -> list[VerificationReport]:
    if cfg.suite == "thm41" and cfg.params.get("l") is None:
        return _thm41_grid(cfg)
    return RUNNERS[cfg.suite](cfg)


def emit(reports: Sequence[VerificationReport], header: dict, out: str | None, csv_path: str | None) -> int:
    text = json.dumps({"header": header}, sort_keys=True) + "\n" + to_jsonl(reports)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(to_csv(reports))
    summ = summary(reports)
    if summ["failed"]:
        print(f"{len(summ['failed'])} of {summ['total']} checks failed: " + ", ".join(sorted(set(summ["failed"]))),
              file=sys.stderr)
        return EXIT_FAIL
    if out:
        print(f"{summ['passed']} of {summ['total']} checks passed", file=sys.stderr)
    return EXIT_OK


def _header(command: str, cfg_params: dict) -> dict:
    return {"tool": "qaddform", "version": __version__, "command": command,
            "params": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in sorted(cfg_params.items())
                       if v is not None}}


# ------------------------------------------------------------------- parser
def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.add_argument("--csv", help="also write a CSV summary")
    p.add_argument("--workers", type=int, default=None, help="process pool size for grid runs")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qaddform", description="q-special functions and addition formula checks")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="print a polynomial or its value")
    ev.add_argument("family", choices=FAMILIES)
    ev.add_argument("n", type=int)
    for name in ("a", "b", "c", "d", "s", "t", "q", "x", "alpha", "beta"):
        ev.add_argument(f"--{name}", type=number)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("suite", choices=VERIFY_SUITES)
    for name in ("l", "m", "n", "p"):
        ve.add_argument(f"--{name}", type=int)
    for name in ("q", "s", "t"):
        ve.add_argument(f"--{name}", type=number)
    mode = ve.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--float", dest="mode", action="store_const", const="float")
    ve.add_argument("--variant", choices=("plus", "minus"))
    ve.add_argument("--grid", help="CSV grid file or 'default'")
    ve.add_argument("--tol", type=float)
    ve.add_argument("--id", dest="ids", action="append", help="restrict the identity suite (repeatable)")
    _add_output(ve)

    rp = sub.add_parser("repr", help="operator-level checks")
    rsub = rp.add_subparsers(dest="repr_command", required=True)
    rc = rsub.add_parser("check")
    rc.add_argument("--q", type=number, default=Fraction(1, 2))
    rc.add_argument("--sigma", type=number, default=Fraction(1))
    rc.add_argument("--tau", type=number, default=Fraction(1))
    rc.add_argument("--N", type=int, default=40)
    rc.add_argument("--suite", action="append", choices=("spectrum", "norms", "actions", "tensor", "abstract"))
    _add_output(rc)

    li = sub.add_parser("limits", help="classical endpoint and q -> 1 scan")
    lsub = li.add_subparsers(dest="limits_command", required=True)
    sc = lsub.add_parser("scan")
    sc.add_argument("--l", type=int, default=2)
    sc.add_argument("--c", type=number, default=Fraction(1, 2))
    sc.add_argument("--r", type=int, default=1)
    sc.add_argument("--m", type=int_list, default=(8, 16, 32))
    sc.add_argument("--x", type=float_list, default=(1.25, -1.0))
    sc.add_argument("--out", help="write the JSON report here")
    sc.add_argument("--csv", help="per-m deviations as CSV")

    nc = sub.add_parser("ncalg", help="the noncommutative algebra")
    nsub = nc.add_subparsers(dest="ncalg_command", required=True)
    ne = nsub.add_parser("eval", help="normal form of an expression")
    ne.add_argument("expr")
    nv = nsub.add_parser("verify", help="compare two expressions, or run the identity suite")
    nv.add_argument("lhs", nargs="?")
    nv.add_argument("rhs", nargs="?")
    nv.add_argument("--id", dest="ids", action="append")
    _add_output(nv)

    rep = sub.add_parser("report", help="summarise a JSON-lines report")
    rep.add_argument("file")
    rep.add_argument("--csv", help="write a CSV summary")
    return ap


# ------------------------------------------------------------------- commands
def _cmd_eval(args) -> int:
    print(eval_family(args))
    return EXIT_OK


def _cmd_verify(args) -> int:
    params = {k: getattr(args, k) for k in ("l", "m", "n", "p", "q", "s", "t", "variant", "ids")}
    if args.suite == "thm41" and args.l is not None:
        _require(params, "m", "p", "q", "s", "t")
        mode = args.mode or "exact"
        if mode == "exact" and not _exact(args.q, args.s, args.t):
            raise UsageError("exact mode needs rational q, s, t (write them as p/q)")
    else:
        default = {"suite": "exact", "thm41": "exact", "ncalg-identities": "exact", "all": "mixed"}
        mode = args.mode or default.get(args.suite, "float")
    cfg = SuiteConfig(args.suite, args.grid, mode, args.tol, args.out, args.csv, args.workers, params)
    reports = run_suite(cfg)
    hdr = _header(f"verify {args.suite}", {"grid": args.grid, "mode": mode, "tol": args.tol,
                                           **{k: v for k, v in params.items() if k != "ids"}})
    return emit(reports, hdr, args.out, args.csv)


def _cmd_repr(args) -> int:
    params = {"q": args.q, "sigma": args.sigma, "tau": args.tau, "N": args.N, "suites": args.suite}
    reports = _repr(SuiteConfig("repr", params=params))
    hdr = _header("repr check", {k: v for k, v in params.items() if k != "suites"} | {"suite": args.suite})
    return emit(reports, hdr, args.out, args.csv)


def _cmd_limits(args) -> int:
    from .limits import LimitScanConfig, qlim_scan, scan_csv

    cfg = LimitScanConfig(l=args.l, c=Fraction(args.c), r=args.r, m_list=tuple(args.m), x_samples=tuple(args.x))
    rep = qlim_scan(cfg)
    text = json.dumps(rep.to_record(), sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(scan_csv(rep))
    if not rep.passed:
        print(rep.notes, file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_ncalg(args) -> int:
    from .ncalg.identities import identity_check
    from .ncalg.parser import parse_nc, print_nc

    if args.ncalg_command == "eval":
        print(print_nc(parse_nc(args.expr)))
        return EXIT_OK
    if args.lhs is not None:
        if args.rhs is None:
            raise UsageError("give both LHS and RHS, or neither to run the identity suite")
        rep = identity_check("ncalg.user", parse_nc(args.lhs), parse_nc(args.rhs),
                             {"lhs": args.lhs, "rhs": args.rhs})
        reports = [rep]
    else:
        reports = _ncalg(SuiteConfig("ncalg-identities", params={"ids": args.ids}))
    return emit(reports, _header("ncalg verify", {}), args.out, args.csv)


def _cmd_report(args) -> int:
    with open(args.file) as fh:
        reports = read_jsonl(fh.read())
    summ = summary(reports)
    print(json.dumps(summ, sort_keys=True))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(to_csv(reports))
    return EXIT_FAIL if summ["failed"] else EXIT_OK


COMMANDS = {"eval": _cmd_eval, "verify": _cmd_verify, "repr": _cmd_repr, "limits": _cmd_limits,
            "ncalg": _cmd_ncalg, "report": _cmd_report}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, QAddFormError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser", "SuiteConfig", "run_suite", "eval_family", "number"]
