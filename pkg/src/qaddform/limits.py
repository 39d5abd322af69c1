"""Classical Legendre endpoint and the q -> 1 transition of the addition formula.

Classical side, with W = sqrt((1 - x^2)(1 - y^2)):

    R_l(xy + tW) = R_l(x) R_l(y)
                   + 2 sum_{n>=1} (l+n)! / ((l-n)! n!^2) 4^-n W^n R^(n,n)_{l-n}(x) R^(n,n)_{l-n}(y) T_n(t)

and its Chebyshev-orthogonality dual (the product formula).

The scan puts q = c^(1/m), p = m r and lets m grow; the base-q
parameters s = q^tau, t = q^sigma are held at tau = sigma = 0 by default,
and the classical parameter is c^r.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .polyfam import (big_qjacobi_value, chebyshev_T, chebyshev_value, classical_jacobi_R, pjacobi,
                      qlaguerre_values)
from .qseries import qpoch, qpoch_multi
from .report import VerificationReport
from .verify import dconst


def _addition_weight(l: int, n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    return Fraction(2 * math.factorial(l + n), math.factorial(l - n) * math.factorial(n) ** 2 * 4 ** n)


def classical_addition_sides(l: int, x: float, y: float, t: float) -> tuple[float, float]:
    w = math.sqrt((1 - x * x) * (1 - y * y))
    lhs = classical_jacobi_R(l, 0.0, 0.0)(x * y + t * w)
    rhs = 0.0
    for n in range(l + 1):
        R = classical_jacobi_R(l - n, float(n), float(n))
        rhs += float(_addition_weight(l, n)) * w ** n * R(x) * R(y) * chebyshev_value(n, t)
    return lhs, rhs


def classical_addition_check(l: int, x: float, y: float, t: float, tol: float = 1e-12) -> VerificationReport:
    """Both sides of the Legendre addition formula at one point."""
    for name, val in (("x", x), ("y", y), ("t", t)):
        if not -1 <= val <= 1:
            raise ValueError(f"{name} must lie in [-1, 1]")
    lhs, rhs = classical_addition_sides(l, x, y, t)
    res = abs(lhs - rhs)
    return VerificationReport("classical.addition", {"l": l, "x": x, "y": y, "t": t, "tol": tol},
                              "float", res, res <= tol, f"lhs {lhs:.15g}")


def _to_sympy(poly, var):
    return sum((sympy.Rational(c) * var ** k for k, c in enumerate(poly.coeffs)), sympy.Integer(0))


def classical_addition_symbolic(l: int) -> VerificationReport:
    """Exact version: both sides as polynomials in x, y, t, W reduced modulo W^2 = (1-x^2)(1-y^2)."""
    x, y, t, W = sympy.symbols("x y t W")
    lhs = _to_sympy(classical_jacobi_R(l), x * y + t * W)
    rhs = sympy.Integer(0)
    for n in range(l + 1):
        R = classical_jacobi_R(l - n, n, n)
        rhs += sympy.Rational(_addition_weight(l, n)) * W ** n * _to_sympy(R, x) * _to_sympy(R, y) \
            * _to_sympy(chebyshev_T(n), t)
    diff = sympy.rem(sympy.expand(lhs - rhs), W ** 2 - (1 - x ** 2) * (1 - y ** 2), W)
    diff = sympy.expand(diff)
    n_terms = len(sympy.Add.make_args(diff)) if diff != 0 else 0
    return VerificationReport("classical.addition.symbolic", {"l": l}, "exact", n_terms, diff == 0,
                              "" if diff == 0 else f"residual: {diff}")


def classical_product_check(l: int, n: int, x: float, y: float, num_nodes: int | None = None,
                            tol: float = 1e-10) -> VerificationReport:
    """Gauss-Chebyshev evaluation of the product-formula integral, compared relatively."""
    if not 0 <= n <= l:
        raise ValueError("need 0 <= n <= l")
    K = num_nodes if num_nodes is not None else l + 2
    params = {"l": l, "n": n, "x": x, "y": y, "num_nodes": K, "tol": tol}
    w2 = (1 - x * x) * (1 - y * y)
    if n >= 1 and w2 == 0:
        return VerificationReport("classical.product", params, "skipped", 0, True,
                                  "degenerate endpoint: the W^-n prefactor is singular")
    if not (abs(x) <= 1 and abs(y) <= 1):
        raise ValueError("x and y must lie in [-1, 1]")
    w = math.sqrt(w2)
    nodes = np.cos((2 * np.arange(1, K + 1) - 1) * np.pi / (2 * K))
    # Taylor expansion of R_l about xy in powers of tW.  Terms of degree < n are
    # orthogonal to T_n, so they are dropped before integrating; keeping them
    # would cost ~W^-n in cancellation near the endpoints.
    Rl = np.polynomial.Polynomial([float(c) for c in classical_jacobi_R(l).coeffs])
    taylor = [Rl.deriv(k)(x * y) / math.factorial(k) for k in range(l + 1)]
    kept = np.polynomial.Polynomial([0.0] * n + [taylor[k] * w ** (k - n) for k in range(n, l + 1)])
    vals = kept(nodes) * np.array([chebyshev_value(n, tk) for tk in nodes])
    integral = math.pi / K * float(vals.sum())
    pref = 4 ** n * math.factorial(l - n) * math.factorial(n) ** 2 / (math.pi * math.factorial(l + n))
    rhs = pref * integral
    R = classical_jacobi_R(l - n, float(n), float(n))
    lhs = R(x) * R(y)
    # relative to |lhs|, or to the size of the integral of |integrand| near a zero of lhs
    scale = max(abs(lhs), pref * math.pi / K * float(np.abs(vals).sum()))
    res = abs(lhs - rhs) / scale if scale > 0 else abs(rhs)
    return VerificationReport("classical.product", params, "float", res, res <= tol,
                              f"lhs {lhs:.15g}; quadrature {rhs:.15g}")


def classical_suite(seed: int = 0, points: int = 20, l_max: int = 6) -> list[VerificationReport]:
    """Both classical formulas on a seeded random grid, plus the exact check for l <= l_max."""
    rng = np.random.default_rng(seed)
    out = [classical_addition_symbolic(l) for l in range(l_max + 1)]
    for _ in range(points):
        l = int(rng.integers(0, l_max + 1))
        x, y, t = (float(v) for v in rng.uniform(-1, 1, 3))
        out.append(classical_addition_check(l, x, y, t))
        for n in range(l + 1):
            out.append(classical_product_check(l, n, x, y))
    return out


# ------------------------------------------------------------------- q -> 1
@dataclass(frozen=True)
class LimitScanConfig:
    l: int = 2
    c: Fraction = Fraction(1, 2)
    r: int = 1
    m_list: tuple = (8, 16, 32)
    x_samples: tuple = (1.25, -1.0)
    ratio_k: tuple = (-1, 1, 2)
    tau0: float = 0.0
    sigma0: float = 0.0
    pjacobi_x: float = 0.3

    def __post_init__(self):
        c = Fraction(self.c)
        if not 0 < c < 1:
            raise ValueError("c must lie in (0, 1)")
        if self.r < 0:
            raise ValueError("r must be a nonnegative integer")
        if list(self.m_list) != sorted(set(self.m_list)) or min(self.m_list) < 1:
            raise ValueError("m_list must be strictly increasing positive integers")
        if self.l < 0:
            raise ValueError("l must be nonnegative")


@dataclass
class LimitPoint:
    """Deviations from the classical limit at one m."""

    m: int
    q: float
    addition: float
    dconst: float
    bigq: float
    ratio: float
    pjacobi: float

    def as_dict(self) -> dict:
        return {"m": self.m, "q": self.q, "addition": self.addition, "dconst": self.dconst,
                "bigq": self.bigq, "ratio": self.ratio, "pjacobi": self.pjacobi}


TRACKED = ("addition", "dconst", "bigq", "ratio", "pjacobi")


def dconst_limit(n: int, l: int) -> float:
    """4^(l-n) (l-n+1)_n (n+1)_l / (n! l!)."""
    return 4 ** (l - n) * math.comb(l, n) * math.prod(range(n + 1, n + l + 1)) / math.factorial(l)


def _ratio_limit(x: float, k: int, c: float, tc: float) -> float:
    A = math.sqrt((1 - c * c) * (1 - tc * tc * c * c))
    z = (x - c * c * tc) / A
    rho = z + math.copysign(math.sqrt(z * z - 1), z)
    return A ** k * rho ** k


def limit_point(cfg: LimitScanConfig, m: int) -> LimitPoint:
    c = float(cfg.c)
    q = c ** (1.0 / m)
    p = m * cfg.r
    tc = c ** cfg.r
    s, t = c ** (cfg.tau0 / m), c ** (cfg.sigma0 / m)
    l = cfg.l
    ql = qpoch(q, q, l)
    xs = np.asarray(cfg.x_samples, dtype=float)
    kmax = max(max(cfg.ratio_k, default=0), l)
    lag = qlaguerre_values(m + kmax, p, s, t, q, xs)

    def ratio(k):
        return lag[m + k] / lag[m]

    # (ii) constants and big q-Jacobi values
    dc = max(abs(dconst(n, l, s, t, q) / ql - dconst_limit(n, l)) for n in range(l + 1))
    bigq = 0.0
    for n in range(l + 1):
        R = classical_jacobi_R(l - n, float(n), float(n))
        for arg, par, target in ((-q ** (m + p - n), t * t, -c * tc), (-q ** (m - n), s * s, -c)):
            bigq = max(bigq, abs(big_qjacobi_value(l - n, n, n, arg, par, 1.0, q) - R(target)))
    # (iii) q-Laguerre ratios outside the limiting support
    rat = 0.0
    for k in cfg.ratio_k:
        if m + k < 0:
            continue
        lim = np.array([_ratio_limit(x, k, c, tc) for x in xs])
        rat = max(rat, float(np.max(np.abs(ratio(k) - lim))))
    # (i) both sides divided by l_m (q;q)_l: q-side term sum vs the classical sum at
    # X = -c, Y = -c tc and Chebyshev variable (x - c^2 tc) / A
    add = 0.0
    R0 = classical_jacobi_R(l, 0.0, 0.0)
    for j, x in enumerate(xs):
        qside = 0.0
        for n in range(l + 1):
            d = dconst(n, l, s, t, q) / ql
            plus = big_qjacobi_value(l - n, n, n, -q ** m, s * s, 1.0, q) \
                * big_qjacobi_value(l - n, n, n, -q ** (m + p), t * t, 1.0, q)
            qside += d * plus * ratio(n)[j]
            if n >= 1:
                pre = qpoch_multi([q ** m, q ** (m + p), -q ** (m + p) / (t * t), -q ** m / (s * s)], 1 / q, n)
                minus = big_qjacobi_value(l - n, n, n, -q ** (m - n), s * s, 1.0, q) \
                    * big_qjacobi_value(l - n, n, n, -q ** (m + p - n), t * t, 1.0, q)
                qside += d * pre * minus * ratio(-n)[j]
        classical = 4 ** l * R0(x)
        add = max(add, float(abs(qside - classical)))
    pj = abs(pjacobi(l, 0, 0, s, t, q)(cfg.pjacobi_x) / ql - 4 ** l * R0(cfg.pjacobi_x))
    return LimitPoint(m, q, add, dc, bigq, rat, pj)


def _strictly_decreasing(vals) -> bool:
    return all(b < a for a, b in zip(vals, vals[1:]))


def qlim_scan(cfg: LimitScanConfig, workers: int = 1) -> VerificationReport:
    """Run the scan over ``cfg.m_list``; passes iff every tracked deviation strictly decreases."""
    for x in cfg.x_samples:
        c, tc = float(cfg.c), float(cfg.c) ** cfg.r
        B, A2 = c * c * tc, math.sqrt((1 - c * c) * (1 - c * c * tc * tc))
        if B - A2 <= x <= B + A2:
            raise ValueError(f"x = {x} lies inside [{B - A2:.6g}, {B + A2:.6g}]; the ratio limit needs |rho| > 1")
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            points = list(ex.map(limit_point, [cfg] * len(cfg.m_list), cfg.m_list))
    else:
        points = [limit_point(cfg, m) for m in cfg.m_list]
    monotone = {k: _strictly_decreasing([getattr(pt, k) for pt in points]) for k in TRACKED}
    worst = points[-1].addition if points else 0.0
    params = {"l": cfg.l, "c": str(Fraction(cfg.c)), "r": cfg.r, "m_list": list(cfg.m_list),
              "x_samples": list(cfg.x_samples), "tau0": cfg.tau0, "sigma0": cfg.sigma0,
              "points": [pt.as_dict() for pt in points], "monotone": monotone}
    failing = [k for k, ok in monotone.items() if not ok]
    notes = "all deviations strictly decrease" if not failing else "not decreasing: " + ", ".join(failing)
    return VerificationReport("limits.qscan", params, "float", worst, not failing, notes)


def scan_csv(report: VerificationReport) -> str:
    """Per-m deviations as CSV, for plotting elsewhere."""
    rows = ["m,q," + ",".join(TRACKED)]
    for pt in report.params["points"]:
        rows.append(",".join([str(pt["m"]), repr(pt["q"])] + [repr(pt[k]) for k in TRACKED]))
    return "\n".join(rows) + "\n"


__all__ = ["classical_addition_check", "classical_addition_sides", "classical_addition_symbolic",
           "classical_product_check", "classical_suite", "LimitScanConfig", "LimitPoint", "limit_point", "qlim_scan",
           "dconst_limit", "scan_csv", "TRACKED"]
