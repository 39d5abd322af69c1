"""Verification of the two-parameter addition formula and its product formula.

Notation: ``s = q^tau`` and ``t = q^sigma`` are the two parameters of
p_l^(0,0)(x; s, t | q) and l_m^(p)(x; s, t | q).  The addition formula expands
p_l^(0,0) * l_m^(p) in the q-Laguerre basis as

    sum_{n=0}^{l} D^{n,l} P_{l-n}^(n,n)(-q^m; s^2, 1; q) P_{l-n}^(n,n)(-q^(m+p); t^2, 1; q) l_{m+n}
  + sum_{n=1}^{l} D^{n,l} (q^m, q^(m+p), -q^(m+p)/t^2, -q^m/s^2; q^-1)_n
                  * P_{l-n}^(n,n)(-q^(m-n); s^2, 1; q) P_{l-n}^(n,n)(-q^(m+p-n); t^2, 1; q) l_{m-n}

with D^{n,l} = (-t^2 q^-l, -s^2 q^-l; q)_{l-n} [l choose n]_q (q^(n+1); q)_l q^((l-n)^2/2) (st)^-(l-n).

Exact checks run in Q(sqrt(q)) for rational q, s, t, so the certificate is
a literal equality of basis coefficients.
"""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .coeffring import QuadraticSurd, SqrtField, as_fraction
from .errors import PoleError
from .polyfam import (QLaguerreBasis, qlaguerre_values, _gaussian_binomial_row, big_qjacobi, big_qjacobi_value, pjacobi,
                      qlag_norm, qlag_recurrence, qlaguerre)
from .qseries import qpoch, qpoch_multi
from .report import VerificationReport
from .unipoly import UniPoly


@dataclass(frozen=True)
class Thm41Params:
    """One instance of the addition formula; ``s = q^tau``, ``t = q^sigma``."""

    l: int
    m: int
    p: int
    q: object = Fraction(1, 2)
    s: object = Fraction(1)
    t: object = Fraction(1)

    def as_dict(self) -> dict:
        return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in asdict(self).items()}

    @property
    def exact(self) -> bool:
        return not any(isinstance(x, float) for x in (self.q, self.s, self.t))


def dconst(n: int, l: int, s, t, q, sqrt_q=None):
    """D^{n,l}; works in any ring containing q^(1/2), s^-1 and t^-1."""
    if not 0 <= n <= l:
        raise ValueError("need 0 <= n <= l")
    v = sqrt_q if sqrt_q is not None else (q ** 0.5 if isinstance(q, float) else None)
    if v is None:
        from .polyfam import sqrt_base
        v = sqrt_base(q)
    qinv_l = q ** (-l)
    out = qpoch_multi([-t * t * qinv_l, -s * s * qinv_l], q, l - n)
    out = out * _gaussian_binomial_row(l, q)[n] * qpoch(q ** (n + 1), q, l)
    out = out * v ** ((l - n) ** 2) * (s * t) ** (-(l - n))
    return out


def _sides(P: Thm41Params, q, s, t, v, second_base=None):
    """Coefficient lists (in the l_k basis) of both sides, for any scalar type."""
    l, m, p = P.l, P.m, P.p
    basis = QLaguerreBasis(p, s, t, q, v)
    lhs = pjacobi(l, 0, 0, s, t, q, sqrt_q=v) * basis.poly(m)
    e = basis.to_basis(lhs)
    size = max(len(e), m + l + 1)
    e = list(e) + [0 * q] * (size - len(e))
    rhs = [0 * q for _ in range(size)]
    s2, t2 = s * s, t * t
    qm, qmp = q ** m, q ** (m + p)
    for n in range(l + 1):
        D = dconst(n, l, s, t, q, v)
        rhs[m + n] = rhs[m + n] + D * big_qjacobi_value(l - n, n, n, -qm, s2, 1, q) \
            * big_qjacobi_value(l - n, n, n, -qmp, t2, 1, q)
    base2 = second_base if second_base is not None else q
    for n in range(1, min(l, m) + 1):
        D = dconst(n, l, s, t, q, v)
        poch = qpoch_multi([qm, qmp, -qmp / t2, -qm / s2], 1 / q, n)
        rhs[m - n] = rhs[m - n] + D * poch * big_qjacobi_value(l - n, n, n, -q ** (m - n), s2, 1, q) \
            * big_qjacobi_value(l - n, n, n, -q ** (m + p - n), t2, 1, base2)
    return e, rhs, basis


def _exact_scalars(P: Thm41Params):
    K = SqrtField(as_fraction(P.q))
    return K, K.q, K(as_fraction(P.s)), K(as_fraction(P.t)), K.v


def thm41_exact(P: Thm41Params, printed_variant: bool = True) -> VerificationReport:
    """Exact comparison of the two sides in the q-Laguerre basis.

    With ``printed_variant`` the residual obtained when the last big q-Jacobi
    factor of the second sum uses base q^2 is recorded in the notes.
    """
    try:
        K, q, s, t, v = _exact_scalars(P)
        e, rhs, _ = _sides(P, q, s, t, v)
    except PoleError as exc:
        return VerificationReport("thm41.exact", P.as_dict(), "exact", "pole", True, f"degenerate parameters: {exc}")
    diffs = [a - b for a, b in zip(e, rhs)]
    nonzero = [k for k, d in enumerate(diffs) if d != 0]
    resid = max((abs(float(d)) for d in diffs), default=0.0)
    notes = "coefficients in the q-Laguerre basis agree exactly" if not nonzero else f"mismatch at k={nonzero}"
    if printed_variant and P.l >= 1 and P.m >= 1:
        _, rhs2, _ = _sides(P, q, s, t, v, second_base=q * q)
        alt = max((abs(float(a - b)) for a, b in zip(e, rhs2)), default=0.0)
        notes += f"; base-q^2 variant residual {alt:.3e}"
    return VerificationReport("thm41.exact", P.as_dict(), "exact", 0 if not nonzero else resid, not nonzero, notes)


def _float_params(P: Thm41Params):
    q, s, t = float(P.q), float(P.s), float(P.t)
    return q, s, t, math.sqrt(q)


def thm41_pointwise(P: Thm41Params, xs: Sequence[float] = (-1.0, -0.5, 0.0, 0.5, 1.0),
                    tol: float = 1e-9) -> VerificationReport:
    """Evaluate both sides as functions of x and compare relatively."""
    q, s, t, v = _float_params(P)
    e, rhs, basis = _sides(P, q, s, t, v)
    lhs_poly = basis.synthesize(e)
    rhs_poly = basis.synthesize(rhs)
    worst = 0.0
    for x in xs:
        a, b = lhs_poly(x), rhs_poly(x)
        worst = max(worst, abs(a - b) / (1 + abs(a)))
    params = P.as_dict() | {"x": list(xs), "tol": tol}
    return VerificationReport("thm41.pointwise", params, "float", worst, worst <= tol, "")


# ---------------------------------------------------------------- quadrature
def jacobi_matrix(num_nodes: int, alpha, s: float, t: float, q: float):
    """Diagonal and off-diagonal of the orthonormal Jacobi matrix of l_n^(alpha)(x; s, t | q)."""
    v = math.sqrt(q)
    diag = np.empty(num_nodes)
    off = np.empty(max(num_nodes - 1, 0))
    for k in range(num_nodes):
        rec = qlag_recurrence(k, alpha, s, t, q, v)
        diag[k] = rec.b / 2
        if k + 1 < num_nodes:
            c = qlag_recurrence(k + 1, alpha, s, t, q, v).c
            off[k] = math.sqrt(c) / 2
    return diag, off


def golub_welsch(num_nodes: int, alpha, s: float, t: float, q: float):
    """Nodes and weights of the Gaussian rule for the normalised q-Laguerre measure."""
    if num_nodes < 1:
        raise ValueError("num_nodes must be positive")
    diag, off = jacobi_matrix(num_nodes, alpha, float(s), float(t), float(q))
    if num_nodes == 1:
        return diag.copy(), np.ones(1)
    nodes, vecs = eigh_tridiagonal(diag, off)
    return nodes, vecs[0, :] ** 2


def integrate(poly_values, weights) -> float:
    return float(np.dot(poly_values, weights))


def _small_rational(x: float, max_den: int = 10**6):
    f = Fraction(x).limit_denominator(max_den)
    return f if float(f) == x else None


def _cor51_constants(l, m, n, p, s, t, q, variant):
    """(target, C, linearisation coefficient times h_other) in one scalar type.

    Exact in Q(sqrt(q)) when q, s, t are short rationals (the target is a
    product of terminating series that cancel heavily in floating point).
    """
    exact = [_small_rational(x) for x in (q, s, t)]
    if all(e is not None for e in exact):
        K = SqrtField(exact[0])
        q_, s_, t_, v_ = K.q, K(exact[1]), K(exact[2]), K.v
    else:
        q_, s_, t_, v_ = q, s, t, math.sqrt(q)
    one = q_ ** 0
    target = big_qjacobi_value(l - n, n, n, -q_ ** m, s_ * s_, one, q_) \
        * big_qjacobi_value(l - n, n, n, -q_ ** (m + p), t_ * t_, one, q_)
    mult, other = (m, m + n) if variant == "plus" else (m + n, m)
    C = dconst(n, l, s_, t_, q_, v_)
    if variant == "plus":
        C = C * qlag_norm(m + n, p, s_, t_, q_)
    else:
        mm = m + n
        C = C * qpoch_multi([q_ ** mm, q_ ** (mm + p), -q_ ** (mm + p) / (t_ * t_), -q_ ** mm / (s_ * s_)],
                            one / q_, n) * qlag_norm(m, p, s_, t_, q_)
    basis = QLaguerreBasis(p, s_, t_, q_, v_)
    coeffs = basis.to_basis(pjacobi(l, 0, 0, s_, t_, q_, sqrt_q=v_) * basis.poly(mult))
    lin = coeffs[other] * qlag_norm(other, p, s_, t_, q_) if other < len(coeffs) else 0 * one
    return float(target), float(C), float(lin)


def cor51_check(l: int, m: int, n: int, p: int, s: float = 1.0, t: float = 1.0, q: float = 0.5,
                tol: float = 1e-9, variant: str = "plus") -> VerificationReport:
    """Product formula: quadrature and exact-linearisation values against the product of two big q-Jacobi values.

    ``variant='plus'`` integrates against l_{m+n}; ``'minus'`` integrates
    p_l l_{m+n} l_m, i.e. the l_{m'-n} term for m' = m + n.
    """
    if not 0 <= n <= l:
        raise ValueError("need 0 <= n <= l")
    if variant not in ("plus", "minus"):
        raise ValueError("variant must be 'plus' or 'minus'")
    s, t, q = float(s), float(t), float(q)
    v = math.sqrt(q)
    target, C, lin = _cor51_constants(l, m, n, p, s, t, q, variant)
    mult, other = (m, m + n) if variant == "plus" else (m + n, m)
    K = (l + mult + other) // 2 + 3
    nodes, weights = golub_welsch(K, p, s, t, q)
    pl = pjacobi(l, 0, 0, s, t, q, sqrt_q=v)
    lag = qlaguerre_values(max(mult, other), p, s, t, q, nodes)
    vals = np.array([pl(x) for x in nodes]) * lag[mult] * lag[other]
    quad = integrate(vals, weights) / C
    lin = lin / C
    # quadrature error is judged against the integral of |integrand| (its
    # conditioning); the exact linearisation value against the target itself
    scale = max(abs(target), integrate(np.abs(vals), weights) / abs(C))
    res = max(abs(quad - target) / scale,
              abs(lin - target) / abs(target) if target != 0 else abs(lin))
    params = {"l": l, "m": m, "n": n, "p": p, "s": s, "t": t, "q": q, "tol": tol, "variant": variant}
    return VerificationReport("cor51", params, "float", res, res <= tol,
                              f"target {target:.12g}; quadrature {quad:.12g} ({K} nodes); linearisation {lin:.12g}")


# ---------------------------------------------------------------- symmetries
def reflect(poly: UniPoly) -> UniPoly:
    """x -> -x."""
    return UniPoly([c if k % 2 == 0 else -c for k, c in enumerate(poly.coeffs)])


def reflection_residual(n: int, alpha: int, beta: int, c, d, q) -> list:
    """Coefficients of P^(a,b)_n(-x; c, d) - factor * P^(b,a)_n(x; d, c) (all zero when the relation holds)."""
    qa, qb = q ** alpha, q ** beta
    factor = (-(qa / qb) * d / c) ** n * qpoch_multi([qb * q, -qb * q * c / d], q, n) \
        / qpoch_multi([qa * q, -qa * q * d / c], q, n)
    lhs = reflect(big_qjacobi(n, alpha, beta, c, d, q))
    rhs = big_qjacobi(n, beta, alpha, d, c, q) * factor
    return (lhs - rhs).coeffs


def switch_points_residual(n: int, l: int, m: int, s, q):
    """P^(n,n)_{l-n}(-q^m; s^2, 1; q) minus its reflected form at q^m/s^2 with parameter s^-2."""
    k = l - n
    s2 = s * s
    lhs = big_qjacobi_value(k, n, n, -q ** m, s2, 1, q)
    factor = (-1 / s2) ** k * qpoch(-q ** (n + 1) * s2, q, k) / qpoch(-q ** (n + 1) / s2, q, k)
    rhs = factor * big_qjacobi_value(k, n, n, q ** m / s2, 1 / s2, 1, q)
    return lhs - rhs


def parity_residual(n: int, s, t, q, sqrt_q, alpha=0, beta=0, laguerre: bool = False) -> list:
    """p_n(-x; s, t) - (-1)^n p_n(x; -s, t), for the q-Jacobi or q-Laguerre family."""
    if laguerre:
        lhs = reflect(qlaguerre(n, alpha, s, t, q, sqrt_q))
        rhs = qlaguerre(n, alpha, -s, t, q, sqrt_q) * ((-1) ** n)
    else:
        lhs = reflect(pjacobi(n, alpha, beta, s, t, q, sqrt_q))
        rhs = pjacobi(n, alpha, beta, -s, t, q, sqrt_q) * ((-1) ** n)
    return (lhs - rhs).coeffs


def symmetry_check(n: int, l: int, m: int, s=Fraction(2), t=Fraction(3, 2), q=Fraction(1, 2)) -> VerificationReport:
    """Reflection of big q-Jacobi, the point switch for P^(n,n)_{l-n} and the parity transfer, all exact."""
    K = SqrtField(as_fraction(q))
    qq, ss, tt = K.q, K(as_fraction(s)), K(as_fraction(t))
    bad = []
    if any(c != 0 for c in reflection_residual(l - n, n, n, ss * ss, K.one, qq)):
        bad.append("reflection")
    if switch_points_residual(n, l, m, ss, qq) != 0:
        bad.append("switch")
    if any(c != 0 for c in parity_residual(l, ss, tt, qq, K.v)):
        bad.append("parity-jacobi")
    if any(c != 0 for c in parity_residual(m, ss, tt, qq, K.v, alpha=n, laguerre=True)):
        bad.append("parity-laguerre")
    params = {"n": n, "l": l, "m": m, "s": str(s), "t": str(t), "q": str(q)}
    return VerificationReport("thm41.symmetry", params, "exact", len(bad), not bad,
                              "all exact" if not bad else "failed: " + ", ".join(bad))


# ---------------------------------------------------------------- grids
GRID_Q = (Fraction(1, 2), Fraction(2, 3), Fraction(9, 10))
GRID_S = (Fraction(1), Fraction(2), Fraction(1, 3))
GRID_T = (Fraction(1), Fraction(3, 2))


def default_grid(l_max: int = 4, m_max: int = 3, p_max: int = 3) -> list[Thm41Params]:
    return [Thm41Params(l, m, p, q, s, t)
            for q in GRID_Q for s in GRID_S for t in GRID_T
            for l in range(l_max + 1) for m in range(m_max + 1) for p in range(p_max + 1)]


def read_grid(path) -> list[Thm41Params]:
    """CSV with header l,m,p,q,s,t; rationals as p/q strings."""
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(Thm41Params(int(row["l"]), int(row["m"]), int(row["p"]),
                                   Fraction(row["q"]), Fraction(row["s"]), Fraction(row["t"])))
    return out


def write_grid(path, grid: Iterable[Thm41Params]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["l", "m", "p", "q", "s", "t"])
        for P in grid:
            w.writerow([P.l, P.m, P.p, str(P.q), str(P.s), str(P.t)])


def packaged_grid() -> list[Thm41Params]:
    ref = resources.files("qaddform").joinpath("data/default_grid.csv")
    with resources.as_file(ref) as path:
        return read_grid(path)


def _run_exact(P: Thm41Params) -> VerificationReport:
    return thm41_exact(P, printed_variant=False)


def run_thm41_grid(grid: Sequence[Thm41Params], workers: int | None = None) -> list[VerificationReport]:
    """Exact checks over a grid, fanned out over processes; results in grid order."""
    workers = workers if workers is not None else min(8, os.cpu_count() or 1)
    if workers <= 1 or len(grid) < 8:
        return [_run_exact(P) for P in grid]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_exact, grid, chunksize=max(1, len(grid) // (4 * workers))))


__all__ = [
    "Thm41Params", "dconst", "thm41_exact", "thm41_pointwise", "jacobi_matrix", "golub_welsch", "cor51_check",
    "reflection_residual", "switch_points_residual", "parity_residual", "symmetry_check", "default_grid",
    "read_grid", "write_grid", "packaged_grid", "run_thm41_grid", "QuadraticSurd",
]
