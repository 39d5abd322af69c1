"""Orthogonal polynomial families as explicit :class:`UniPoly` values.

Conventions: ``q`` is the base, ``sqrt_q`` its square root in the same scalar
type (derived automatically where that can be done exactly).  The families are

* Askey-Wilson ``p_n(x; a, b, c, d | q)`` with x = cos(theta),
* the q-Jacobi specialisation ``p_n^(alpha,beta)(x; s, t | q)``,
* the q-Laguerre case ``l_n^(alpha)(x; s, t | q)`` (fourth parameter zero),
* big q-Jacobi ``P_n^(alpha,beta)(x; c, d; q)``,
* classical Chebyshev ``T_n`` and Jacobi ``R_n^(alpha,beta)`` with R(1) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .coeffring import LaurentCoeff, QuadraticSurd, SqrtField, as_fraction
from .errors import DomainError, PoleError, UnsupportedModeError
from .qseries import phi, qpoch, qpoch_multi
from .unipoly import UniPoly


def sqrt_base(q):
    """An exact (or float) square root of the base q."""
    if isinstance(q, (float, complex)):
        return q ** 0.5
    if isinstance(q, QuadraticSurd):
        if q.b == 0:
            if q.a == q.q:
                return SqrtField(q.q).v
            field = SqrtField(q.a)
            if field.v.b == 0:
                return QuadraticSurd(field.v.a, 0, q.q)
        raise UnsupportedModeError(f"no exact square root of {q} in Q(sqrt({q.q}))")
    if isinstance(q, (int, Fraction)):
        field = SqrtField(q)
        if field.v.b == 0:
            return field.v.a
        raise UnsupportedModeError(f"sqrt({q}) is irrational; work in SqrtField({q})")
    if isinstance(q, LaurentCoeff) and q.is_monomial():
        ((ev, es, et), c), = q.terms.items()
        if c == 1 and ev % 2 == 0 and es % 2 == 0 and et % 2 == 0:
            return LaurentCoeff.monomial(ev // 2, es // 2, et // 2)
    raise UnsupportedModeError(f"cannot take an exact square root of {q!r}")


def qpower(q, alpha):
    """q**alpha for integer alpha in any scalar type, or real alpha for floats."""
    if isinstance(alpha, int) or (isinstance(alpha, Fraction) and alpha.denominator == 1):
        return q ** int(alpha)
    if isinstance(alpha, Fraction) and alpha.denominator == 2 and not isinstance(q, (float, complex)):
        return sqrt_base(q) ** int(2 * alpha)
    return float(q) ** float(alpha)


def _gaussian_binomial_row(n: int, q) -> list:
    """[n choose k]_q for k = 0..n by the Pascal rule (division free)."""
    row = [q ** 0]
    for m in range(1, n + 1):
        new = [row[0]]
        pw = q
        for k in range(1, m):
            new.append(row[k - 1] + pw * row[k])
            pw = pw * q
        new.append(row[0])
        row = new
    return row


def askey_wilson(n: int, a, b, c, d, q) -> UniPoly:
    """Askey-Wilson polynomial in x = cos(theta).

    Uses the expansion of the 4phi3 with the normalising factor pulled inside,
    which makes every term a polynomial in the parameters: the only division
    is by a^n.  The pair (a e^{i theta}, a e^{-i theta}; q)_k is expanded with
    the real factors 1 - 2 a q^j x + a^2 q^{2j}.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n == 0:
        return UniPoly([q ** 0])
    if a == 0:
        raise DomainError("askey_wilson needs a != 0 for the a^(-n) prefactor")
    binom = _gaussian_binomial_row(n, q)
    abcd = a * b * c * d
    total = UniPoly()
    pair = UniPoly([q ** 0])
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        coef = sign * q ** (k * (k - 1) // 2 - n * k + k) * binom[k]
        coef = coef * qpoch(abcd * q ** (n - 1), q, k)
        qk = q ** k
        coef = coef * qpoch_multi([a * b * qk, a * c * qk, a * d * qk], q, n - k)
        total = total + pair * coef
        pair = pair * UniPoly([1 + a * a * q ** (2 * k), -2 * a * q ** k])
    return total * (a ** (-n))


def pjacobi(n: int, alpha, beta, s, t, q, sqrt_q=None) -> UniPoly:
    """q-Jacobi polynomial p_n^(alpha,beta)(x; s, t | q)."""
    h = sqrt_base(q) if sqrt_q is None else sqrt_q
    a = h * qpower(q, alpha) * s / t
    b = h * t / s
    c = -h / (s * t)
    d = -s * t * h * qpower(q, beta)
    return askey_wilson(n, a, b, c, d, q)


def qlaguerre(n: int, alpha, s, t, q, sqrt_q=None) -> UniPoly:
    """q-Laguerre polynomial l_n^(alpha)(x; s, t | q): the q-Jacobi case with d = 0."""
    h = sqrt_base(q) if sqrt_q is None else sqrt_q
    a = h * qpower(q, alpha) * s / t
    b = h * t / s
    c = -h / (s * t)
    return askey_wilson(n, a, b, c, 0 * a, q)


@dataclass(frozen=True)
class QLagRecurrence:
    """Coefficients of 2x l_n = l_{n+1} + b_n l_n + c_n l_{n-1}."""

    n: int
    b: object
    c: object


def qlag_recurrence(n: int, alpha, s, t, q, sqrt_q=None) -> QLagRecurrence:
    h = sqrt_base(q) if sqrt_q is None else sqrt_q
    qa = qpower(q, alpha)
    qn = q ** n
    c = (1 - qn) * (1 - qa * qn) * (1 + qn / (s * s)) * (1 + qn * qa / (t * t))
    b = qn * ((t - 1 / t) * h / s + (s - 1 / s) * h * qa / t + (1 + q) * h * qn * qa / (s * t))
    return QLagRecurrence(n, b, c)


def qlaguerre_values(n_max: int, alpha, s, t, q, xs) -> np.ndarray:
    """Rows l_0(xs), ..., l_{n_max}(xs) from the three-term recurrence.

    Stable in floating point, unlike evaluating the expanded coefficients,
    which cancel badly once q^(-n) gets large.
    """
    xs = np.asarray(xs, dtype=float)
    h = math.sqrt(q)
    out = np.empty((n_max + 1, xs.size))
    out[0] = 1.0
    prev = np.zeros(xs.size)
    for k in range(n_max):
        rec = qlag_recurrence(k, alpha, s, t, q, h)
        nxt = (2 * xs - rec.b) * out[k] - rec.c * prev
        prev = out[k]
        out[k + 1] = nxt
    return out


def qlag_norm(n: int, alpha, s, t, q):
    """Square norm h_n of l_n under the normalised measure: h_0 = 1, h_n = c_1 ... c_n.

    The product of recurrence coefficients equals
    (q, q^(1+alpha), -q/s^2, -q^(1+alpha)/t^2; q)_n.
    """
    qa = qpower(q, alpha)
    return qpoch_multi([q, q * qa, -q / (s * s), -q * qa / (t * t)], q, n)


def big_qjacobi(n: int, alpha, beta, c, d, q) -> UniPoly:
    """Big q-Jacobi polynomial P_n^(alpha,beta)(x; c, d; q) as a polynomial in x."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    qa1 = qpower(q, alpha) * q
    upper = [q ** (-n), q ** (n + 1) * qpower(q, alpha) * qpower(q, beta)]
    lower = [qa1, -qa1 * d / c]
    total = UniPoly([q ** 0])
    coef = q ** 0
    factor = UniPoly([q ** 0])
    pw = q ** 0
    for k in range(n):
        num = (1 - upper[0] * pw) * (1 - upper[1] * pw)
        den = (1 - q * pw) * (1 - lower[0] * pw) * (1 - lower[1] * pw)
        if den == 0:
            raise PoleError(f"big q-Jacobi denominator vanishes at k={k}")
        coef = coef * num * q / den
        factor = factor * UniPoly([q ** 0, -qa1 * pw / c])
        total = total + factor * coef
        pw = pw * q
    return total


def big_qjacobi_value(n: int, alpha, beta, x, c, d, q):
    """P_n^(alpha,beta)(x; c, d; q) by direct 3phi2 summation."""
    qa1 = qpower(q, alpha) * q
    upper = [q ** (-n), q ** (n + 1) * qpower(q, alpha) * qpower(q, beta), qa1 * x / c]
    lower = [qa1, -qa1 * d / c]
    return phi(upper, lower, q, q)


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> UniPoly:
    """Chebyshev polynomial of the first kind, T_n(cos theta) = cos(n theta)."""
    if n == 0:
        return UniPoly([1])
    if n == 1:
        return UniPoly([0, 1])
    return chebyshev_T(n - 1).mul_x() * 2 - chebyshev_T(n - 2)


def classical_jacobi_R(n: int, alpha=0, beta=0) -> UniPoly:
    """Jacobi polynomial normalised by R_n(1) = 1.

    R_n(x) = 2F1(-n, n + alpha + beta + 1; alpha + 1; (1 - x)/2); exact when
    alpha and beta are rational.
    """
    exact = not isinstance(alpha, float) and not isinstance(beta, float)
    if exact:
        alpha, beta = as_fraction(alpha), as_fraction(beta)
        half = Fraction(1, 2)
    else:
        alpha, beta, half = float(alpha), float(beta), 0.5
    y = UniPoly([half, -half])  # (1 - x)/2
    total = UniPoly([1])
    coef = Fraction(1) if exact else 1.0
    power = UniPoly([1])
    for k in range(n):
        coef = coef * (-n + k) * (n + alpha + beta + 1 + k) / ((alpha + 1 + k) * (k + 1))
        power = power * y
        total = total + power * coef
    return total


class QLaguerreBasis:
    """Cached q-Laguerre polynomials l_0, l_1, ... for fixed (alpha, s, t, q).

    Realises the unitary map onto the orthogonal polynomial basis: any
    polynomial is expanded by eliminating leading coefficients.
    """

    def __init__(self, alpha, s, t, q, sqrt_q=None):
        self.alpha, self.s, self.t, self.q = alpha, s, t, q
        self.sqrt_q = sqrt_base(q) if sqrt_q is None else sqrt_q
        self._polys: list[UniPoly] = []

    def poly(self, k: int) -> UniPoly:
        while len(self._polys) <= k:
            m = len(self._polys)
            self._polys.append(qlaguerre(m, self.alpha, self.s, self.t, self.q, self.sqrt_q))
        return self._polys[k]

    def to_basis(self, poly: UniPoly) -> list:
        rest = poly
        coeffs = [0] * (poly.degree + 1)
        for k in range(poly.degree, -1, -1):
            lk = self.poly(k)
            e = rest[k] / lk.leading()
            coeffs[k] = e
            if e != 0:
                rest = rest - lk * e
        return coeffs

    def synthesize(self, coeffs) -> UniPoly:
        total = UniPoly()
        for k, e in enumerate(coeffs):
            if e != 0:
                total = total + self.poly(k) * e
        return total


def to_qlaguerre_basis(poly: UniPoly, alpha, s, t, q, sqrt_q=None) -> list:
    """Coefficients e_k with poly = sum e_k l_k^(alpha)(x; s, t | q)."""
    return QLaguerreBasis(alpha, s, t, q, sqrt_q).to_basis(poly)


def chebyshev_value(n: int, x: float) -> float:
    if abs(x) <= 1:
        return math.cos(n * math.acos(x))
    return chebyshev_T(n)(x)
