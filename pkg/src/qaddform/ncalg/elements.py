"""Named elements of A_q(SU(2)): rho_{tau,sigma}, the 2x2 minors and b^l.

Parameters are passed as the values q^tau and q^sigma in the algebra's
coefficient ring (``qt``, ``qs``); ``None`` (or :data:`INF`) stands for an
infinite parameter.  Shifting sigma by k is multiplication of ``qs`` by q^k.

Infinite parameters follow the limit convention: the minors drop every term
carrying a positive power of the vanishing q^tau or q^sigma, while the
rescaled limits of rho are written out explicitly.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import UnsupportedIndexError, UnsupportedModeError
from ..polyfam import big_qjacobi, pjacobi
from ..qseries import qpoch, qpoch_multi
from ..unipoly import UniPoly
from .algebra import Aq, NCElement

INF = None


def rho(A: Aq, qt, qs) -> NCElement:
    """rho_{tau,sigma}, or one of its limits when qt or qs is INF."""
    a, b, g, d = A.alpha, A.beta, A.gamma, A.delta
    q, i = A.q, A.i
    if qt is INF and qs is INF:
        return (b * g).scale(A.qpow(-1))
    if qt is INF:
        # lim_{tau->inf} 2 q^{sigma+tau-1} rho_{tau,sigma}
        return ((d * b + (g * a).scale(q)).scale(-i * qs * A.qpow(-1))
                + (b * g).scale(A.qpow(-1) * (1 - qs * qs)))
    if qs is INF:
        return ((d * g).scale(q) + b * a).scale(i * qt * A.qpow(-1)) + (b * g).scale(A.qpow(-1) * (1 - qt * qt))
    us = A.inv(qs) - qs  # q^-sigma - q^sigma
    ut = A.inv(qt) - qt
    x = (a * a + d * d + (g * g).scale(q) + (b * b).scale(A.qpow(-1))
         + ((d * g).scale(q) + b * a).scale(i * us)
         - (d * b + (g * a).scale(q)).scale(i * ut)
         + (b * g).scale(us * ut))
    return x.scale(Fraction(1, 2))


# each minor: list of (generator, coefficient builder, depends on tau, depends on sigma)
_MINORS = {
    "alpha": [
        ("a", lambda A, qt, qs: A.v, False, False),
        ("b", lambda A, qt, qs: -A.i * qs / A.v, False, True),
        ("g", lambda A, qt, qs: A.i * qt * A.v, True, False),
        ("d", lambda A, qt, qs: qs * qt / A.v, True, True),
    ],
    "beta": [
        ("a", lambda A, qt, qs: -qs * A.v, False, True),
        ("b", lambda A, qt, qs: -A.i / A.v, False, False),
        ("g", lambda A, qt, qs: -A.i * qs * qt * A.v, True, True),
        ("d", lambda A, qt, qs: qt / A.v, True, False),
    ],
    "gamma": [
        ("a", lambda A, qt, qs: -qt * A.v, True, False),
        ("b", lambda A, qt, qs: A.i * qt * qs / A.v, True, True),
        ("g", lambda A, qt, qs: A.i * A.v, False, False),
        ("d", lambda A, qt, qs: qs / A.v, False, True),
    ],
    "delta": [
        ("a", lambda A, qt, qs: qt * qs * A.v, True, True),
        ("b", lambda A, qt, qs: A.i * qt / A.v, True, False),
        ("g", lambda A, qt, qs: -A.i * qs * A.v, False, True),
        ("d", lambda A, qt, qs: A.one / A.v, False, False),
    ],
}


def minor(name: str, A: Aq, qt, qs) -> NCElement:
    """alpha_{tau,sigma}, beta_{tau,sigma}, gamma_{tau,sigma} or delta_{tau,sigma}."""
    try:
        spec = _MINORS[name]
    except KeyError:
        raise ValueError(f"unknown minor {name!r}; expected alpha, beta, gamma or delta") from None
    terms = {}
    for gen, coef, uses_t, uses_s in spec:
        if (uses_t and qt is INF) or (uses_s and qs is INF):
            continue
        m = next(iter(A.gen(gen).terms))
        terms[m] = A.coerce(coef(A, qt, qs))
    return NCElement(A, terms)


def shifted(A: Aq, x, k: int):
    """q^(param + k) from q^param, keeping INF infinite."""
    return INF if x is INF else x * A.qpow(k)


def eval_poly(poly: UniPoly, x: NCElement) -> NCElement:
    """p(x) for an algebra element x, accumulating powers x^k by repeated products."""
    A = x.parent
    total = A.scalar(0)
    power = A.scalar(1)
    for k, c in enumerate(poly.coeffs):
        if k:
            power = power * x
        if c != 0:
            total = total + power.scale(A.coerce(c))
    return total


def c_const(A: Aq, l: int, n: int, qparam) -> complex:
    """C_n(sigma) for the given q^sigma (numeric mode; involves a square root)."""
    if A.symbolic:
        raise UnsupportedModeError("C_n contains a square root; build b elements numerically")
    q = A.q.real
    q2 = q * q
    qp = complex(qparam).real
    sigma = math.log(qp) / math.log(q)
    num = qpoch_multi([q ** (2 * n + 2), -qp * qp * q ** (-2 * l)], q2, l - n)
    den = math.sqrt(qpoch_multi([q2, q ** (2 * l + 2 * n + 2)], q2, l - n))
    return q ** ((l - n) * (l - n - 1) / 2) * q ** (-sigma * l) * num / den


def build_b(A: Aq, l: int, i: int, j: int, qt, qs) -> NCElement:
    """Generalised matrix element b^l_{i,j}(tau, sigma) for the supported index patterns.

    (0,0) with both parameters finite, (+-n,0) with tau infinite and (0,+-n)
    with sigma infinite.  Numeric algebra only: the normalising constants are
    not units of the Laurent ring.
    """
    if A.symbolic:
        raise UnsupportedModeError("b elements need the numeric algebra")
    q = A.q.real
    q2 = q * q
    if i == 0 and j == 0 and qt is not INF and qs is not INF:
        pol = pjacobi(l, 0, 0, complex(qt).real, complex(qs).real, q2, sqrt_q=q)
        const = q ** (-l) / qpoch(q ** (2 * l + 2), q2, l)
        return eval_poly(pol, rho(A, qt, qs)).scale(const)
    if j == 0 and qt is INF and qs is not INF and abs(i) <= l:
        n = abs(i)
        qsr = complex(qs).real
        if i >= 0:
            prefactor = minor("delta", A, INF, shifted(A, qs, -1)) * minor("gamma", A, INF, qs)
            pol = big_qjacobi(l - n, n, n, qsr * qsr, 1.0, q2)
        else:
            prefactor = minor("beta", A, INF, shifted(A, qs, -1)) * minor("alpha", A, INF, qs)
            pol = big_qjacobi(l - n, n, n, qsr * qsr * q ** (2 * n), q ** (2 * n), q2)
        return (prefactor ** n * eval_poly(pol, rho(A, INF, qs))).scale(c_const(A, l, n, qs))
    if i == 0 and qs is INF and qt is not INF and abs(j) <= l:
        n = abs(j)
        qtr = complex(qt).real
        if j >= 0:
            prefactor = minor("delta", A, shifted(A, qt, -1), INF) * minor("beta", A, qt, INF)
            pol = big_qjacobi(l - n, n, n, qtr * qtr, 1.0, q2)
        else:
            prefactor = minor("gamma", A, shifted(A, qt, -1), INF) * minor("alpha", A, qt, INF)
            pol = big_qjacobi(l - n, n, n, qtr * qtr * q ** (2 * n), q ** (2 * n), q2)
        return (prefactor ** n * eval_poly(pol, rho(A, qt, INF))).scale(c_const(A, l, n, qt))
    raise UnsupportedIndexError(f"b^{l}_{{{i},{j}}} with tau={'inf' if qt is INF else 'finite'}, "
                                f"sigma={'inf' if qs is INF else 'finite'} is not implemented")
