"""q-shifted factorials and terminating basic hypergeometric series.

Every function is generic over the scalar type: exact types (Fraction,
QuadraticSurd, LaurentCoeff) give exact results, floats and complex numbers
give floating results.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DomainError, PoleError, UnsupportedModeError

DEFAULT_TERMINATION_BOUND = 64
DEFAULT_INF_TOL = 1e-15


def is_float(x) -> bool:
    return isinstance(x, (float, complex))


def qpoch(a, base, k):
    """(a; base)_k = prod_{i<k} (1 - a*base^i).  The empty product is 1."""
    if k == math.inf:
        if is_float(a) or is_float(base):
            return qpoch_inf(a, base)
        raise UnsupportedModeError("(a;q)_inf is only available in floating mode")
    if k < 0:
        raise DomainError("qpoch needs k >= 0; use explicit negative-index identities instead")
    result = 1
    pw = 1
    for _ in range(k):
        result = result * (1 - a * pw)
        pw = pw * base
    return result


def qpoch_multi(args: Sequence, base, k):
    """(a_1, ..., a_r; base)_k."""
    result = 1
    for a in args:
        result = result * qpoch(a, base, k)
    return result


def qpoch_inf(a, base, tol: float = DEFAULT_INF_TOL):
    """(a; base)_inf, truncated once the tail factors are within ``tol`` of 1.

    The tail sum_{j>=k} |a base^j| <= |a base^k| / (1 - |base|) bounds the log
    of the neglected product, so stopping there keeps the relative error below
    about ``tol``.
    """
    a = complex(a) if isinstance(a, complex) else float(a)
    base = float(base)
    if abs(base) >= 1:
        raise DomainError("(a;q)_inf needs |q| < 1")
    scale = 1.0 - abs(base)
    result = 1.0
    term = a
    for _ in range(100_000):
        if abs(term) < tol * scale:
            break
        result *= 1 - term
        term *= base
    return result


def termination_index(upper: Sequence, base, bound: int = DEFAULT_TERMINATION_BOUND) -> int | None:
    """Smallest n <= bound such that some upper parameter equals base^(-n)."""
    floating = is_float(base) or any(is_float(a) for a in upper)
    pw = base ** 0 if not floating else 1.0
    inv = 1 / base
    for n in range(bound + 1):
        for a in upper:
            if floating:
                if abs(a - pw) <= 1e-13 * max(1.0, abs(pw)):
                    return n
            elif a == pw:
                return n
        pw = pw * inv
    return None


def phi(upper: Sequence, lower: Sequence, base, z, max_terms: int | None = None,
        termination_bound: int = DEFAULT_TERMINATION_BOUND):
    """The series r+1 phi r (upper; lower; base, z), summed termwise.

    If an upper parameter equals base^(-n) the series is summed exactly up to
    k = n.  Otherwise ``max_terms`` terms are summed (a partial sum).
    """
    if len(upper) != len(lower) + 1:
        raise ValueError("need len(upper) == len(lower) + 1")
    n = termination_index(upper, base, termination_bound)
    if n is None:
        if max_terms is None:
            raise ValueError("series does not terminate; pass max_terms for a partial sum")
        last = max_terms - 1
    else:
        last = n if max_terms is None else min(n, max_terms - 1)
    total = 1
    term = 1
    pw = 1  # base^k
    for k in range(last):
        num = 1
        for a in upper:
            num = num * (1 - a * pw)
        den = 1 - pw * base
        for b in lower:
            den = den * (1 - b * pw)
        if den == 0:
            raise PoleError(f"lower-parameter factor vanishes at k={k} before the series terminates")
        term = term * num * z / den
        total = total + term
        pw = pw * base
    return total
