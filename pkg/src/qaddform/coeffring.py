"""Exact coefficient rings.

Three scalar types live here:

* :class:`GaussianRational` -- ``re + i*im`` with rational parts.
* :class:`LaurentCoeff` -- Laurent polynomials in ``v`` (standing for q^(1/2)),
  ``s`` (q^sigma) and ``t`` (q^tau) with Gaussian-rational coefficients.
* :class:`QuadraticSurd` -- elements ``a + b*sqrt(q)`` of the field Q(sqrt(q))
  for a fixed rational q.  This is what the rational-grid verifications run in,
  since half-integer powers of q appear in almost every formula.

All three are immutable values and can be shared freely.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "GaussianRational",
    "LaurentCoeff",
    "QuadraticSurd",
    "SqrtField",
    "as_fraction",
    "conjugate",
]


def as_fraction(x) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """A number ``re + i*im`` with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @classmethod
    def _coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GaussianRational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        d = self.re * self.re + self.im * self.im
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / d, -self.im / d)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({_fmt_frac(self.re)}, {_fmt_frac(self.im)})"

    def __str__(self):
        if self.im == 0:
            return _fmt_frac(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{_fmt_frac(self.im)}*i"
        if self.re == 0:
            return im
        sign = "-" if self.im < 0 else "+"
        mag = "i" if abs(self.im) == 1 else f"{_fmt_frac(abs(self.im))}*i"
        return f"({_fmt_frac(self.re)} {sign} {mag})"


_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)

Exponent = tuple  # (e_v, e_s, e_t)


class LaurentCoeff:
    """Sparse Laurent polynomial in v = q^(1/2), s = q^sigma, t = q^tau.

    ``terms`` maps exponent triples ``(e_v, e_s, e_t)`` to nonzero
    :class:`GaussianRational` coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = GaussianRational._coerce(c)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentCoeff":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentCoeff":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ev: int = 0, es: int = 0, et: int = 0, c=1) -> "LaurentCoeff":
        return cls({(ev, es, et): c})

    @classmethod
    def v(cls) -> "LaurentCoeff":
        return cls.monomial(1, 0, 0)

    @classmethod
    def q(cls) -> "LaurentCoeff":
        return cls.monomial(2, 0, 0)

    @classmethod
    def s(cls) -> "LaurentCoeff":
        return cls.monomial(0, 1, 0)

    @classmethod
    def t(cls) -> "LaurentCoeff":
        return cls.monomial(0, 0, 1)

    @classmethod
    def i(cls) -> "LaurentCoeff":
        return cls.const(GaussianRational(0, 1))

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, LaurentCoeff):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return cls.const(x)
        return NotImplemented

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            r = out.get(e)
            if r is None:
                out[e] = c
            else:
                r = r + c
                if r:
                    out[e] = r
                else:
                    del out[e]
        return LaurentCoeff._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentCoeff._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return LaurentCoeff._raw({})
            return LaurentCoeff._raw({e: c * other for e, c in self.terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in o.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                r = out.get(e)
                out[e] = x * y if r is None else r + x * y
        return LaurentCoeff._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "LaurentCoeff":
        """Inverse of a single-term element; anything else is not a unit."""
        if len(self.terms) != 1:
            raise ArithmeticError(f"{self} is not invertible in the Laurent ring")
        ((a, b, c), x), = self.terms.items()
        return LaurentCoeff._raw({(-a, -b, -c): x.inverse()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * GaussianRational._coerce(other).inverse()
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = LaurentCoeff.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure ----------------------------------------------------------
    def conjugate(self) -> "LaurentCoeff":
        """Complex conjugation: i -> -i, the symbols are real."""
        return LaurentCoeff._raw({e: c.conjugate() for e, c in self.terms.items()})

    def shift(self, dsigma: int = 0, dtau: int = 0) -> "LaurentCoeff":
        """Replace sigma by sigma + dsigma and tau by tau + dtau (s -> s q^dsigma)."""
        if not dsigma and not dtau:
            return self
        return LaurentCoeff._raw(
            {(ev + 2 * dsigma * es + 2 * dtau * et, es, et): c for (ev, es, et), c in self.terms.items()}
        )

    def substitute(self, v0, s0, t0) -> GaussianRational:
        """Exact evaluation at positive rationals v0, s0, t0."""
        v0, s0, t0 = as_fraction(v0), as_fraction(s0), as_fraction(t0)
        if v0 <= 0 or s0 <= 0 or t0 <= 0:
            raise ValueError("substitution values must be positive")
        total = GaussianRational(0)
        for (ev, es, et), c in self.terms.items():
            total = total + c * (v0**ev * s0**es * t0**et)
        return total

    def evaluate(self, v, s, t):
        """Evaluate with arbitrary scalar values (floats, QuadraticSurd, ...).

        Purely real coefficients are passed through as Fractions so that exact
        scalar types stay exact; non-real ones become Python complex numbers.
        """
        total = 0
        for (ev, es, et), c in self.terms.items():
            k = c.re if c.im == 0 else complex(c)
            total = total + k * (v**ev) * (s**es) * (t**et)
        return total

    def __complex__(self):
        if any(e != (0, 0, 0) for e in self.terms):
            raise TypeError("only constant LaurentCoeff values convert to complex")
        return complex(self.terms.get((0, 0, 0), _ZERO))

    def __repr__(self):
        return f"LaurentCoeff({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ev, es, et) in sorted(self.terms):
            c = self.terms[(ev, es, et)]
            factors = []
            if ev:
                factors.append(_fmt_qpow(ev))
            if es:
                factors.append("s" if es == 1 else f"s^{_fmt_int(es)}")
            if et:
                factors.append("t" if et == 1 else f"t^{_fmt_int(et)}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _fmt_int(k: int) -> str:
    return str(k) if k >= 0 else f"({k})"


def _fmt_qpow(ev: int) -> str:
    if ev == 2:
        return "q"
    if ev % 2 == 0:
        return f"q^{_fmt_int(ev // 2)}"
    return f"q^({ev}/2)"


def conjugate(x):
    """Complex conjugate of any supported scalar (real scalars map to themselves)."""
    if isinstance(x, (GaussianRational, LaurentCoeff, complex)):
        return x.conjugate()
    return x


class QuadraticSurd:
    """Element ``a + b*sqrt(q)`` of Q(sqrt(q)) for a fixed positive rational q.

    Build elements through :class:`SqrtField`; mixing elements of different
    fields raises ``ValueError``.
    """

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q: Fraction):
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.q = q

    def _coerce(self, x):
        if isinstance(x, QuadraticSurd):
            if x.q != self.q:
                raise ValueError("QuadraticSurd values from different fields")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadraticSurd(x, 0, self.q)
        if isinstance(x, GaussianRational) and x.im == 0:
            return QuadraticSurd(x.re, 0, self.q)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.q)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticSurd(self.a - o.a, self.b - o.b, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(self.a * other, self.b * other, self.q)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticSurd(self.a * o.a + self.q * self.b * o.b, self.a * o.b + self.b * o.a, self.q)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        norm = self.a * self.a - self.q * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("QuadraticSurd division by zero")
        return QuadraticSurd(self.a / norm, -self.b / norm, self.q)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadraticSurd division by zero")
            return QuadraticSurd(self.a / other, self.b / other, self.q)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadraticSurd(1, 0, self.q), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.q))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __abs__(self):
        return abs(float(self))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    def conjugate(self):
        return self

    def as_rational(self):
        """The value as a Fraction when the surd part vanishes, else None."""
        return self.a if self.b == 0 else None

    def __repr__(self):
        return f"QuadraticSurd({self})"

    def __str__(self):
        if self.b == 0:
            return _fmt_frac(self.a)
        root = f"sqrt({_fmt_frac(self.q)})"
        tail = root if self.b == 1 else f"{_fmt_frac(self.b)}*{root}"
        if self.a == 0:
            return tail
        return f"{_fmt_frac(self.a)} + {tail}"


class SqrtField:
    """The field Q(sqrt(q)) for a rational 0 < q, with sqrt(q) available as ``v``.

    When q is a perfect square the root is rational and ``v`` has b == 0, so
    no zero divisors can ever be formed.
    """

    def __init__(self, q):
        q = as_fraction(q)
        if q <= 0:
            raise ValueError("q must be positive")
        self.q_value = q
        rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            self.v = QuadraticSurd(Fraction(rn, rd), 0, q)
        else:
            self.v = QuadraticSurd(0, 1, q)
        self.q = QuadraticSurd(q, 0, q)
        self.one = QuadraticSurd(1, 0, q)
        self.zero = QuadraticSurd(0, 0, q)

    def __call__(self, x) -> QuadraticSurd:
        if isinstance(x, QuadraticSurd):
            return x
        return QuadraticSurd(as_fraction(x), 0, self.q_value)

    def qpow(self, k) -> QuadraticSurd:
        """q**k for integer or half-integer k."""
        k2 = Fraction(k) * 2
        if k2.denominator != 1:
            raise ValueError("only integer and half-integer powers of q are exact")
        return self.v ** int(k2)

    def __repr__(self):
        return f"SqrtField({_fmt_frac(self.q_value)})"


def lc_sum(items: Iterable) -> LaurentCoeff:
    total = LaurentCoeff()
    for x in items:
        total = total + x
    return total
