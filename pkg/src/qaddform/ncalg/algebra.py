"""The Hopf *-algebra A_q(SU(2)) in PBW normal form.

Monomials are triples ``(e, b, c)``: ``e > 0`` stands for alpha^e, ``e < 0`` for
delta^(-e), followed by beta^b gamma^c.  The relations

    alpha beta = q beta alpha,   alpha gamma = q gamma alpha,
    beta delta = q delta beta,   gamma delta = q delta gamma,   beta gamma = gamma beta,
    alpha delta = 1 + q beta gamma,   delta alpha = 1 + q^-1 beta gamma

rewrite every word into a unique combination of such monomials, so equality
of elements is decided by comparing coefficient maps.

An :class:`Aq` instance fixes the coefficient ring: exact Laurent polynomials
in q^(1/2), s = q^sigma, t = q^tau, or complex floats for a numeric q.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from ..coeffring import GaussianRational, LaurentCoeff, conjugate

Monomial = tuple  # (e, b, c)

ONE: Monomial = (0, 0, 0)
ALPHA: Monomial = (1, 0, 0)
DELTA: Monomial = (-1, 0, 0)
BETA: Monomial = (0, 1, 0)
GAMMA: Monomial = (0, 0, 1)


def mono_degree(m: Monomial) -> int:
    return abs(m[0]) + m[1] + m[2]


def mono_str(m: Monomial) -> str:
    e, b, c = m
    parts = []
    for sym, k in (("a" if e > 0 else "d", abs(e)), ("b", b), ("g", c)):
        if k == 1:
            parts.append(sym)
        elif k > 1:
            parts.append(f"{sym}^{k}")
    return "*".join(parts) if parts else "1"


def _sort_key(m: Monomial):
    return (mono_degree(m), -m[0], m[1], m[2])


class Aq:
    """Coefficient context for A_q(SU(2)) and cache for monomial products.

    Use :meth:`symbolic_algebra` for exact work with v, s, t formal, or
    :meth:`numeric` for a concrete 0 < q < 1 with complex coefficients.
    """

    def __init__(self, v, *, s=None, t=None, imag=None, symbolic: bool = False):
        self.v = v
        self.q = v * v
        self.s = s
        self.t = t
        self.symbolic = symbolic
        self.one = v ** 0
        self.i = imag
        self._qpow: dict[int, object] = {}
        self._vpow: dict[int, object] = {}
        self._mul_cache: dict = {}
        self._delta_cache: dict = {}

    @classmethod
    def symbolic_algebra(cls) -> "Aq":
        return cls(LaurentCoeff.v(), s=LaurentCoeff.s(), t=LaurentCoeff.t(),
                   imag=LaurentCoeff.i(), symbolic=True)

    @classmethod
    def numeric(cls, q: float, sigma: float | None = None, tau: float | None = None) -> "Aq":
        q = float(q)
        if not 0 < q < 1:
            raise ValueError("numeric algebra needs 0 < q < 1")
        s = None if sigma is None else complex(q ** sigma)
        t = None if tau is None else complex(q ** tau)
        return cls(complex(math.sqrt(q)), s=s, t=t, imag=1j, symbolic=False)

    def coerce(self, c):
        """Bring a scalar into this algebra's coefficient ring."""
        if self.symbolic:
            if isinstance(c, LaurentCoeff):
                return c
            if isinstance(c, complex):
                raise TypeError("float coefficients are not allowed in the exact algebra")
            return LaurentCoeff.const(c)
        if isinstance(c, LaurentCoeff):
            raise TypeError("substitute symbolic coefficients before using them numerically")
        return complex(c)

    def qpow(self, k: int):
        r = self._qpow.get(k)
        if r is None:
            r = self.v ** (2 * k) if self.symbolic else complex(self.q.real ** k)
            self._qpow[k] = r
        return r

    def vpow(self, k: int):
        r = self._vpow.get(k)
        if r is None:
            r = self.v ** k if self.symbolic else complex(self.v.real ** k)
            self._vpow[k] = r
        return r

    def inv(self, c):
        return 1 / c if not self.symbolic else self.coerce(c).inverse()

    def conj(self, c):
        return conjugate(c)

    # elements -----------------------------------------------------------
    def element(self, terms: Mapping[Monomial, object] | Iterable = ()) -> "NCElement":
        return NCElement(self, dict(terms))

    def scalar(self, c) -> "NCElement":
        return NCElement(self, {ONE: self.coerce(c)})

    def gen(self, name: str) -> "NCElement":
        m = {"a": ALPHA, "alpha": ALPHA, "b": BETA, "beta": BETA,
             "g": GAMMA, "gamma": GAMMA, "d": DELTA, "delta": DELTA}[name]
        return NCElement(self, {m: self.one})

    @property
    def alpha(self):
        return self.gen("a")

    @property
    def beta(self):
        return self.gen("b")

    @property
    def gamma(self):
        return self.gen("g")

    @property
    def delta(self):
        return self.gen("d")

    # monomial products --------------------------------------------------
    def mono_mul(self, m1: Monomial, m2: Monomial) -> list:
        """Normal form of m1*m2 as a list of (monomial, coefficient)."""
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        e1, b1, c1 = m1
        e2, b2, c2 = m2
        # beta^b1 gamma^c1 moves right past alpha^e2 (q^-1 each) or delta^-e2 (q each)
        shift = -(b1 + c1) * e2
        # merge the alpha/delta parts, which may produce a polynomial in beta*gamma
        if e1 * e2 >= 0:
            poly = [self.one]
            e = e1 + e2
        elif e1 > 0:  # alpha^a delta^d
            a, d = e1, -e2
            k = min(a, d)
            poly = [self.one]
            for j in range(k):
                poly = _poly_times_linear(poly, self.qpow(2 * (d - j) - 1))
            e = a - d
        else:  # delta^d alpha^a
            d, a = -e1, e2
            k = min(a, d)
            poly = [self.one]
            for j in range(k):
                poly = _poly_times_linear(poly, self.qpow(1 - 2 * (a - j)))
            e = a - d
        base = self.qpow(shift)
        out = []
        for j, pc in enumerate(poly):
            if pc != 0:
                out.append(((e, b1 + b2 + j, c1 + c2 + j), base * pc))
        self._mul_cache[key] = out
        return out

    def mono_star(self, m: Monomial):
        """(x^e beta^b gamma^c)^* as a single (monomial, coefficient)."""
        e, b, c = m
        sign = -1 if (b + c) % 2 else 1
        # (alpha^a beta^b gamma^c)^* = (-q^-1 beta)^c (-q gamma)^b delta^a, then normal order
        return (-e, c, b), self.qpow(b - c + (b + c) * e) * sign

    def mono_D(self, m: Monomial):
        """Coefficient of the D automorphism on a monomial (a power of q^(1/2))."""
        e, b, c = m
        return self.vpow(-e + b - c)


def _poly_times_linear(poly: list, coef) -> list:
    """Multiply a polynomial in beta*gamma (list of coefficients) by 1 + coef*(beta gamma)."""
    out = list(poly) + [poly[0] * 0]
    for j in range(len(poly)):
        out[j + 1] = out[j + 1] + coef * poly[j]
    return out


def _add_into(acc: dict, key, c):
    r = acc.get(key)
    if r is None:
        acc[key] = c
    else:
        r = r + c
        if r == 0:
            del acc[key]
        else:
            acc[key] = r


class NCElement:
    """Linear combination of PBW monomials with coefficients in ``parent``."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: Aq, terms: dict):
        self.parent = parent
        self.terms = {m: c for m, c in terms.items() if c != 0}

    def _coerce(self, other):
        if isinstance(other, NCElement):
            return other
        if isinstance(other, (int, float, complex, GaussianRational, LaurentCoeff)) or hasattr(other, "numerator"):
            return self.parent.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in o.terms.items():
            _add_into(acc, m, c)
        return NCElement(self.parent, acc)

    __radd__ = __add__

    def __neg__(self):
        return NCElement(self.parent, {m: -c for m, c in self.terms.items()})

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

    def scale(self, c) -> "NCElement":
        c = self.parent.coerce(c)
        if c == 0:
            return NCElement(self.parent, {})
        return NCElement(self.parent, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCElement):
            if isinstance(other, TensorElement):
                return NotImplemented
            return self.scale(other)
        mul = self.parent.mono_mul
        acc: dict = {}
        for m1, x in self.terms.items():
            for m2, y in other.terms.items():
                xy = x * y
                for m, c in mul(m1, m2):
                    _add_into(acc, m, xy * c)
        return NCElement(self.parent, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(self.parent.inv(self.parent.coerce(other)))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = self.parent.scalar(1)
        base = self
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
        return (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def coefficient(self, m: Monomial):
        return self.terms.get(m, self.parent.one * 0)

    def map_coefficients(self, f, parent: Aq | None = None) -> "NCElement":
        return NCElement(parent or self.parent, {m: f(c) for m, c in self.terms.items()})

    # structure maps -----------------------------------------------------
    def star(self) -> "NCElement":
        """Antilinear antimultiplicative involution with alpha* = delta, beta* = -q gamma."""
        P = self.parent
        acc: dict = {}
        for m, c in self.terms.items():
            ms, k = P.mono_star(m)
            _add_into(acc, ms, P.conj(c) * k)
        return NCElement(P, acc)

    def D(self) -> "NCElement":
        """The algebra automorphism scaling alpha, gamma by q^-1/2 and beta, delta by q^1/2."""
        P = self.parent
        return NCElement(P, {m: c * P.mono_D(m) for m, c in self.terms.items()})

    def delta(self) -> "TensorElement":
        """Comultiplication, extended multiplicatively from the generators."""
        P = self.parent
        acc: dict = {}
        for m, c in self.terms.items():
            for key, k in _delta_monomial(P, m).terms.items():
                _add_into(acc, key, c * k)
        return TensorElement(P, acc)

    def __repr__(self):
        return f"NCElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_sort_key):
            parts.append(_term_str(self.terms[m], mono_str(m)))
        return " + ".join(parts)


def _coef_str(c) -> str:
    if isinstance(c, complex):
        return f"({c.real:.17g}{c.imag:+.17g}*i)"
    s = str(c)
    return f"({s})"


def _term_str(c, mono: str) -> str:
    if mono == "1":
        return _coef_str(c)
    if c == 1:
        return mono
    return f"{_coef_str(c)}*{mono}"


def _delta_generators(P: Aq) -> dict:
    one = P.one
    a, b, g, d = ALPHA, BETA, GAMMA, DELTA
    return {
        a: TensorElement(P, {(a, a): one, (b, g): one}),
        b: TensorElement(P, {(a, b): one, (b, d): one}),
        g: TensorElement(P, {(g, a): one, (d, g): one}),
        d: TensorElement(P, {(g, b): one, (d, d): one}),
    }


def _delta_monomial(P: Aq, m: Monomial) -> "TensorElement":
    hit = P._delta_cache.get(m)
    if hit is not None:
        return hit
    if m == ONE:
        result = TensorElement(P, {(ONE, ONE): P.one})
    else:
        gens = P._delta_cache.get("gens")
        if gens is None:
            gens = _delta_generators(P)
            P._delta_cache["gens"] = gens
        e, b, c = m
        # peel one generator off the right end: m = m' * g
        if c:
            g, rest = GAMMA, (e, b, c - 1)
        elif b:
            g, rest = BETA, (e, b - 1, c)
        elif e > 0:
            g, rest = ALPHA, (e - 1, 0, 0)
        else:
            g, rest = DELTA, (e + 1, 0, 0)
        result = _delta_monomial(P, rest) * gens[g]
    P._delta_cache[m] = result
    return result


class TensorElement:
    """Element of A (x) A as a map (monomial, monomial) -> coefficient."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: Aq, terms: dict):
        self.parent = parent
        self.terms = {k: c for k, c in terms.items() if c != 0}

    @classmethod
    def tensor(cls, x: NCElement, y: NCElement) -> "TensorElement":
        acc: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _add_into(acc, (m1, m2), c1 * c2)
        return cls(x.parent, acc)

    def _coerce(self, other):
        if isinstance(other, TensorElement):
            return other
        if isinstance(other, NCElement):
            raise TypeError("cannot combine an algebra element with a tensor element")
        return TensorElement(self.parent, {(ONE, ONE): self.parent.coerce(other)})

    def __add__(self, other):
        o = self._coerce(other)
        acc = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(acc, k, c)
        return TensorElement(self.parent, acc)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.parent, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = self.parent.coerce(other)
            return TensorElement(self.parent, {k: x * c for k, x in self.terms.items()})
        mul = self.parent.mono_mul
        acc: dict = {}
        for (a1, a2), x in self.terms.items():
            for (b1, b2), y in other.terms.items():
                xy = x * y
                left = mul(a1, b1)
                right = mul(a2, b2)
                for m1, c1 in left:
                    for m2, c2 in right:
                        _add_into(acc, (m1, m2), xy * c1 * c2)
        return TensorElement(self.parent, acc)

    def __rmul__(self, other):
        c = self.parent.coerce(other)
        return TensorElement(self.parent, {k: c * x for k, x in self.terms.items()})

    def __pow__(self, n: int):
        result = TensorElement(self.parent, {(ONE, ONE): self.parent.one})
        for _ in range(n):
            result = result * self
        return result

    def star(self) -> "TensorElement":
        P = self.parent
        acc: dict = {}
        for (m1, m2), c in self.terms.items():
            s1, k1 = P.mono_star(m1)
            s2, k2 = P.mono_star(m2)
            _add_into(acc, (s1, s2), P.conj(c) * k1 * k2)
        return TensorElement(P, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms))

    def legs(self) -> dict:
        """Group terms by left monomial: {m1: NCElement of right legs}."""
        out: dict = {}
        for (m1, m2), c in self.terms.items():
            out.setdefault(m1, {})[m2] = c
        return {m1: NCElement(self.parent, d) for m1, d in out.items()}

    def __repr__(self):
        return f"TensorElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m1, m2) in sorted(self.terms, key=lambda k: (_sort_key(k[0]), _sort_key(k[1]))):
            c = self.terms[(m1, m2)]
            body = f"tensor({mono_str(m1)}, {mono_str(m2)})"
            parts.append(body if c == 1 else f"{_coef_str(c)}*{body}")
        return " + ".join(parts)
