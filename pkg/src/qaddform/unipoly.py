"""Dense univariate polynomials in x over any of the scalar types in use.

Coefficients may be ints, Fractions, :class:`~qaddform.coeffring.QuadraticSurd`,
:class:`~qaddform.coeffring.LaurentCoeff` or Python floats/complex numbers.  The
only requirement is ``+``, ``-``, ``*`` and comparison with 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence


class UniPoly:
    """Polynomial ``sum(coeffs[k] * x**k)``; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls, one=1) -> "UniPoly":
        return cls([one * 0, one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                term = a * b
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return UniPoly(out)

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def mul_x(self) -> "UniPoly":
        """Multiply by x."""
        if not self.coeffs:
            return UniPoly()
        return UniPoly([self.coeffs[0] * 0] + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map(self, f: Callable) -> "UniPoly":
        return UniPoly([f(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self[k] == other[k] for k in range(n))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            rational = getattr(c, "as_rational", None)
            if rational is not None and rational() is not None:
                c = rational()
            if isinstance(c, (int, Fraction)):
                neg = c < 0
                mag = abs(c)
                num = str(mag) if mag != 1 or not mono else ""
                sep = " " if "/" in num and mono else ""
                body = f"{num}{sep}{mono}" if num else mono
                pieces.append(("-" if neg else "+", body))
            else:
                cs = str(c)
                pieces.append(("+", f"({cs}){mono}" if mono else f"({cs})"))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out
