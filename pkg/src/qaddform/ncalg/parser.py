"""Text syntax for algebra elements.

Grammar (usual precedence, ``^`` binds tightest)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' ('-'? atom))?
    atom    := number | 'q' | 'v' | 's' | 't' | 'i'
             | 'a' | 'b' | 'g' | 'd'
             | name '[' param ',' param ']'          name in rho, alpha, beta, gamma, delta
             | ('star' | 'delta' | 'D') '(' expr ')'
             | 'tensor' '(' expr ',' expr ')'
             | '(' expr ')'
    param   := 'tau' | 'sigma' | 'inf' | ('tau' | 'sigma') ('+' | '-') integer

Inside ``alpha[...]`` the first slot is the tau parameter and the second the
sigma parameter.  ``v`` is q^(1/2); ``q^(k/2)`` is accepted for any integer k.
Words are normalised as they are multiplied, so ``d*a`` parses to
``1 + q^(-1)*b*g``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..coeffring import GaussianRational, LaurentCoeff
from ..errors import ParseError
from .algebra import Aq, NCElement, TensorElement
from .elements import INF, minor, rho

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

_MINORS = ("alpha", "beta", "gamma", "delta")


class _Parser:
    def __init__(self, text: str, A: Aq):
        self.text = text
        self.A = A
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1) is not None:
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("id", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.k = 0

    # token helpers ------------------------------------------------------
    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else ("eof", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "eof":
            self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    # grammar ------------------------------------------------------------
    def parse(self):
        if not self.tokens:
            self.error("empty input")
        value = self.expr()
        if self.peek()[0] != "eof":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()
            rhs = self.term()
            value = self.combine(value, rhs, op)
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()
            rhs = self.unary()
            value = self.combine(value, rhs, op)
        return value

    def unary(self):
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base_tok = self.peek()
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            op = self.take()
            neg = False
            if self.peek()[1] == "-" and self.peek()[0] == "op":
                self.take()
                neg = True
            exp_tok = self.peek()
            e = self._rational(self.atom(), exp_tok)
            if neg:
                e = -e
            return self._pow(base, e, base_tok, op)
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        A = self.A
        if kind == "num":
            return LaurentCoeff.const(int(val))
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind != "id":
            self.error(f"unexpected {val or 'end of input'!r}", tok)
        scalars = {"q": LaurentCoeff.q, "v": LaurentCoeff.v, "s": LaurentCoeff.s,
                   "t": LaurentCoeff.t, "i": LaurentCoeff.i}
        if val in scalars:
            return scalars[val]()
        if val in ("a", "b", "g", "d"):
            return A.gen(val)
        if val == "tensor":
            self.expect("(")
            x = self.expr()
            self.expect(",")
            y = self.expr()
            self.expect(")")
            return TensorElement.tensor(self._element(x, tok), self._element(y, tok))
        if val in ("star", "D") or (val == "delta" and self.peek()[1] == "("):
            self.expect("(")
            x = self.expr()
            self.expect(")")
            if val == "star":
                if isinstance(x, LaurentCoeff):
                    return x.conjugate()
                return x.star()
            x = self._element(x, tok)
            return x.D() if val == "D" else x.delta()
        if val == "rho" or val in _MINORS:
            self.expect("[")
            qt = self.param("tau")
            self.expect(",")
            qs = self.param("sigma")
            self.expect("]")
            return rho(A, qt, qs) if val == "rho" else minor(val, A, qt, qs)
        self.error(f"unknown identifier {val!r}", tok)

    def param(self, which: str):
        tok = self.take()
        if tok[0] != "id" or tok[1] not in ("tau", "sigma", "inf"):
            self.error(f"expected tau, sigma or inf, found {tok[1] or 'end of input'!r}", tok)
        if tok[1] == "inf":
            return INF
        if tok[1] != which:
            self.error(f"expected {which} in this slot, found {tok[1]!r}", tok)
        base = self.A.t if which == "tau" else self.A.s
        if self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            num = self.take()
            if num[0] != "num":
                self.error("expected an integer shift", num)
            return base * self.A.qpow(sign * int(num[1]))
        return base

    # semantics ----------------------------------------------------------
    def _element(self, x, tok):
        if isinstance(x, NCElement):
            return x
        if isinstance(x, LaurentCoeff):
            return self.A.scalar(x)
        self.error("expected an algebra element, found a tensor", tok)

    def _rational(self, x, tok) -> Fraction:
        if isinstance(x, LaurentCoeff) and all(e == (0, 0, 0) for e in x.terms):
            c = x.terms.get((0, 0, 0), GaussianRational(0))
            if c.im == 0:
                return c.re
        self.error("exponent must be a rational constant", tok)

    def _pow(self, base, e: Fraction, tok, op_tok):
        if isinstance(base, LaurentCoeff):
            if e.denominator == 1:
                if e < 0 and not base.is_monomial():
                    self.error("negative powers need a monomial base", op_tok)
                return base ** int(e)
            if e.denominator == 2 and base == LaurentCoeff.q():
                return LaurentCoeff.v() ** int(2 * e)
            self.error("fractional exponents are only allowed on q (halves)", op_tok)
        if e.denominator != 1 or e < 0:
            self.error("algebra elements take nonnegative integer powers", op_tok)
        return base ** int(e)

    def combine(self, x, y, op):
        o = op[1]
        kinds = {type(x), type(y)}
        if NCElement in kinds and TensorElement in kinds:
            self.error("cannot combine an algebra element with a tensor element", op)
        try:
            if o == "+":
                return x + y
            if o == "-":
                return x - y
            if o == "*":
                if isinstance(x, LaurentCoeff) and not isinstance(y, LaurentCoeff):
                    return y.__rmul__(x) if isinstance(y, NCElement) else y * x
                return x * y
            if not isinstance(y, LaurentCoeff):
                self.error("can only divide by a scalar", op)
            if not y.is_monomial():
                self.error("can only divide by a monomial scalar", op)
            if isinstance(x, LaurentCoeff):
                return x / y
            return x * y.inverse()
        except (TypeError, ArithmeticError) as exc:
            self.error(str(exc) or "incompatible operands", op)


def parse_nc(text: str, A: Aq | None = None):
    """Parse text into a normal-form element (or a scalar / tensor element)."""
    A = A or Aq.symbolic_algebra()
    if not A.symbolic:
        raise ValueError("the parser works in the exact algebra")
    value = _Parser(text, A).parse()
    if isinstance(value, LaurentCoeff):
        return A.scalar(value)
    return value


def print_nc(x) -> str:
    """Canonical text of an element; ``parse_nc(print_nc(x)) == x``."""
    return str(x)


__all__ = ["parse_nc", "print_nc"]
