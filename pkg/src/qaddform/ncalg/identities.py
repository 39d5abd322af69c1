"""Symbolic identity suite for the named elements.

Each identity is built in the exact algebra with v, s = q^sigma and
t = q^tau formal, and passes only when lhs - rhs normalises to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..report import VerificationReport
from .algebra import Aq, NCElement, TensorElement
from .elements import INF, minor, rho


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    build: Callable[[Aq], tuple]


def _sh(A: Aq, x, k: int):
    return INF if x is INF else x * A.qpow(k)


def _m(name, A, qt, qs, dt=0, ds=0):
    return minor(name, A, _sh(A, qt, dt), _sh(A, qs, ds))


def _r(A, qt, qs, dt=0, ds=0):
    return rho(A, _sh(A, qt, dt), _sh(A, qs, ds))


def _factorisations():
    def mk(left, dl, right, coef_rho, const):
        def build(A):
            t, s = A.t, A.s
            lhs = _m(left, A, t, s, *dl) * _m(right, A, t, s)
            return lhs, _r(A, t, s).scale(coef_rho(A)) + A.scalar(const(A))
        return build
    return [
        Identity("factor.beta-gamma", "beta[tau+1,sigma-1]*gamma[tau,sigma] = 2q^(tau+sigma) rho - q^(2sigma-1) - q^(2tau+1)",
                 mk("beta", (1, -1), "gamma", lambda A: 2 * A.t * A.s,
                    lambda A: -(A.s * A.s * A.qpow(-1)) - A.t * A.t * A.q)),
        Identity("factor.gamma-beta", "gamma[tau-1,sigma+1]*beta[tau,sigma] = 2q^(tau+sigma) rho - q^(2sigma+1) - q^(2tau-1)",
                 mk("gamma", (-1, 1), "beta", lambda A: 2 * A.t * A.s,
                    lambda A: -(A.s * A.s * A.q) - A.t * A.t * A.qpow(-1))),
        Identity("factor.alpha-delta", "alpha[tau+1,sigma+1]*delta[tau,sigma] = 2q^(tau+sigma+1) rho + 1 + q^(2sigma+2tau+2)",
                 mk("alpha", (1, 1), "delta", lambda A: 2 * A.t * A.s * A.q,
                    lambda A: 1 + (A.s * A.t * A.q) ** 2)),
        Identity("factor.delta-alpha", "delta[tau-1,sigma-1]*alpha[tau,sigma] = 2q^(tau+sigma-1) rho + 1 + q^(2sigma+2tau-2)",
                 mk("delta", (-1, -1), "alpha", lambda A: 2 * A.t * A.s * A.qpow(-1),
                    lambda A: 1 + (A.s * A.t * A.qpow(-1)) ** 2)),
    ]


# (minor, tau shift, sigma shift) of the rho on the right-hand side
_COMM = [("alpha", -1, -1), ("beta", -1, 1), ("gamma", 1, -1), ("delta", 1, 1)]
# sigma shift and scalar power of q for the tau = infinity specialisation
_COMM_INF = {"alpha": (-1, 2), "beta": (1, 0), "gamma": (-1, 0), "delta": (1, -2)}


def _commutations():
    out = []
    for name, dt, ds in _COMM:
        def build(A, name=name, dt=dt, ds=ds):
            t, s = A.t, A.s
            x = _m(name, A, t, s)
            return x * _r(A, t, s), _r(A, t, s, dt, ds) * x
        out.append(Identity(f"comm.{name}-rho", f"{name}[tau,sigma] rho[tau,sigma] = rho[tau{dt:+d},sigma{ds:+d}] {name}[tau,sigma]", build))
    for name, _, _ in _COMM:
        ds, k = _COMM_INF[name]

        def build(A, name=name, ds=ds, k=k):
            s = A.s
            x = _m(name, A, INF, s)
            return x * _r(A, INF, s), (_r(A, INF, s, 0, ds) * x).scale(A.qpow(k))
        out.append(Identity(f"comm.{name}-rho.inf", f"{name}[inf,sigma] rho[inf,sigma] = q^{k} rho[inf,sigma{ds:+d}] {name}[inf,sigma]", build))
    return out


def _sphere():
    # (left, left shifts, right, rhs left, rhs left shifts, rhs right)
    rows = [
        ("alpha-beta", "alpha", (-1, 1), "beta", "beta", (-1, -1), "alpha"),
        ("alpha-gamma", "alpha", (1, -1), "gamma", "gamma", (-1, -1), "alpha"),
        ("gamma-delta", "gamma", (1, 1), "delta", "delta", (1, -1), "gamma"),
        ("beta-delta", "beta", (1, 1), "delta", "delta", (-1, 1), "beta"),
    ]
    out = []
    for tag, l1, sh1, r1, l2, sh2, r2 in rows:
        def build(A, l1=l1, sh1=sh1, r1=r1, l2=l2, sh2=sh2, r2=r2):
            t, s = A.t, A.s
            lhs = _m(l1, A, t, s, *sh1) * _m(r1, A, t, s)
            rhs = (_m(l2, A, t, s, *sh2) * _m(r2, A, t, s)).scale(A.q)
            return lhs, rhs
        out.append(Identity(f"sphere.{tag}", f"{l1}[tau{sh1[0]:+d},sigma{sh1[1]:+d}] {r1}[tau,sigma] = q {l2}[tau{sh2[0]:+d},sigma{sh2[1]:+d}] {r2}[tau,sigma]", build))

    def build_ad(A):
        s = A.s
        lhs = _m("alpha", A, INF, s, 0, 1) * _m("delta", A, INF, s) - _m("delta", A, INF, s, 0, -1) * _m("alpha", A, INF, s)
        rhs = ((_m("beta", A, INF, s, 0, -1) * _m("gamma", A, INF, s)).scale(A.q)
               - (_m("gamma", A, INF, s, 0, 1) * _m("beta", A, INF, s)).scale(A.qpow(-1)))
        return lhs, rhs
    out.append(Identity("sphere.alpha-delta.inf",
                        "alpha[inf,sigma+1] delta[inf,sigma] - delta[inf,sigma-1] alpha[inf,sigma] = "
                        "q beta[inf,sigma-1] gamma[inf,sigma] - q^-1 gamma[inf,sigma+1] beta[inf,sigma]", build_ad))
    return out


def _stars():
    rows = [("alpha", "delta", (-1, -1), 1), ("beta", "gamma", (-1, 1), 0),
            ("gamma", "beta", (1, -1), 0), ("delta", "alpha", (1, 1), -1)]
    out = []
    for name, other, (dt, ds), k in rows:
        sign = -1 if name in ("beta", "gamma") else 1

        def build(A, name=name, other=other, dt=dt, ds=ds, k=k, sign=sign):
            t, s = A.t, A.s
            return _m(name, A, t, s).star(), _m(other, A, t, s, dt, ds).scale(A.qpow(k) * sign)
        pre = "-" if sign < 0 else ("q " if k == 1 else "q^-1 " if k == -1 else "")
        out.append(Identity(f"star.{name}", f"{name}[tau,sigma]^* = {pre}{other}[tau{dt:+d},sigma{ds:+d}]", build))
    return out


def _coproduct():
    def build(A):
        t, s = A.t, A.s
        lhs = (_m("beta", A, t, s, 1, -1) * _m("gamma", A, t, s)).delta()

        def left(a, b):
            return (_m(a, A, t, INF, 1, 0) * _m(b, A, t, INF)).D()

        def right(a, b):
            return _m(a, A, INF, s, 0, -1) * _m(b, A, INF, s)
        rhs = (TensorElement.tensor(left("alpha", "gamma"), right("beta", "alpha"))
               + TensorElement.tensor(left("alpha", "delta"), right("beta", "gamma"))
               + TensorElement.tensor(left("beta", "gamma"), right("delta", "alpha"))
               + TensorElement.tensor(left("beta", "delta"), right("delta", "gamma")))
        return lhs, rhs
    return [Identity("coproduct.beta-gamma",
                     "Delta(beta[tau+1,sigma-1] gamma[tau,sigma]) as a four-term sum of D-twisted tau-minors "
                     "tensored with sigma-minors", build)]


IDENTITIES: list[Identity] = _factorisations() + _commutations() + _sphere() + _stars() + _coproduct()


def identity_check(identity_id: str, lhs, rhs, params: dict | None = None) -> VerificationReport:
    """Exact comparison of two normal forms; the residual is the number of surviving terms."""
    diff = lhs - rhs
    n = len(diff.terms)
    return VerificationReport(identity_id, params or {"v": "q^(1/2)", "s": "q^sigma", "t": "q^tau"},
                              "exact", n, n == 0, "" if n == 0 else f"residual: {diff}")


def run_identity(ident: Identity, A: Aq | None = None) -> VerificationReport:
    A = A or Aq.symbolic_algebra()
    lhs, rhs = ident.build(A)
    rep = identity_check(ident.id, lhs, rhs)
    rep.notes = ident.statement if rep.passed else ident.statement + "; " + rep.notes
    return rep


def run_suite(ids: list[str] | None = None) -> list[VerificationReport]:
    A = Aq.symbolic_algebra()
    chosen = [i for i in IDENTITIES if ids is None or i.id in ids]
    return sorted((run_identity(i, A) for i in chosen), key=lambda r: r.id)


__all__ = ["Identity", "IDENTITIES", "identity_check", "run_identity", "run_suite", "NCElement"]
