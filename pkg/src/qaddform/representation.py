"""The infinite-dimensional *-representation on l^2(Z_+), truncated to N dimensions.

Operators are built monomial by monomial from the action on basis vectors,

    alpha e_n = sqrt(1 - q^2n) e_{n-1},   beta e_n = -q^(n+1) e_n,
    gamma e_n = q^n e_n,                  delta e_n = sqrt(1 - q^(2n+2)) e_{n+1},

so each stored matrix is exactly the compression P pi(x) P of the infinite
operator.  Products of compressions agree with the compression of the product
only on leading columns; :class:`TruncatedOperator` tracks how many.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .coeffring import LaurentCoeff
from .errors import SpectrumError
from .ncalg.algebra import Aq, NCElement, TensorElement
from .ncalg.elements import INF, build_b, c_const, minor, rho
from .polyfam import big_qjacobi
from .qseries import qpoch, qpoch_inf, qpoch_multi
from .report import VerificationReport


# ---------------------------------------------------------------- operators
@dataclass
class TruncatedOperator:
    """N x N (or N^2 x N^2 for tensor operators) sparse matrix with exactness bookkeeping."""

    dim: int
    matrix: sp.csr_matrix
    bandwidth: int
    exact_cols: int
    factors: int = 1  # 1 for l^2, 2 for the tensor square

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.toarray()

    def __matmul__(self, other):
        if isinstance(other, TruncatedOperator):
            exact = max(0, min(other.exact_cols, self.exact_cols - other.bandwidth))
            return TruncatedOperator(self.dim, (self.matrix @ other.matrix).tocsr(),
                                     self.bandwidth + other.bandwidth, exact, self.factors)
        return self.matrix @ other

    def __add__(self, other):
        return TruncatedOperator(self.dim, (self.matrix + other.matrix).tocsr(),
                                 max(self.bandwidth, other.bandwidth),
                                 min(self.exact_cols, other.exact_cols), self.factors)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return TruncatedOperator(self.dim, (self.matrix * c).tocsr(), self.bandwidth, self.exact_cols, self.factors)

    def adjoint(self):
        return TruncatedOperator(self.dim, self.matrix.conj().T.tocsr(), self.bandwidth, self.exact_cols, self.factors)


def _coef_value(c, v, s, t) -> complex:
    if isinstance(c, LaurentCoeff):
        return complex(c.evaluate(v, s, t))
    return complex(c)


def _scalars(P: Aq, q, sigma, tau):
    """(v, s, t) floats used to evaluate symbolic coefficients."""
    if P.symbolic:
        if q is None:
            raise ValueError("a numeric q is needed to represent a symbolic element")
        v = math.sqrt(q)
        s = q ** sigma if sigma is not None else 1.0
        t = q ** tau if tau is not None else 1.0
        return q, v, s, t
    return P.q.real, P.v.real, None, None


def _mono_column_map(m, q: float, N: int):
    """Row indices and values of pi(m) e_n for n < N (target kept only if < N)."""
    e, b, c = m
    rows, cols, vals = [], [], []
    for n in range(N):
        val = (-(q ** (n + 1))) ** b * (q ** n) ** c
        k = n
        if e > 0:
            for _ in range(e):
                if k == 0:
                    val = 0.0
                    break
                val *= math.sqrt(1 - q ** (2 * k))
                k -= 1
        elif e < 0:
            for _ in range(-e):
                val *= math.sqrt(1 - q ** (2 * k + 2))
                k += 1
        if val != 0.0 and k < N:
            rows.append(k)
            cols.append(n)
            vals.append(val)
    return rows, cols, vals


_MONO_CACHE: dict = {}


def _mono_matrix(m, q: float, N: int) -> sp.csr_matrix:
    key = (m, q, N)
    hit = _MONO_CACHE.get(key)
    if hit is None:
        rows, cols, vals = _mono_column_map(m, q, N)
        hit = sp.csr_matrix((np.array(vals, dtype=complex), (rows, cols)), shape=(N, N))
        if len(_MONO_CACHE) > 4096:
            _MONO_CACHE.clear()
        _MONO_CACHE[key] = hit
    return hit


def pi_matrix(x: NCElement, N: int, q: float | None = None, sigma: float | None = None,
              tau: float | None = None) -> TruncatedOperator:
    """Compression of pi(x) to span(e_0..e_{N-1}).

    Symbolic elements need ``q`` (and ``sigma``/``tau`` when s or t occur).
    Every entry is exact, so ``exact_cols`` refers to use inside products:
    it is N minus the bandwidth.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    q, v, s, t = _scalars(x.parent, q, sigma, tau)
    M = sp.csr_matrix((N, N), dtype=complex)
    bw = 0
    for m, c in x.terms.items():
        M = M + _mono_matrix(m, q, N) * _coef_value(c, v, s, t)
        bw = max(bw, abs(m[0]))
    return TruncatedOperator(N, M.tocsr(), bw, N - bw)


def pi_tensor(x: TensorElement, N: int, q: float | None = None, sigma: float | None = None,
              tau: float | None = None) -> TruncatedOperator:
    """(pi (x) pi)(x) on the N^2-dimensional truncated tensor square (index i*N + j)."""
    q, v, s, t = _scalars(x.parent, q, sigma, tau)
    M = sp.csr_matrix((N * N, N * N), dtype=complex)
    bw = 0
    for (m1, m2), c in x.terms.items():
        M = M + sp.kron(_mono_matrix(m1, q, N), _mono_matrix(m2, q, N), format="csr") * _coef_value(c, v, s, t)
        bw = max(bw, abs(m1[0]), abs(m2[0]))
    return TruncatedOperator(N, M.tocsr(), bw, N - bw, factors=2)


# ---------------------------------------------------------------- eigenvectors
@dataclass
class EigVec:
    """Eigenvector of pi(rho[inf,sigma]) with <v, e_0> = 1 (coefficients p_0..p_{N-1})."""

    lam: float
    sigma: float
    q: float
    coeffs: np.ndarray
    residual: float = 0.0
    ladder: str = ""
    index: int = 0


def ladder_position(lam: float, sigma: float, q: float, max_n: int = 400, rtol: float = 1e-12):
    """('neg', n) if lam = -q^2n, ('pos', n) if lam = q^(2 sigma + 2n), else None."""
    for n in range(max_n):
        target = -(q ** (2 * n))
        if abs(lam - target) <= rtol * abs(target):
            return "neg", n
        target = q ** (2 * sigma + 2 * n)
        if abs(lam - target) <= rtol * abs(target):
            return "pos", n
    return None


def eigvec(lam: float, sigma: float, q: float, N: int, extra: int = 200) -> EigVec:
    """Eigenvector v_lam(q^sigma) of pi(rho[inf,sigma]) truncated to N coordinates.

    The recurrence A_n p_{n+1} + B_n p_n + C_n p_{n-1} = 0 is unstable forwards, so
    the ratios r_n = p_{n+1}/p_n come from the continued fraction run backwards
    from n = N + extra.  ``residual`` is the defect of the n = 0 equation.
    Since pi(rho[tau,inf]) = pi(rho[inf,tau]) this also gives v_mu(q^tau).
    """
    pos = ladder_position(lam, sigma, q)
    if pos is None:
        raise SpectrumError(f"{lam} is not of the form -q^(2n) or q^(2 sigma + 2n) (q={q}, sigma={sigma})")
    qs = q ** sigma
    K = N + extra
    r = 0j
    ratios = np.zeros(K + 1, dtype=complex)
    for n in range(K, 0, -1):
        An = -1j * qs * q ** n * math.sqrt(1 - q ** (2 * n + 2))
        Bn = -(1 - qs * qs) * q ** (2 * n) - lam
        Cn = 1j * qs * q ** (n - 1) * math.sqrt(1 - q ** (2 * n))
        r = -Cn / (Bn + An * r)
        ratios[n - 1] = r
    A0 = -1j * qs * math.sqrt(1 - q * q)
    B0 = -(1 - qs * qs) - lam
    p = np.zeros(N, dtype=complex)
    p[0] = 1.0
    for n in range(N - 1):
        p[n + 1] = ratios[n] * p[n]
    return EigVec(lam, sigma, q, p, abs(B0 + A0 * ratios[0]), pos[0], pos[1])


def eigvec_or_zero(lam: float, sigma: float, q: float, N: int) -> np.ndarray:
    """v_lam(q^sigma), or the zero vector when lam is not an eigenvalue."""
    if ladder_position(lam, sigma, q) is None:
        return np.zeros(N, dtype=complex)
    return eigvec(lam, sigma, q, N).coeffs


def prop_norm(lam_kind: str, n: int, sigma: float, q: float) -> float:
    """Closed-form <v, v> for lam = -q^2n ('neg') or q^(2 sigma + 2n) ('pos')."""
    q2 = q * q
    if lam_kind == "neg":
        return q ** (-2 * n) * qpoch(q2, q2, n) * qpoch(-(q ** (2 - 2 * sigma)), q2, n) * qpoch_inf(-(q ** (2 * sigma)), q2)
    return q ** (-2 * n) * qpoch(q2, q2, n) * qpoch(-(q ** (2 + 2 * sigma)), q2, n) * qpoch_inf(-(q ** (-2 * sigma)), q2)


def ladder(sigma: float, q: float, nmax: int) -> list[tuple[str, int, float]]:
    out = [("neg", n, -(q ** (2 * n))) for n in range(nmax + 1)]
    out += [("pos", n, q ** (2 * sigma + 2 * n)) for n in range(nmax + 1)]
    return out


# ---------------------------------------------------------------- suites
def spectrum_check(q: float = 0.5, sigma: float = 1.0, N: int = 40, nmax: int = 10,
                   tol: float = 1e-8) -> VerificationReport:
    """Eigenvalues of the truncated pi(rho[inf,sigma]) against both ladders, n <= nmax."""
    A = Aq.numeric(q)
    M = pi_matrix(rho(A, INF, complex(q ** sigma)), N).entries
    herm = float(np.abs(M - M.conj().T).max())
    ev = np.linalg.eigvalsh((M + M.conj().T) / 2)
    claimed: dict[int, float] = {}
    worst = 0.0
    ok = True
    for kind, n, target in ladder(sigma, q, nmax):
        j = int(np.argmin(np.abs(ev - target)))
        d = abs(ev[j] - target)
        if j in claimed:
            ok = False
        claimed[j] = target
        worst = max(worst, d)
    passed = ok and worst <= tol and herm <= 1e-12
    return VerificationReport("repr.spectrum", {"q": q, "sigma": sigma, "N": N, "nmax": nmax, "tol": tol},
                              "float", worst, passed, f"hermitian defect {herm:.2e}; unique matching {ok}")


def norm_check(q: float, sigma: float, nmax: int = 8, tol: float = 1e-10, N: int = 400) -> VerificationReport:
    """<v, v> from the computed eigenvectors against the closed-form norms."""
    worst = 0.0
    for kind, n, lam in ladder(sigma, q, nmax):
        v = eigvec(lam, sigma, q, N)
        val = float(np.vdot(v.coeffs, v.coeffs).real)
        ref = prop_norm(kind, n, sigma, q)
        worst = max(worst, abs(val - ref) / abs(ref))
    return VerificationReport("repr.norms", {"q": q, "sigma": sigma, "nmax": nmax, "tol": tol},
                              "float", worst, worst <= tol, "relative error, both ladders")


def orthogonality_check(q: float = 0.5, sigma: float = 1.0, nmax: int = 6, N: int = 400,
                        tol: float = 1e-9) -> VerificationReport:
    vecs = [eigvec(lam, sigma, q, N).coeffs for _, _, lam in ladder(sigma, q, nmax)]
    worst = 0.0
    for i in range(len(vecs)):
        for j in range(i):
            ip = abs(np.vdot(vecs[i], vecs[j]))
            worst = max(worst, ip / (np.linalg.norm(vecs[i]) * np.linalg.norm(vecs[j])))
    return VerificationReport("repr.orthogonality", {"q": q, "sigma": sigma, "nmax": nmax}, "float",
                              worst, worst <= tol, "max normalised inner product of distinct eigenvectors")


def _minor_expectation(name: str, mode: str, lam: float, p: float, q: float, N: int) -> np.ndarray:
    """Right-hand side of the eigenvector action of a minor with one infinite parameter.

    ``p`` is sigma (mode 'sigma': minors [inf, sigma]) or tau (mode 'tau': minors [tau, inf]).
    """
    h = math.sqrt(q)
    qp = q ** p
    if name == "alpha":
        return 1j * q ** (0.5 - p) * (1 + lam) * eigvec_or_zero(lam / (q * q), p - 1, q, N)
    if name == "delta":
        return -1j * h * qp * eigvec_or_zero(lam * q * q, p + 1, q, N)
    lowered = 1j * h * eigvec_or_zero(lam, p - 1, q, N)
    raised = 1j * h * (qp * qp - lam) * eigvec_or_zero(lam, p + 1, q, N)
    if mode == "sigma":
        return lowered if name == "gamma" else raised
    return lowered if name == "beta" else raised


def action_check_minor(name: str, mode: str, lam: float, param: float, q: float = 0.5, N: int = 40,
                       tol: float = 1e-10) -> VerificationReport:
    """pi(minor) v_lam against the stated multiple of a shifted eigenvector, on exact coordinates."""
    A = Aq.numeric(q)
    qp = complex(q ** param)
    x = minor(name, A, INF, qp) if mode == "sigma" else minor(name, A, qp, INF)
    op = pi_matrix(x, N)
    v = eigvec(lam, param, q, N).coeffs
    lhs = op.matrix @ v
    rhs = _minor_expectation(name, mode, lam, param, q, N)
    rows = N - op.bandwidth - 1
    res = float(np.abs(lhs[:rows] - rhs[:rows]).max())
    tag = f"{name}[inf,sigma]" if mode == "sigma" else f"{name}[tau,inf]"
    return VerificationReport(f"repr.action.{tag}", {"lam": lam, mode: param, "q": q, "N": N, "tol": tol},
                              "float", res, res <= tol, f"max coordinate deviation over {rows} exact coordinates")


def _b_expectation(l: int, n: int, mode: str, lam: float, p: float, q: float, N: int) -> np.ndarray:
    """Eigenvector action of b^l_{+-n,0}(inf,sigma) or D.b^l_{0,+-n}(tau,inf)."""
    q2 = q * q
    k = abs(n)
    C = c_const(Aq.numeric(q), l, k, q ** p)
    if n >= 0:
        pol = big_qjacobi(l - k, k, k, q ** (2 * p), 1.0, q2)
        pref = q ** (k * p) if mode == "sigma" else q ** (k * (p + 1))
        return C * pref * pol(lam) * eigvec_or_zero(lam * q ** (2 * k), p, q, N)
    pol = big_qjacobi(l - k, k, k, q ** (2 * p), 1.0, q2)
    pref = q ** (k * (p - 1)) if mode == "sigma" else q ** (k * (p - 2))
    poch = qpoch_multi([-lam, lam * q ** (-2 * p)], 1 / q2, k)
    return C * (-1) ** k * pref * poch * pol(lam * q ** (-2 * k)) * eigvec_or_zero(lam * q ** (-2 * k), p, q, N)


def b_element(l: int, n: int, mode: str, p: float, q: float) -> NCElement:
    """b^l_{n,0}(inf,sigma) (mode 'sigma') or D.b^l_{0,n}(tau,inf) (mode 'tau')."""
    A = Aq.numeric(q)
    qp = complex(q ** p)
    if mode == "sigma":
        return build_b(A, l, n, 0, INF, qp)
    return build_b(A, l, 0, n, qp, INF).D()


def action_check_b(l: int, n: int, mode: str, lam: float, param: float, q: float = 0.5, N: int = 40,
                   tol: float = 1e-10) -> VerificationReport:
    x = b_element(l, n, mode, param, q)
    op = pi_matrix(x, N)
    v = eigvec(lam, param, q, N).coeffs
    lhs = op.matrix @ v
    rhs = _b_expectation(l, n, mode, lam, param, q, N)
    rows = N - op.bandwidth - 1
    err = np.abs(lhs[:rows] - rhs[:rows])
    scale = max(1.0, float(np.abs(rhs[:rows]).max()))
    res = float(err.max()) / scale
    tag = f"b[{n},0](inf,sigma)" if mode == "sigma" else f"Db[0,{n}](tau,inf)"
    return VerificationReport(f"repr.action.{tag}", {"l": l, "n": n, "lam": lam, mode: param, "q": q, "N": N, "tol": tol},
                              "float", res, res <= tol, "relative to max(1, |expected|)")


# ---------------------------------------------------------------- tensor square
def w_vector(m: int, p: int, tau: float, sigma: float, q: float, N: int) -> np.ndarray:
    """The normalised vector w_m in the tensor square (flattened, index i*N + j)."""
    q2 = q * q
    vt = eigvec(-(q ** (2 * m)), tau, q, N).coeffs
    vs = eigvec(-(q ** (2 * m + 2 * p)), sigma, q, N).coeffs
    den = math.sqrt(qpoch_multi([q2, -(q ** (2 - 2 * tau))], q2, m)
                    * qpoch_multi([q2, -(q ** (2 - 2 * sigma))], q2, m + p)
                    * qpoch_inf(-(q ** (2 * tau)), q2) * qpoch_inf(-(q ** (2 * sigma)), q2))
    return q ** (2 * m + p) * np.kron(vt, vs) / den


def tensor_coefficients(m: int, p: int, tau: float, sigma: float, q: float):
    """Printed a_m and b_m of the three-term action on w_m."""
    a = math.sqrt((1 - q ** (2 * m + 2)) * (1 - q ** (2 * m + 2 * p + 2))
                  * (1 + q ** (2 - 2 * tau + 2 * m)) * (1 + q ** (2 + 2 * p - 2 * sigma + 2 * m)))
    b = q ** (2 * m) * (q ** (1 + 2 * p - sigma) * (q ** tau - q ** (-tau))
                        + q ** (1 - tau) * (q ** sigma - q ** (-sigma))
                        + q ** (2 * m + 2 * p + 1 - tau - sigma) * (1 + q * q))
    return a, b


def _exact_mask(N: int, bw: int) -> np.ndarray:
    idx = np.arange(N)
    ok = idx < N - bw
    return np.logical_and.outer(ok, ok).ravel()


def tensor_rho_action(m: int, p: int, tau: float = 1.0, sigma: float = 1.0, q: float = 0.5, N: int = 40,
                      tol: float = 1e-9) -> VerificationReport:
    """Recover a_m, b_m (and a_{m-1}) from 2 (pi x pi) Delta(rho[tau,sigma]) w_m."""
    A = Aq.numeric(q)
    T = rho(A, complex(q ** tau), complex(q ** sigma)).delta()
    op = pi_tensor(T, N)
    mask = _exact_mask(N, op.bandwidth + 1)
    w = {k: w_vector(k, p, tau, sigma, q, N) for k in range(max(0, m - 1), m + 2)}
    y = 2 * (op.matrix @ w[m])
    coeff = {k: np.vdot(w[k][mask], y[mask]) for k in w}
    a, b = tensor_coefficients(m, p, tau, sigma, q)
    errs = [abs(coeff[m + 1] - a), abs(coeff[m] - b)]
    expected = a * w[m + 1] + b * w[m]
    if m >= 1:
        a_prev, _ = tensor_coefficients(m - 1, p, tau, sigma, q)
        errs.append(abs(coeff[m - 1] - a_prev))
        expected = expected + a_prev * w[m - 1]
    outside = float(np.abs((y - expected)[mask]).max())
    res = max(max(errs), outside)
    return VerificationReport("repr.tensor", {"m": m, "p": p, "tau": tau, "sigma": sigma, "q": q, "N": N, "tol": tol},
                              "float", float(res), res <= tol,
                              f"a_m={coeff[m + 1].real:.12g} b_m={coeff[m].real:.12g}; "
                              f"invariance defect {outside:.2e}")


def w_norm_check(m: int, p: int, tau: float = 1.0, sigma: float = 1.0, q: float = 0.5, N: int = 400,
                 tol: float = 1e-10) -> VerificationReport:
    w = w_vector(m, p, tau, sigma, q, min(N, 120))
    res = abs(float(np.linalg.norm(w)) - 1.0)
    return VerificationReport("repr.w-norm", {"m": m, "p": p, "tau": tau, "sigma": sigma, "q": q}, "float",
                              res, res <= tol, "")


def abstract_addition_check(l: int, tau: float = 1.0, sigma: float = 1.0, q: float = 0.5, N: int = 40,
                            tol: float = 1e-7) -> VerificationReport:
    """Operator form of Delta(b^l_00(tau,sigma)) = sum_n D.b^l_{0,n}(tau,inf) (x) b^l_{n,0}(inf,sigma).

    The left side is p_l(Delta(rho[tau,sigma])) with Delta(rho) computed once and
    powered in the tensor algebra; the right side is assembled from the
    one-sided elements.  Both are represented on the truncated tensor square,
    where every entry is exact because each monomial is compressed separately.
    """
    from .polyfam import pjacobi

    A = Aq.numeric(q)
    qt, qs = complex(q ** tau), complex(q ** sigma)
    q2 = q * q
    pol = pjacobi(l, 0, 0, q ** tau, q ** sigma, q2, sqrt_q=q)
    const = q ** (-l) / qpoch(q ** (2 * l + 2), q2, l)
    D_rho = rho(A, qt, qs).delta()
    lhs = TensorElement(A, {})
    power = TensorElement(A, {((0, 0, 0), (0, 0, 0)): A.one})
    for k, c in enumerate(pol.coeffs):
        if k:
            power = power * D_rho
        lhs = lhs + power * complex(c * const)
    rhs = TensorElement(A, {})
    for n in range(-l, l + 1):
        left = build_b(A, l, 0, n, qt, INF).D()
        right = build_b(A, l, n, 0, INF, qs)
        rhs = rhs + TensorElement.tensor(left, right)
    alg = max((abs(c) for c in (lhs - rhs).terms.values()), default=0.0)
    L = pi_tensor(lhs, N)
    R = pi_tensor(rhs, N)
    diff = (L.matrix - R.matrix)
    res = float(np.abs(diff.data).max()) if diff.nnz else 0.0
    scale = max(1.0, float(np.abs(L.matrix.data).max()) if L.matrix.nnz else 1.0)
    return VerificationReport("repr.abstract-addition", {"l": l, "tau": tau, "sigma": sigma, "q": q, "N": N, "tol": tol},
                              "float", res, res <= tol,
                              f"columns compared: {N * N} (all exact); largest entry {scale:.3g}; "
                              f"algebraic coefficient residual {alg:.2e}")


def star_hom_check(x: NCElement, y: NCElement, N: int = 30, q: float | None = None,
                   sigma: float | None = None, tau: float | None = None) -> float:
    """max deviation of pi(xy) - pi(x)pi(y) and pi(x*) - pi(x)^dagger on exact columns."""
    X = pi_matrix(x, N, q, sigma, tau)
    Y = pi_matrix(y, N, q, sigma, tau)
    XY = pi_matrix(x * y, N, q, sigma, tau)
    prod = X @ Y
    k = prod.exact_cols
    d1 = np.abs((XY.entries - prod.entries)[:k, :k]).max() if k > 0 else 0.0
    d2 = np.abs(pi_matrix(x.star(), N, q, sigma, tau).entries - X.adjoint().entries).max()
    return float(max(d1, d2))



REPR_SUITES = ("spectrum", "norms", "actions", "tensor", "abstract")


def run_repr_suite(suites=REPR_SUITES, q: float = 0.5, sigma: float = 1.0, tau: float = 1.0,
                   N: int = 40) -> list[VerificationReport]:
    """The operator-level checks with their default sweeps; ``sigma`` doubles as the one-sided parameter."""
    out: list[VerificationReport] = []
    for name in suites:
        if name not in REPR_SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(REPR_SUITES)}")
        if name == "spectrum":
            out.append(spectrum_check(q, sigma, N))
        elif name == "norms":
            for qq in sorted({q, 0.75}):
                for sg in sorted({0.5, 1.0, 2.0, sigma}):
                    out.append(norm_check(qq, sg))
        elif name == "actions":
            lams = [lam for kind, n, lam in ladder(sigma, q, 3)]
            for mode in ("sigma", "tau"):
                for minor_name in ("alpha", "beta", "gamma", "delta"):
                    for lam in lams:
                        out.append(action_check_minor(minor_name, mode, lam, sigma, q, N))
            for mode in ("sigma", "tau"):
                for n in (-1, 1):
                    for lam in lams:
                        out.append(action_check_b(2, n, mode, lam, sigma, q, N))
        elif name == "tensor":
            for m in range(7):
                for p in range(3):
                    out.append(tensor_rho_action(m, p, tau, sigma, q, N))
        else:
            for l in range(3):
                out.append(abstract_addition_check(l, tau, sigma, q, N))
    return out

__all__ = [
    "REPR_SUITES", "run_repr_suite",
    "TruncatedOperator", "EigVec", "pi_matrix", "pi_tensor", "eigvec", "eigvec_or_zero", "ladder_position",
    "prop_norm", "ladder", "spectrum_check", "norm_check", "orthogonality_check", "action_check_minor",
    "action_check_b", "b_element", "w_vector", "tensor_coefficients", "tensor_rho_action", "w_norm_check",
    "abstract_addition_check", "star_hom_check",
]
