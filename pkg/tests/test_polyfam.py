import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import binom, eval_jacobi

from qaddform.coeffring import SqrtField
from qaddform.errors import DomainError
from qaddform.polyfam import (QLaguerreBasis, askey_wilson, big_qjacobi, big_qjacobi_value, chebyshev_T,
                              chebyshev_value, classical_jacobi_R, pjacobi, qlag_norm, qlag_recurrence,
                              qlaguerre, qlaguerre_values, to_qlaguerre_basis)
from qaddform.qseries import phi, qpoch_multi
from qaddform.unipoly import UniPoly


def aw_from_series(n, a, b, c, d, q, theta):
    """Askey-Wilson polynomial straight from its 4phi3 definition (complex arithmetic)."""
    z = cmath.exp(1j * theta)
    pref = a ** (-n) * qpoch_multi([a * b, a * c, a * d], q, n)
    val = phi([q ** -n, a * b * c * d * q ** (n - 1), a * z, a / z], [a * b, a * c, a * d], q, q)
    return (pref * val).real


@pytest.mark.parametrize("n", range(6))
def test_askey_wilson_matches_series(n):
    a, b, c, d, q = 0.4, -0.3, 0.55, 0.2, 0.6
    poly = askey_wilson(n, a, b, c, d, q)
    # a^-n amplifies rounding on both sides, hence the loose tolerance
    for theta in (0.1, 0.9, 2.3):
        assert poly(math.cos(theta)) == pytest.approx(aw_from_series(n, a, b, c, d, q, theta), rel=1e-8, abs=1e-12)


@given(st.integers(0, 5), st.permutations([Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5), Fraction(1, 7)]))
def test_askey_wilson_symmetric_in_parameters(n, perm):
    q = Fraction(1, 2)
    ref = askey_wilson(n, Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5), Fraction(1, 7), q)
    assert askey_wilson(n, *perm, q) == ref


def test_askey_wilson_monic_leading_coefficient():
    # leading coefficient 2^n (abcd q^(n-1); q)_n
    n, q = 4, Fraction(1, 3)
    a, b, c, d = Fraction(1, 2), Fraction(1, 5), Fraction(-1, 3), Fraction(2, 7)
    lead = askey_wilson(n, a, b, c, d, q).leading()
    from qaddform.qseries import qpoch
    assert lead == 2 ** n * qpoch(a * b * c * d * q ** (n - 1), q, n)


def test_askey_wilson_degree_checks():
    with pytest.raises(DomainError):
        askey_wilson(-1, 1, 1, 1, 1, 0.5)
    with pytest.raises(DomainError):
        askey_wilson(2, 0, 1, 1, 1, 0.5)


@given(st.integers(0, 8), st.floats(-1, 1))
def test_chebyshev(n, x):
    assert chebyshev_T(n)(x) == pytest.approx(math.cos(n * math.acos(x)), abs=1e-12)
    assert chebyshev_value(n, x) == pytest.approx(chebyshev_T(n)(x), abs=1e-12)


def test_chebyshev_text():
    assert str(chebyshev_T(2)) == "2x^2 - 1"
    assert str(chebyshev_T(0)) == "1"


@pytest.mark.parametrize("n,alpha,beta", [(0, 0, 0), (3, 0, 0), (4, 2, 2), (3, 1, 0), (5, 0.5, -0.5)])
def test_classical_jacobi_against_scipy(n, alpha, beta):
    R = classical_jacobi_R(n, alpha, beta)
    for x in np.linspace(-1, 1, 7):
        ref = eval_jacobi(n, alpha, beta, x) / binom(n + alpha, n)
        assert R(x) == pytest.approx(ref, rel=1e-12, abs=1e-12)
    assert R(1) == pytest.approx(1)


def test_classical_jacobi_exact():
    assert classical_jacobi_R(2) == UniPoly([Fraction(-1, 2), 0, Fraction(3, 2)])


@given(st.integers(0, 6), st.sampled_from([0, 1, 2]), st.sampled_from([Fraction(1, 2), Fraction(2, 3)]),
       st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3)]), st.sampled_from([Fraction(1), Fraction(3, 2)]))
def test_qlaguerre_three_term_recurrence_exact(n, alpha, q, s, t):
    K = SqrtField(q)
    S, T = K(s), K(t)
    x = UniPoly.x(K.one)
    ln = qlaguerre(n, alpha, S, T, K.q, sqrt_q=K.v)
    ln1 = qlaguerre(n + 1, alpha, S, T, K.q, sqrt_q=K.v)
    rec = qlag_recurrence(n, alpha, S, T, K.q, K.v)
    rhs = ln1 + ln * rec.b
    if n:
        rhs = rhs + qlaguerre(n - 1, alpha, S, T, K.q, sqrt_q=K.v) * rec.c
    assert x * ln * 2 == rhs


def test_qlag_norm_is_product_of_recurrence_coefficients():
    q, s, t, alpha = Fraction(2, 3), Fraction(2), Fraction(3, 2), 2
    K = SqrtField(q)
    prod = K.one
    for k in range(1, 7):
        prod = prod * qlag_recurrence(k, alpha, K(s), K(t), K.q, K.v).c
        assert prod == qlag_norm(k, alpha, K(s), K(t), K.q)


def test_qlaguerre_is_qjacobi_with_fourth_parameter_zero():
    # l_n is the d -> 0 limit; compare with a tiny beta-parameter proxy through askey_wilson
    n, q, s, t = 3, 0.5, 1.3, 0.8
    h = math.sqrt(q)
    direct = askey_wilson(n, h * s / t, h * t / s, -h / (s * t), 0.0, q)
    assert qlaguerre(n, 0, s, t, q) == direct


def test_qlaguerre_values_match_polynomials():
    q, s, t, alpha = 0.5, 1.5, 0.7, 1
    xs = np.array([-0.8, 0.1, 0.9, 1.3])
    vals = qlaguerre_values(5, alpha, s, t, q, xs)
    for n in range(6):
        poly = qlaguerre(n, alpha, s, t, q)
        assert np.allclose(vals[n], [poly(x) for x in xs], rtol=1e-10, atol=1e-10)


def test_qlaguerre_values_stable_at_high_degree():
    # exact rational evaluation as the oracle; the expanded float polynomial loses digits here
    q, s, t, alpha, n = Fraction(1, 2), Fraction(1), Fraction(1), 2, 12
    K = SqrtField(q)
    x = Fraction(3, 10)
    exact = float(qlaguerre(n, alpha, K(s), K(t), K.q, sqrt_q=K.v)(K(x)))
    approx = qlaguerre_values(n, alpha, 1.0, 1.0, 0.5, [0.3])[n][0]
    assert approx == pytest.approx(exact, rel=1e-11)


@given(st.integers(0, 5), st.integers(0, 2), st.integers(0, 2))
def test_big_qjacobi_polynomial_matches_series(n, alpha, beta):
    q, c, d = Fraction(1, 2), Fraction(2), Fraction(3, 4)
    poly = big_qjacobi(n, alpha, beta, c, d, q)
    for x in (Fraction(1, 4), Fraction(-1, 3), Fraction(5, 2)):
        assert poly(x) == big_qjacobi_value(n, alpha, beta, x, c, d, q)


def test_big_qjacobi_value_at_special_point():
    # at x = c q^(-alpha-1) the third upper parameter is 1 and only the k = 0 term survives
    q, c, d = Fraction(1, 3), Fraction(2), Fraction(1)
    assert big_qjacobi_value(4, 1, 1, c / q ** 2, c, d, q) == 1


def test_big_qjacobi_tends_to_jacobi():
    # P_n^(a,b)(x; 1, 1; q) -> R_n^(a,b)(x) as q -> 1, from below
    n, x = 3, 0.3
    target = classical_jacobi_R(n, 1.0, 1.0)(x)
    devs = [abs(big_qjacobi_value(n, 1, 1, x, 1.0, 1.0, q) - target) for q in (0.9, 0.99, 0.999)]
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < 1e-2


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=6))
def test_qlaguerre_basis_round_trip(coeffs):
    K = SqrtField(Fraction(1, 2))
    poly = UniPoly([K(c) for c in coeffs])
    basis = QLaguerreBasis(1, K(Fraction(2)), K(Fraction(3, 2)), K.q, K.v)
    e = basis.to_basis(poly)
    assert basis.synthesize(e) == poly
    assert to_qlaguerre_basis(poly, 1, K(Fraction(2)), K(Fraction(3, 2)), K.q, K.v) == e


def test_pjacobi_exact_and_float_agree():
    K = SqrtField(Fraction(1, 2))
    exact = pjacobi(3, 0, 1, K(Fraction(2)), K(Fraction(3, 2)), K.q, sqrt_q=K.v)
    flt = pjacobi(3, 0, 1, 2.0, 1.5, 0.5)
    for x in (-0.7, 0.2, 0.95):
        assert float(exact(K(Fraction(x).limit_denominator(100)))) == pytest.approx(
            flt(float(Fraction(x).limit_denominator(100))), rel=1e-10)
