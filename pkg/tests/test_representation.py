import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaddform.errors import SpectrumError
from qaddform.ncalg import INF, Aq, TensorElement, rho
from qaddform.representation import (REPR_SUITES, abstract_addition_check, action_check_b, action_check_minor,
                                     eigvec, ladder, ladder_position, norm_check, orthogonality_check, pi_matrix,
                                     pi_tensor, run_repr_suite, spectrum_check, star_hom_check, tensor_rho_action,
                                     w_norm_check)

A = Aq.symbolic_algebra()
a, b, g, d = (A.gen(x) for x in "abgd")
Q = 0.5


def test_generators_act_as_weighted_shifts():
    N = 6
    alpha = pi_matrix(a, N, Q).entries
    delta = pi_matrix(d, N, Q).entries
    gamma = pi_matrix(g, N, Q).entries
    assert alpha[0, 1] == pytest.approx(np.sqrt(1 - Q ** 2))
    assert delta[1, 0] == pytest.approx(np.sqrt(1 - Q ** 2))
    assert np.allclose(np.diag(gamma), [Q ** n for n in range(N)])
    assert np.allclose(pi_matrix(b, N, Q).entries, -Q * gamma)


def test_star_representation_on_exact_columns():
    for x, y in [(a, d), (b, g), (a * b + g, d * d), (rho(A, A.t, A.s), a)]:
        assert star_hom_check(x, y, 25, Q, 1.0, 1.0) < 1e-13


def test_sphere_relation_holds_in_representation():
    # alpha* alpha + gamma* gamma = 1
    x = a.star() * a + g.star() * g
    M = pi_matrix(x, 10, Q).entries
    assert np.allclose(M, np.eye(10))


def test_tensor_index_convention():
    N = 4
    T = pi_tensor(TensorElement.tensor(g, A.scalar(1)), N, Q).entries
    assert np.allclose(np.diag(T), [Q ** i for i in range(N) for _ in range(N)])


def test_spectrum_check_default():
    rep = spectrum_check(0.5, 1.0, 40, 10)
    assert rep.passed, rep


def test_ladder_position():
    assert ladder_position(-(0.5 ** 6), 1.0, 0.5)[:2] == ("neg", 3)
    assert ladder_position(0.5 ** 4, 1.0, 0.5)[:2] == ("pos", 1)
    with pytest.raises(SpectrumError):
        eigvec(0.3, 1.0, 0.5, 20)


@pytest.mark.parametrize("q", [0.5, 0.75])
@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0])
def test_norms(q, sigma):
    assert norm_check(q, sigma).passed


def test_orthogonality():
    assert orthogonality_check(0.5, 1.0).passed


def test_eigenvector_equation():
    N, sigma = 60, 1.0
    M = pi_matrix(rho(Aq.numeric(Q), INF, complex(Q ** sigma)), N).matrix
    for _, _, lam in ladder(sigma, Q, 4):
        v = eigvec(lam, sigma, Q, N).coeffs
        r = M @ v - lam * v
        assert np.abs(r[: N - 2]).max() < 1e-12


@pytest.mark.parametrize("name", ["alpha", "beta", "gamma", "delta"])
@pytest.mark.parametrize("mode", ["sigma", "tau"])
def test_minor_actions(name, mode):
    for _, _, lam in ladder(1.0, Q, 2):
        rep = action_check_minor(name, mode, lam, 1.0, Q, 40)
        assert rep.passed, rep


@pytest.mark.parametrize("mode", ["sigma", "tau"])
@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_b_actions(mode, n):
    for _, _, lam in ladder(1.0, Q, 2):
        assert action_check_b(2, n, mode, lam, 1.0, Q, 40).passed


@settings(max_examples=10)
@given(st.integers(0, 6), st.integers(0, 2))
def test_tensor_recurrence(m, p):
    assert tensor_rho_action(m, p, 1.0, 1.0, Q, 40).passed


def test_tensor_recurrence_other_parameters():
    assert tensor_rho_action(2, 1, 0.5, 1.5, 0.6, 40).passed


def test_w_vectors_are_unit():
    for m in range(4):
        assert w_norm_check(m, 1).passed


@pytest.mark.parametrize("l", [0, 1, 2])
def test_abstract_addition(l):
    rep = abstract_addition_check(l, 1.0, 1.0, Q, 40)
    assert rep.passed, rep


def test_abstract_addition_other_parameters():
    assert abstract_addition_check(2, 0.5, 1.5, 0.6, 30).passed


def test_suite_runner_rejects_unknown():
    with pytest.raises(ValueError):
        run_repr_suite(["nope"])
    assert set(REPR_SUITES) == {"spectrum", "norms", "actions", "tensor", "abstract"}
