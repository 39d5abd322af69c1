import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaddform.coeffring import LaurentCoeff
from qaddform.errors import ParseError, UnsupportedIndexError, UnsupportedModeError
from qaddform.ncalg import INF, Aq, TensorElement, build_b, minor, rho
from qaddform.ncalg.identities import IDENTITIES, identity_check, run_suite
from qaddform.ncalg.parser import parse_nc, print_nc

A = Aq.symbolic_algebra()
a, b, g, d = (A.gen(x) for x in "abgd")
q = A.q

monos = st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2))
coefs = st.sampled_from([LaurentCoeff.const(1), LaurentCoeff.const(-2), LaurentCoeff.v(), LaurentCoeff.s(),
                         LaurentCoeff.i() * LaurentCoeff.t(), LaurentCoeff.q() + LaurentCoeff.const(3)])
elements = st.dictionaries(monos, coefs, min_size=1, max_size=3).map(A.element)


def test_defining_relations():
    assert a * b == (b * a).scale(q)
    assert a * g == (g * a).scale(q)
    assert b * d == (d * b).scale(q)
    assert g * d == (d * g).scale(q)
    assert b * g == g * b
    assert a * d - (b * g).scale(q) == A.scalar(1)
    assert d * a - (b * g).scale(A.qpow(-1)) == A.scalar(1)


def test_star_on_generators():
    assert a.star() == d
    assert b.star() == g.scale(-q)
    assert g.star() == b.scale(-A.qpow(-1))


@settings(max_examples=30)
@given(elements, elements, elements)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=30)
@given(elements, elements)
def test_star_is_antimultiplicative_involution(x, y):
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x


@settings(max_examples=20)
@given(elements, elements)
def test_comultiplication_is_homomorphism(x, y):
    assert (x * y).delta() == x.delta() * y.delta()


@settings(max_examples=20)
@given(elements, elements)
def test_comultiplication_commutes_with_star(x, y):
    assert x.delta().star() == x.star().delta()


@settings(max_examples=30)
@given(elements, elements)
def test_D_is_automorphism(x, y):
    assert (x * y).D() == x.D() * y.D()


def test_unitary_coproduct_of_generators():
    assert a.delta() == TensorElement.tensor(a, a) + TensorElement.tensor(b, g)
    assert d.delta() == TensorElement.tensor(g, b) + TensorElement.tensor(d, d)


def test_rho_is_self_adjoint():
    x = rho(A, A.t, A.s)
    assert x.star() == x
    assert rho(A, INF, A.s).star() == rho(A, INF, A.s)
    assert rho(A, INF, INF) == (b * g).scale(A.qpow(-1))


def test_identity_suite_all_pass():
    reports = run_suite()
    assert len(reports) == len(IDENTITIES) == 22
    assert all(r.passed and r.residual == 0 for r in reports), [r.id for r in reports if not r.passed]
    assert [r.id for r in reports] == sorted(r.id for r in reports)


def test_identity_suite_subset():
    reports = run_suite(["star.alpha", "comm.beta-rho"])
    assert [r.id for r in reports] == ["comm.beta-rho", "star.alpha"]


def test_identity_check_reports_residual():
    rep = identity_check("x", a * b, b * a)
    assert not rep.passed and rep.residual == 1


def test_minor_names():
    with pytest.raises((KeyError, ValueError)):
        minor("epsilon", A, A.t, A.s)


def test_build_b_modes():
    with pytest.raises(UnsupportedModeError):
        build_b(A, 1, 0, 0, A.t, A.s)
    N = Aq.numeric(0.5)
    with pytest.raises(UnsupportedIndexError):
        build_b(N, 2, 1, 1, 0.5, 0.25)
    x = build_b(N, 2, 1, 0, INF, 0.5)
    assert not x.is_zero()


# ---------------------------------------------------------------- parser
@pytest.mark.parametrize("text", ["a*b", "d*a", "rho[tau,sigma]", "alpha[tau+1,sigma-1]*delta[tau,sigma]",
                                  "star(b) + q^(1/2)*g", "D(a*b) - 3*v*s^-2*t*g^2", "gamma[inf,sigma]",
                                  "(a + b)^3", "i*a/q"])
def test_parse_print_round_trip(text):
    x = parse_nc(text)
    assert parse_nc(print_nc(x)) == x


def test_parse_tensor_round_trip():
    x = parse_nc("delta(a*b) + tensor(g, d)")
    assert parse_nc(print_nc(x)) == x
    assert x == (a * b).delta() + TensorElement.tensor(g, d)


def test_parse_normalises():
    assert parse_nc("d*a") == parse_nc("1 + q^(-1)*b*g")
    assert parse_nc("rho[inf,inf]") == (b * g).scale(A.qpow(-1))


@pytest.mark.parametrize("text,pos", [("a*", 2), ("rho[tau,", 8), ("foo", 0), ("a + (b", 6), ("", 0),
                                      ("a^(1/2)", 1), ("a/(1+q)", 1), ("rho[sigma,tau]", 4)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_nc(text)
    assert err.value.position is not None
    assert abs(err.value.position - pos) <= 2


def test_parse_rejects_tensor_mix():
    with pytest.raises(ParseError):
        parse_nc("tensor(a,b) + a")


def test_parser_needs_exact_algebra():
    with pytest.raises(ValueError):
        parse_nc("a", Aq.numeric(0.5))
