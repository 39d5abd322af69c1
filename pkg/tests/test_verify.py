import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaddform.coeffring import SqrtField
from qaddform.polyfam import big_qjacobi_value, pjacobi, qlag_norm, qlaguerre
from qaddform.qseries import qpoch
from qaddform.verify import (GRID_Q, GRID_S, GRID_T, Thm41Params, cor51_check, dconst, default_grid, golub_welsch,
                             jacobi_matrix, packaged_grid, parity_residual, read_grid, reflection_residual,
                             run_thm41_grid, switch_points_residual, symmetry_check, thm41_exact, thm41_pointwise,
                             write_grid)

F = Fraction


def test_l_zero_is_trivial():
    rep = thm41_exact(Thm41Params(0, 3, 1, F(1, 2), F(1), F(1)))
    assert rep.passed and rep.residual == 0


@pytest.mark.parametrize("l,m,p", [(1, 1, 0), (2, 3, 1), (3, 2, 2), (4, 3, 3), (4, 0, 2)])
@pytest.mark.parametrize("q,s,t", [(F(1, 2), F(2), F(3, 2)), (F(9, 10), F(1, 3), F(1)), (F(1, 4), F(5, 2), F(2, 7))])
def test_exact_addition_formula(l, m, p, q, s, t):
    rep = thm41_exact(Thm41Params(l, m, p, q, s, t))
    assert rep.passed and rep.residual == 0, rep.notes


def test_second_base_as_printed_fails():
    # base q^2 in the last factor of the second sum leaves a visible residual
    rep = thm41_exact(Thm41Params(2, 2, 1, F(1, 2), F(2), F(3, 2)))
    assert rep.passed
    alt = float(rep.notes.split("variant residual ")[1])
    assert alt > 1e-3


@settings(max_examples=15)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.sampled_from(GRID_Q + (F(1, 3),)),
       st.sampled_from(GRID_S + (F(3, 5),)), st.sampled_from(GRID_T + (F(4),)))
def test_exact_addition_formula_property(l, m, p, q, s, t):
    assert thm41_exact(Thm41Params(l, m, p, q, s, t), printed_variant=False).passed


def test_pointwise_addition_formula():
    rep = thm41_pointwise(Thm41Params(3, 2, 1, 0.5, 1.3, 0.8))
    assert rep.passed, rep


def test_dconst_small_cases():
    q = F(1, 2)
    K = SqrtField(q)
    # D^{l,l} = [l choose l]_q (q^(l+1); q)_l
    assert dconst(2, 2, K(2), K(3), K.q, K.v) == qpoch(K.q ** 3, K.q, 2)
    with pytest.raises(ValueError):
        dconst(3, 2, 1.0, 1.0, 0.5)


def test_dconst_float_matches_exact():
    K = SqrtField(F(2, 3))
    exact = dconst(1, 3, K(F(2)), K(F(3, 2)), K.q, K.v)
    assert float(exact) == pytest.approx(dconst(1, 3, 2.0, 1.5, 2 / 3), rel=1e-13)


def test_golub_welsch_integrates_orthogonality():
    q, s, t, p = 0.5, 1.5, 0.7, 1
    x, w = golub_welsch(12, p, s, t, q)
    assert w.sum() == pytest.approx(1.0)
    for n in range(5):
        ln = qlaguerre(n, p, s, t, q)
        for k in range(n + 1):
            lk = qlaguerre(k, p, s, t, q)
            val = float(np.dot([ln(a) * lk(a) for a in x], w))
            ref = qlag_norm(n, p, s, t, q) if k == n else 0.0
            assert val == pytest.approx(ref, abs=1e-12)


def test_jacobi_matrix_is_symmetric_tridiagonal_of_recurrence():
    diag, off = jacobi_matrix(5, 0, 1.0, 1.0, 0.5)
    assert diag.shape == (5,) and off.shape == (4,)
    assert np.all(off > 0)


def test_golub_welsch_single_node():
    x, w = golub_welsch(1, 0, 1.0, 1.0, 0.5)
    assert w.tolist() == [1.0]
    with pytest.raises(ValueError):
        golub_welsch(0, 0, 1.0, 1.0, 0.5)


@pytest.mark.parametrize("variant", ["plus", "minus"])
def test_product_formula_grid(variant):
    for l in range(4):
        for n in range(l + 1):
            for m in range(4):
                for p in range(3):
                    rep = cor51_check(l, m, n, p, variant=variant)
                    assert rep.passed, rep


def test_product_formula_other_parameters():
    for args in [(4, 2, 2, 1, 1.5, 0.7, 0.3), (3, 1, 3, 2, 2.0, 1.0, 0.8), (2, 4, 1, 0, 1 / 3, 1.5, 0.95)]:
        assert cor51_check(*args).passed
        assert cor51_check(*args, variant="minus").passed


def test_product_formula_target_is_big_q_jacobi_product():
    rep = cor51_check(2, 1, 1, 1)
    target = big_qjacobi_value(1, 1, 1, -0.5, 1.0, 1.0, 0.5) * big_qjacobi_value(1, 1, 1, -0.25, 1.0, 1.0, 0.5)
    assert float(rep.notes.split()[1].rstrip(";")) == pytest.approx(target, rel=1e-11)


def test_product_formula_rejects_bad_input():
    with pytest.raises(ValueError):
        cor51_check(1, 1, 2, 0)
    with pytest.raises(ValueError):
        cor51_check(1, 1, 1, 0, variant="sideways")


@pytest.mark.parametrize("n,l,m", [(0, 2, 1), (1, 3, 2), (2, 4, 0), (3, 3, 3)])
def test_symmetries(n, l, m):
    assert symmetry_check(n, l, m).passed


def test_reflection_residual_exact_zero():
    q = F(1, 3)
    assert all(c == 0 for c in reflection_residual(3, 1, 2, F(2), F(5, 7), q))


def test_switch_points_and_parity():
    K = SqrtField(F(1, 2))
    assert switch_points_residual(1, 3, 2, K(F(3)), K.q) == 0
    assert all(c == 0 for c in parity_residual(3, K(2), K(3), K.q, K.v))


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) == 3 * 3 * 2 * 5 * 4 * 4
    assert len({(P.q, P.s, P.t) for P in grid}) == 18
    assert packaged_grid() == grid


def test_grid_round_trip(tmp_path):
    grid = default_grid(1, 1, 1)[:10]
    path = tmp_path / "g.csv"
    write_grid(path, grid)
    assert read_grid(path) == grid


def test_grid_runner_keeps_order():
    grid = default_grid(1, 1, 0)[:12]
    reps = run_thm41_grid(grid, workers=2)
    assert [r.params for r in reps] == [P.as_dict() for P in grid]
    assert all(r.passed for r in reps)
