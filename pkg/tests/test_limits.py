import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_chebyt, eval_jacobi, eval_legendre

from qaddform.limits import (TRACKED, LimitScanConfig, classical_addition_check, classical_addition_sides,
                             classical_addition_symbolic, classical_product_check, classical_suite, dconst_limit,
                             limit_point, qlim_scan, scan_csv)

unit = st.floats(-1, 1)


def legendre_addition_oracle(l, x, y, t):
    """Right-hand side from scipy's Jacobi and Chebyshev evaluations."""
    w = math.sqrt((1 - x * x) * (1 - y * y))
    total = eval_legendre(l, x) * eval_legendre(l, y)
    for n in range(1, l + 1):
        norm = eval_jacobi(l - n, n, n, 1.0)
        R = lambda z: eval_jacobi(l - n, n, n, z) / norm
        total += 2 * math.factorial(l + n) / (math.factorial(l - n) * math.factorial(n) ** 2) * 4.0 ** -n \
            * w ** n * R(x) * R(y) * eval_chebyt(n, t)
    return total


def test_trivial_cases():
    assert classical_addition_sides(0, 0.2, 0.3, 0.4) == (1.0, 1.0)
    x, y, t = 0.3, -0.6, 0.25
    lhs, rhs = classical_addition_sides(1, x, y, t)
    assert lhs == pytest.approx(x * y + t * math.sqrt((1 - x * x) * (1 - y * y)))
    assert rhs == pytest.approx(lhs)


def test_addition_point_from_examples():
    rep = classical_addition_check(4, 0.3, -0.6, 0.25)
    assert rep.passed and rep.residual <= 1e-12
    assert legendre_addition_oracle(4, 0.3, -0.6, 0.25) == pytest.approx(eval_legendre(4, 0.3 * -0.6 + 0.25 * math.sqrt(0.91 * 0.64)))


@settings(max_examples=60)
@given(st.integers(0, 6), unit, unit, unit)
def test_addition_property(l, x, y, t):
    rep = classical_addition_check(l, x, y, t)
    assert rep.passed
    assert rep.notes  # lhs recorded
    lhs, _ = classical_addition_sides(l, x, y, t)
    assert lhs == pytest.approx(legendre_addition_oracle(l, x, y, t), abs=1e-12)


@pytest.mark.parametrize("l", range(7))
def test_addition_symbolic(l):
    rep = classical_addition_symbolic(l)
    assert rep.passed and rep.residual == 0


def test_addition_domain():
    with pytest.raises(ValueError):
        classical_addition_check(2, 1.5, 0.0, 0.0)


@settings(max_examples=60)
@given(st.integers(0, 6), st.data(), st.floats(-0.999, 0.999), st.floats(-0.999, 0.999))
def test_product_property(l, data, x, y):
    n = data.draw(st.integers(0, l))
    rep = classical_product_check(l, n, x, y)
    assert rep.passed, rep


def test_product_examples():
    assert classical_product_check(0, 0, 0.4, 0.1).residual == pytest.approx(0, abs=1e-15)
    assert classical_product_check(2, 0, 0.4, -0.7).passed
    assert classical_product_check(3, 3, 0.4, -0.7).passed


def test_product_degenerate_is_skipped():
    rep = classical_product_check(3, 1, 1.0, 0.3)
    assert rep.mode == "skipped" and rep.passed
    assert classical_product_check(3, 0, 1.0, 0.3).mode == "float"


def test_classical_suite_passes():
    reps = classical_suite(seed=3)
    assert all(r.passed for r in reps)
    assert sum(r.id == "classical.addition" for r in reps) == 20


def test_dconst_limit_values():
    assert dconst_limit(0, 0) == 1
    assert dconst_limit(1, 1) == pytest.approx(2.0)  # (2)_1 / 1!
    assert dconst_limit(0, 2) == pytest.approx(16.0)


def test_scan_default():
    rep = qlim_scan(LimitScanConfig())
    assert rep.passed, rep.notes
    pts = rep.params["points"]
    for key in TRACKED:
        vals = [pt[key] for pt in pts]
        assert vals[0] > vals[1] > vals[2]
    assert scan_csv(rep).splitlines()[0] == "m,q," + ",".join(TRACKED)


def test_ratio_k_zero_is_one():
    cfg = LimitScanConfig(ratio_k=(0,))
    assert limit_point(cfg, 8).ratio == pytest.approx(0.0, abs=1e-15)


@settings(max_examples=6)
@given(st.integers(1, 3), st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)]), st.integers(0, 2))
def test_scan_property(l, c, r):
    cfg = LimitScanConfig(l=l, c=c, r=r, m_list=(8, 16, 32), x_samples=(1.4, -1.2))
    assert qlim_scan(cfg).passed


def test_scan_rejects_inner_points_and_bad_configs():
    with pytest.raises(ValueError):
        qlim_scan(LimitScanConfig(x_samples=(0.2,)))
    with pytest.raises(ValueError):
        LimitScanConfig(c=Fraction(3, 2))
    with pytest.raises(ValueError):
        LimitScanConfig(m_list=(16, 8))
