"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict, printed in the pytest
terminal summary; ``python tests/test_acceptance.py`` prints the same lines
without pytest.
"""

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_RESULTS  # noqa: E402

from qaddform.limits import LimitScanConfig, classical_addition_symbolic, classical_suite, qlim_scan  # noqa: E402
from qaddform.ncalg.identities import run_suite  # noqa: E402
from qaddform.representation import (abstract_addition_check, action_check_minor, ladder, norm_check,  # noqa: E402
                                     spectrum_check, tensor_rho_action)
from qaddform.verify import cor51_check, default_grid, run_thm41_grid  # noqa: E402


def record(num: int, title: str, ok: bool, detail: str) -> bool:
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE_RESULTS[num] = line
    print(line)
    return ok


def crit_01():
    t0 = time.perf_counter()
    reps = run_thm41_grid(default_grid())
    bad = [r for r in reps if not (r.passed and r.residual == 0)]
    dt = time.perf_counter() - t0
    return record(1, "exact addition formula on the default grid", not bad and dt < 120,
                  f"{len(reps) - len(bad)}/{len(reps)} literal zeros, {dt:.0f}s")


def crit_02():
    reps = run_suite()
    bad = [r.id for r in reps if not r.passed]
    return record(2, "symbolic identity suite", not bad, f"{len(reps) - len(bad)}/{len(reps)} reduce to zero")


def crit_03():
    rep = spectrum_check(0.5, 1.0, 40, 10, tol=1e-8)
    return record(3, "spectrum of truncated pi(rho[inf,sigma])", rep.passed, f"max deviation {rep.residual:.1e}")


def crit_04():
    reps = [norm_check(q, s, nmax=8, tol=1e-10) for q in (0.5, 0.75) for s in (0.5, 1.0, 2.0)]
    worst = max(r.residual for r in reps)
    return record(4, "eigenvector norms", all(r.passed for r in reps), f"worst relative error {worst:.1e}")


def crit_05():
    reps = []
    for mode in ("sigma", "tau"):
        lams = [lam for _, _, lam in ladder(1.0, 0.5, 3)]  # four per ladder
        for name in ("alpha", "beta", "gamma", "delta"):
            reps += [action_check_minor(name, mode, lam, 1.0, 0.5, 40, tol=1e-10) for lam in lams]
    worst = max(r.residual for r in reps)
    return record(5, "minor-element actions on eigenvectors", all(r.passed for r in reps),
                  f"{len(reps)} checks, worst {worst:.1e}")


def crit_06():
    reps = [tensor_rho_action(m, p, 1.0, 1.0, 0.5, 40, tol=1e-9) for m in range(7) for p in range(3)]
    worst = max(r.residual for r in reps)
    return record(6, "tensor recurrence coefficients", all(r.passed for r in reps), f"worst {worst:.1e}")


def crit_07():
    reps = [abstract_addition_check(l, 1.0, 1.0, 0.5, 40, tol=1e-7) for l in range(3)]
    worst = max(r.residual for r in reps)
    return record(7, "operator addition formula", all(r.passed for r in reps), f"worst entry deviation {worst:.1e}")


def crit_08():
    reps = [cor51_check(l, m, n, p, 1.0, 1.0, 0.5, 1e-9, variant)
            for variant in ("plus", "minus") for l in range(4) for n in range(l + 1)
            for m in range(4) for p in range(3)]
    worst = max(r.residual for r in reps)
    return record(8, "product formula", all(r.passed for r in reps), f"{len(reps)} checks, worst {worst:.1e}")


def crit_09():
    reps = classical_suite(seed=0, points=20, l_max=6)
    add = [r for r in reps if r.id == "classical.addition"]
    prod = [r for r in reps if r.id == "classical.product" and r.mode == "float"]
    sym = classical_addition_symbolic(1)
    ok = (all(r.residual <= 1e-12 for r in add) and all(r.residual <= 1e-10 for r in prod)
          and sym.passed and sym.residual == 0 and all(r.passed for r in reps))
    return record(9, "classical endpoint", ok,
                  f"addition worst {max(r.residual for r in add):.1e}, product worst "
                  f"{max(r.residual for r in prod):.1e}, exact l=1 zero {sym.passed}")


def crit_10():
    rep = qlim_scan(LimitScanConfig(l=2, r=1, m_list=(8, 16, 32)))
    pts = rep.params["points"]
    trail = ", ".join(f"{k} {pts[0][k]:.2g}->{pts[-1][k]:.2g}" for k in ("addition", "dconst", "ratio"))
    return record(10, "q -> 1 limit scan", rep.passed, trail)


CRITERIA = [crit_01, crit_02, crit_03, crit_04, crit_05, crit_06, crit_07, crit_08, crit_09, crit_10]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{k:02d}" for k in range(1, 11)])
def test_acceptance(crit):
    assert crit()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
