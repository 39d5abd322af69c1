"""Product-formula residuals over (l, n, m, p) for several (q, s, t).

Writes one CSV row per check with the quadrature and linearisation values,
so accuracy can be plotted against q or the degree.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from _config import from_argv, save_config

from qaddform.verify import cor51_check


@dataclass
class ProductSweepConfig:
    """Sweep of the product formula in both variants."""

    l_max: int = 3
    m_max: int = 3
    p_max: int = 2
    qs: tuple = (0.5, 0.3, 0.8)
    ss: tuple = (1.0, 1.5)
    ts: tuple = (1.0, 0.7)
    tol: float = 1e-9
    out_dir: str = "results/product"


def main(cfg: ProductSweepConfig) -> int:
    out = Path(cfg.out_dir)
    save_config(cfg, out)
    rows, failures = [], 0
    for q in cfg.qs:
        for s in cfg.ss:
            for t in cfg.ts:
                for variant in ("plus", "minus"):
                    for l in range(cfg.l_max + 1):
                        for n in range(l + 1):
                            for m in range(cfg.m_max + 1):
                                for p in range(cfg.p_max + 1):
                                    rep = cor51_check(l, m, n, p, s, t, q, cfg.tol, variant)
                                    failures += not rep.passed
                                    rows.append({**rep.params, "residual": rep.residual, "pass": rep.passed})
    with open(out / "residuals.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    worst = max(r["residual"] for r in rows)
    print(f"{len(rows) - failures}/{len(rows)} within {cfg.tol:g}; worst residual {worst:.2e}")
    return 0 if not failures else 1


if __name__ == "__main__":
    raise SystemExit(main(from_argv(ProductSweepConfig)))
