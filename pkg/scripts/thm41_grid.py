"""Exact addition-formula certificate over a parameter grid.

    python scripts/thm41_grid.py --l_max 4 --out_dir results/thm41
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from _config import from_argv, save_config

from qaddform.report import summary, to_csv, to_jsonl
from qaddform.verify import default_grid, read_grid, run_thm41_grid


@dataclass
class Thm41GridConfig:
    """Exact addition-formula check over (q, s, t) x (l, m, p)."""

    grid_csv: str = ""  # empty: the built-in grid with the maxima below
    l_max: int = 4
    m_max: int = 3
    p_max: int = 3
    workers: int = 0  # 0: one per CPU (capped at 8)
    out_dir: str = "results/thm41"


def main(cfg: Thm41GridConfig) -> int:
    out = Path(cfg.out_dir)
    save_config(cfg, out)
    grid = read_grid(cfg.grid_csv) if cfg.grid_csv else default_grid(cfg.l_max, cfg.m_max, cfg.p_max)
    t0 = time.perf_counter()
    reps = run_thm41_grid(grid, cfg.workers or None)
    elapsed = time.perf_counter() - t0
    (out / "reports.jsonl").write_text(to_jsonl(reps))
    (out / "reports.csv").write_text(to_csv(reps))
    by_l = Counter(r.params["l"] for r in reps if r.passed)
    summ = summary(reps)
    print(f"{summ['passed']}/{summ['total']} exact in {elapsed:.1f}s; passes by l: {dict(sorted(by_l.items()))}")
    return 0 if not summ["failed"] else 1


if __name__ == "__main__":
    raise SystemExit(main(from_argv(Thm41GridConfig)))
