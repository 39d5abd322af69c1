"""Operator-level suites for a few (q, sigma, tau), including truncation-size sensitivity."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from _config import from_argv, save_config

from qaddform.report import summary, to_csv, to_jsonl
from qaddform.representation import REPR_SUITES, run_repr_suite


@dataclass
class OperatorConfig:
    """Run the representation suites on a parameter list."""

    qs: tuple = (0.5, 0.6)
    sigmas: tuple = (1.0, 1.5)
    taus: tuple = (1.0, 0.5)
    Ns: tuple = (30, 40)
    suites: tuple = REPR_SUITES
    out_dir: str = "results/operators"


def main(cfg: OperatorConfig) -> int:
    out = Path(cfg.out_dir)
    save_config(cfg, out)
    reps = []
    for q in cfg.qs:
        for sigma in cfg.sigmas:
            for tau in cfg.taus:
                for N in cfg.Ns:
                    reps += run_repr_suite(cfg.suites, q, sigma, tau, N)
    (out / "reports.jsonl").write_text(to_jsonl(reps))
    (out / "reports.csv").write_text(to_csv(reps))
    summ = summary(reps)
    print(f"{summ['passed']}/{summ['total']} operator checks passed")
    return 0 if not summ["failed"] else 1


if __name__ == "__main__":
    raise SystemExit(main(from_argv(OperatorConfig)))
