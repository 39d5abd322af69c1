"""q -> 1 deviations for several (c, r), written as plot-ready CSV."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from _config import from_argv, save_config

from qaddform.limits import TRACKED, LimitScanConfig, qlim_scan


@dataclass
class LimitExperimentConfig:
    """Repeat the limit scan over a small (c, r) grid."""

    l: int = 2
    cs: tuple = ("1/2", "1/3", "3/4")
    rs: tuple = (0, 1, 2)
    m_list: tuple = (8, 16, 32, 64)
    x_samples: tuple = (1.4, -1.2)
    out_dir: str = "results/limits"


def main(cfg: LimitExperimentConfig) -> int:
    out = Path(cfg.out_dir)
    save_config(cfg, out)
    lines = ["c,r,m,q," + ",".join(TRACKED)]
    verdicts = {}
    for c in cfg.cs:
        for r in cfg.rs:
            rep = qlim_scan(LimitScanConfig(l=cfg.l, c=Fraction(c), r=r, m_list=cfg.m_list,
                                            x_samples=cfg.x_samples))
            verdicts[f"c={c},r={r}"] = rep.params["monotone"]
            for pt in rep.params["points"]:
                lines.append(",".join([c, str(r), str(pt["m"]), repr(pt["q"])] + [repr(pt[k]) for k in TRACKED]))
    (out / "deviations.csv").write_text("\n".join(lines) + "\n")
    (out / "monotone.json").write_text(json.dumps(verdicts, indent=2, sort_keys=True) + "\n")
    bad = [k for k, v in verdicts.items() if not all(v.values())]
    print(f"{len(verdicts) - len(bad)}/{len(verdicts)} scans strictly decreasing" + (f"; not: {bad}" if bad else ""))
    return 0 if not bad else 1


if __name__ == "__main__":
    raise SystemExit(main(from_argv(LimitExperimentConfig)))
