"""Dataclass configs with command-line overrides (``--field value``)."""

from __future__ import annotations

import argparse
import dataclasses
import json
from pathlib import Path


def _parse_tuple(kind):
    def parse(text: str):
        return tuple(kind(x) for x in text.split(",") if x.strip())
    return parse


def from_argv(cls, argv=None):
    """Build ``cls`` from defaults overridden on the command line; tuples are comma separated."""
    ap = argparse.ArgumentParser(description=cls.__doc__)
    defaults = cls()
    for f in dataclasses.fields(cls):
        value = getattr(defaults, f.name)
        if isinstance(value, bool):
            ap.add_argument(f"--{f.name}", type=lambda s: s.lower() in ("1", "true", "yes"), default=value)
        elif isinstance(value, tuple):
            kind = type(value[0]) if value else str
            ap.add_argument(f"--{f.name}", type=_parse_tuple(kind), default=value)
        else:
            ap.add_argument(f"--{f.name}", type=type(value), default=value)
    return cls(**vars(ap.parse_args(argv)))


def save_config(cfg, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "config.json").write_text(json.dumps(dataclasses.asdict(cfg), indent=2, sort_keys=True) + "\n")
