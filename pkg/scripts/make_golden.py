#!/usr/bin/env python3
"""Regenerate the golden evaluation outputs from the shipped dataset.

Produces tests/data/golden_sweep.csv (both channels swept over their
standard grids) and tests/data/golden_ablation.txt. The acceptance suite
compares fresh pipeline runs against these bytes, so regenerate them only
when the pipeline's observable behavior is meant to change.
"""

from __future__ import annotations

import sys
from pathlib import Path

from confrec import dataio
from confrec.engine import Channel
from confrec.evaluation import (
    SplitSpec,
    ablation_report,
    render_ablation_text,
    split,
    sweep,
    write_sweep_csv,
)

ROOT = Path(__file__).resolve().parent.parent
DATASET = ROOT / "data" / "default_conference.txt"
GOLDEN_CSV = ROOT / "tests" / "data" / "golden_sweep.csv"
GOLDEN_TEXT = ROOT / "tests" / "data" / "golden_ablation.txt"

SPLIT_SEED = 42
GAMMA_GRID = [-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0]
BETA_GRID = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]


def main() -> int:
    conf = dataio.load(DATASET)
    train, labels = split(conf, SplitSpec(train_fraction=0.8, seed=SPLIT_SEED))
    reports = [
        sweep(train, labels, Channel.SOCIAL_CONTEXT, GAMMA_GRID, dataset_id=DATASET.name),
        sweep(train, labels, Channel.SOCIAL_RELATIONS, BETA_GRID, dataset_id=DATASET.name),
    ]
    GOLDEN_CSV.parent.mkdir(parents=True, exist_ok=True)
    write_sweep_csv(reports, GOLDEN_CSV)
    text = render_ablation_text(ablation_report(train, labels, dataset_id=DATASET.name))
    GOLDEN_TEXT.write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {GOLDEN_CSV} ({sum(len(r.points) for r in reports)} points) and {GOLDEN_TEXT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
