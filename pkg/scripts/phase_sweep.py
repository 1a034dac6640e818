#!/usr/bin/env python3
"""Interference fringes: detector-1 probability vs relative arm phase.

Writes one CSV with the H2-present fringe (cos^2(phi/2)) next to the flat
50/50 line seen when H2 is absent, plus seeded click counts at a few
phases, ready for plotting.
"""

import argparse
import csv
import math
from pathlib import Path

import numpy as np

from matterwave.interferometer import ExperimentConfig, run_experiment, sample_clicks


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=181)
    parser.add_argument("--samples", type=int, default=20_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path, default=Path("results/phase_sweep.csv"))
    args = parser.parse_args()

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["phase_rad", "p_d1_with_h2", "p_d1_without_h2", "clicks_d1_frac"])
        for i, phi in enumerate(np.linspace(0.0, 2.0 * math.pi, args.points)):
            with_h2 = run_experiment(ExperimentConfig(h2_present=True, phase_upper=float(phi)))
            without = run_experiment(ExperimentConfig(h2_present=False, phase_upper=float(phi)))
            clicked = sample_clicks(with_h2, args.samples, seed=args.seed + i)
            writer.writerow([float(phi), with_h2.p_d1, without.p_d1,
                             clicked.clicks_d1 / args.samples])
    print(f"wrote {args.out} ({args.points} phases, {args.samples} clicks each)")


if __name__ == "__main__":
    main()
