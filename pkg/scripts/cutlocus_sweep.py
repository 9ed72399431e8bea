"""Cut-locus sums for the projective spaces, with m * rel_error to expose the 1/m correction.

    python3 scripts/cutlocus_sweep.py --workers 4 > cutlocus.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from jacobicross.asymptotics import verify_cutlocus
from jacobicross.geometry import parse_space


@dataclass
class SweepConfig:
    spaces: list[str] = field(default_factory=lambda: ["cp:2", "cp:3", "cp:5", "hp:2", "hp:3", "cap2"])
    schedule: list[int] = field(default_factory=lambda: [10**k for k in range(1, 7)])
    workers: int = 1


def run(cfg: SweepConfig, out=sys.stdout) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["space", "m", "lhs", "target", "rel_error", "m_times_rel_error"])
    for name in cfg.spaces:
        rep = verify_cutlocus(parse_space(name), cfg.schedule, tol=1.0, workers=cfg.workers)
        for e in rep.entries:
            writer.writerow([name, e.m, repr(e.lhs), repr(e.target), repr(e.rel_err), repr(e.m * e.rel_err)])


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--m-max-exp", type=int, default=6)
    args = ap.parse_args()
    run(SweepConfig(schedule=[10**k for k in range(1, args.m_max_exp + 1)], workers=args.workers))
