"""Kuznecov sums against their predicted growth over a range of T.

Distance spheres at a few fractions of the diameter, and the cut locus where one exists.

    python3 scripts/kuznecov_sweep.py --degrees 2000 > kuznecov.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from jacobicross.asymptotics import CutLocus, DistanceSphere, kuznecov_sum
from jacobicross.geometry import eigenvalue, parse_space, space_params


@dataclass
class SweepConfig:
    spaces: list[str] = field(default_factory=lambda: ["sphere:1", "sphere:2", "sphere:3", "cp:2", "hp:2", "cap2"])
    radius_fractions: list[float] = field(default_factory=lambda: [1 / 6, 1 / 4, 1 / 3])
    max_degree: int = 2000
    steps: int = 8


def targets(name: str, cfg: SweepConfig):
    space = parse_space(name)
    sp = space_params(space)
    out = [(f"sphere:{f:.4f}L", DistanceSphere(sp.L * f)) for f in cfg.radius_fractions]
    if not space.is_sphere:
        out.append(("cutlocus", CutLocus()))
    return space, out


def run(cfg: SweepConfig, out=sys.stdout) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["space", "target", "T", "empirical", "predicted", "ratio"])
    for name in cfg.spaces:
        space, tgts = targets(name, cfg)
        t_max = eigenvalue(space, cfg.max_degree + 1)
        for label, tgt in tgts:
            for i in range(1, cfg.steps + 1):
                T = t_max * i / cfg.steps
                emp, pred = kuznecov_sum(space, tgt, T)
                writer.writerow([name, label, repr(T), repr(emp), repr(pred), repr(emp / pred)])


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--degrees", type=int, default=2000, help="largest degree included at the top of the sweep")
    ap.add_argument("--steps", type=int, default=8)
    args = ap.parse_args()
    run(SweepConfig(max_degree=args.degrees, steps=args.steps))
