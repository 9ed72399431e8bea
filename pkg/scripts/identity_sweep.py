"""Cesàro identity error against m for several (alpha, beta) and x.

Writes CSV to stdout: alpha,beta,x,m,lhs,target,rel_error,
then one fitted_rate line per (alpha, beta, x) on stderr.

    python3 scripts/identity_sweep.py --m-max 64000
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from jacobicross.asymptotics import verify_identity
from jacobicross.special import JacobiParams


@dataclass
class SweepConfig:
    pairs: list[tuple[float, float]] = field(default_factory=lambda: [(0, 0), (1, 0), (3, 1), (7, 3), (-0.5, -0.5)])
    xs: list[float] = field(default_factory=lambda: [-0.7, 0.0, 0.5, 0.9])
    m_start: int = 250
    m_max: int = 64000


def schedule(cfg: SweepConfig) -> list[int]:
    out, m = [], cfg.m_start
    while m <= cfg.m_max:
        out.append(m)
        m *= 2
    return out


def run(cfg: SweepConfig, out=sys.stdout) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alpha", "beta", "x", "m", "lhs", "target", "rel_error"])
    sched = schedule(cfg)
    for a, b in cfg.pairs:
        for x in cfg.xs:
            rep = verify_identity(JacobiParams(a, b), x, sched, tol=1.0)
            for e in rep.entries:
                writer.writerow([a, b, x, e.m, repr(e.lhs), repr(e.target), repr(e.rel_err)])
            rate = "n/a" if rep.fitted_rate is None else f"{rep.fitted_rate:.3f}"
            print(f"alpha={a} beta={b} x={x}: fitted_rate={rate}", file=sys.stderr)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-start", type=int, default=250)
    ap.add_argument("--m-max", type=int, default=64000)
    args = ap.parse_args()
    run(SweepConfig(m_start=args.m_start, m_max=args.m_max))
