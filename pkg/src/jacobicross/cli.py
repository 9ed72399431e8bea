"""Command-line entry point.

Exit codes: 0 pass, 1 tolerance failure, 2 usage or domain error.
Every run ends its standard output with ``RESULT: PASS`` or
``RESULT: FAIL rel_err=<value> tol=<value>``.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from jacobicross.asymptotics import (
    ConvergenceReport,
    CutLocus,
    DistanceSphere,
    kuznecov_sum,
    verify_cutlocus,
    verify_identity,
)
from jacobicross.errors import DomainError, UnsupportedError
from jacobicross.geometry import (
    cayley_plane,
    complex_projective,
    eigenfunction_norm_sq,
    parse_space,
    quaternionic_projective,
    space_params,
    sphere,
    volume,
)
from jacobicross.quadrature import gauss_jacobi
from jacobicross.special import JacobiParams, jacobi_eval, orthonormal_eval_all

DEFAULT_TOL = {
    "verify-identity": 0.02,
    "verify-cutlocus": 0.005,
    "kuznecov": 0.05,
    "orthogonality": 1e-10,
    "normalization": 1e-8,
}

CATALOG = (
    sphere(1),
    sphere(2),
    sphere(3),
    complex_projective(2),
    complex_projective(3),
    quaternionic_projective(2),
    cayley_plane(),
)


class UsageError(ValueError):
    pass


def fmt(v: float) -> str:
    return format(v, ".17g")


def parse_schedule(text: str) -> list[int]:
    """Comma list ``1000,2000`` or geometric ``geo:start:factor:count``."""
    try:
        if text.startswith("geo:"):
            _, start, factor, count = text.split(":")
            s, f, c = float(start), float(factor), int(count)
            if c < 1 or s < 1 or f <= 1:
                raise ValueError
            sched = [int(round(s * f**i)) for i in range(c)]
        else:
            sched = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed --m-schedule {text!r}") from None
    if any(m < 1 for m in sched) or any(b <= a for a, b in zip(sched, sched[1:])):
        raise UsageError(f"--m-schedule must be strictly increasing positive integers: {text!r}")
    return sched


def parse_target(text: str):
    if text == "cutlocus":
        return CutLocus()
    if text.startswith("sphere:"):
        try:
            return DistanceSphere(float(text.split(":", 1)[1]))
        except ValueError:
            pass
    raise UsageError(f"--target must be sphere:<r> or cutlocus, got {text!r}")


@dataclass
class RunConfig:
    subcommand: str
    space: Optional[str] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    x: Optional[float] = None
    degree: Optional[int] = None
    max_degree: Optional[int] = None
    nodes: Optional[int] = None
    m_schedule: Optional[list[int]] = None
    t_max: Optional[float] = None
    steps: int = 10
    target: Optional[str] = None
    tol: Optional[float] = None
    csv_path: Optional[str] = None
    workers: int = 1

    @property
    def tolerance(self) -> float:
        return self.tol if self.tol is not None else DEFAULT_TOL[self.subcommand]

    def jacobi(self) -> JacobiParams:
        if self.space is not None:
            if self.alpha is not None or self.beta is not None:
                raise UsageError("give either --space or --alpha/--beta, not both")
            return space_params(parse_space(self.space)).jacobi
        if self.alpha is None or self.beta is None:
            raise UsageError("--alpha and --beta are required (or --space)")
        return JacobiParams(self.alpha, self.beta)

    def require(self, *names: str) -> None:
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise UsageError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _write_csv(path: str, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([r if isinstance(r, int) else fmt(r) for r in row])


def _result(ok: bool, err: float, tol: float) -> int:
    if ok:
        print("RESULT: PASS")
        return 0
    print(f"RESULT: FAIL rel_err={fmt(err)} tol={fmt(tol)}")
    return 1


def _finish_report(report: ConvergenceReport, cfg: RunConfig) -> int:
    print(f"{'m':>10} {'lhs':>24} {'target':>24} {'rel_error':>12}")
    for e in report.entries:
        print(f"{e.m:>10d} {fmt(e.lhs):>24} {fmt(e.target):>24} {e.rel_err:>12.4e}")
    if report.fitted_rate is not None:
        print(f"fitted_rate: {report.fitted_rate:.4f}")
    if cfg.csv_path:
        _write_csv(
            cfg.csv_path,
            ["m", "lhs", "target", "rel_error"],
            ([e.m, e.lhs, e.target, e.rel_err] for e in report.entries),
        )
    return _result(report.passed, report.final_rel_err, report.tol)


def _cmd_spaces(cfg: RunConfig) -> int:
    print(f"{'space':>8} {'d':>3} {'p':>3} {'q':>3} {'L':>10} {'omega':>6} {'alpha':>6} {'beta':>5} {'k':>3} {'nu(N)':>12} {'volume':>12}")
    for s in CATALOG:
        sp = space_params(s)
        k = "-" if sp.cut_codim is None else str(sp.cut_codim)
        nu = "-" if sp.cut_measure is None else f"{sp.cut_measure:.6g}"
        print(
            f"{str(s):>8} {sp.d:>3} {sp.p:>3} {sp.q:>3} {sp.L:>10.6f} {sp.omega:>6g} "
            f"{sp.alpha:>6g} {sp.beta:>5g} {k:>3} {nu:>12} {volume(s):>12.6g}"
        )
    return _result(True, 0.0, 0.0)


def _cmd_eval(cfg: RunConfig) -> int:
    cfg.require("degree", "x")
    print(fmt(jacobi_eval(cfg.jacobi(), cfg.degree, cfg.x)))
    return _result(True, 0.0, 0.0)


def _cmd_verify_identity(cfg: RunConfig) -> int:
    cfg.require("x", "m_schedule")
    report = verify_identity(cfg.jacobi(), cfg.x, cfg.m_schedule, cfg.tolerance)
    return _finish_report(report, cfg)


def _cmd_verify_cutlocus(cfg: RunConfig) -> int:
    cfg.require("space", "m_schedule")
    report = verify_cutlocus(parse_space(cfg.space), cfg.m_schedule, cfg.tolerance, cfg.workers)
    return _finish_report(report, cfg)


def _cmd_kuznecov(cfg: RunConfig) -> int:
    cfg.require("space", "target", "t_max")
    space = parse_space(cfg.space)
    target = parse_target(cfg.target)
    if cfg.steps < 1 or not cfg.t_max > 0:
        raise UsageError("--steps must be >= 1 and --t-max positive")
    rows = []
    for i in range(1, cfg.steps + 1):
        T = cfg.t_max * i / cfg.steps
        emp, pred = kuznecov_sum(space, target, T)
        rows.append([T, emp, pred, emp / pred])
    print(f"{'T':>14} {'empirical':>24} {'predicted':>24} {'ratio':>10}")
    for T, emp, pred, ratio in rows:
        print(f"{fmt(T):>14} {fmt(emp):>24} {fmt(pred):>24} {ratio:>10.6f}")
    if cfg.csv_path:
        _write_csv(cfg.csv_path, ["T", "empirical", "predicted", "ratio"], rows)
    err = abs(rows[-1][3] - 1.0)
    return _result(err <= cfg.tolerance, err, cfg.tolerance)


def _cmd_orthogonality(cfg: RunConfig) -> int:
    cfg.require("max_degree")
    params = cfg.jacobi()
    D = cfg.max_degree
    n = cfg.nodes if cfg.nodes is not None else D + 1
    if n < D + 1:
        raise UsageError(f"--nodes must be at least max-degree + 1 = {D + 1}")
    rule = gauss_jacobi(params, n)
    table = [orthonormal_eval_all(params, D, x) for x in rule.nodes]
    rows = []
    worst = 0.0
    for i in range(D + 1):
        for j in range(i, D + 1):
            g = math.fsum(w * v[i] * v[j] for w, v in zip(rule.weights, table))
            err = abs(g - (1.0 if i == j else 0.0))
            worst = max(worst, err)
            rows.append([i, j, g, err])
    print(f"gram matrix degree 0..{D}, {n} nodes: max |G - I| = {worst:.3e}")
    if cfg.csv_path:
        _write_csv(cfg.csv_path, ["i", "j", "gram_entry", "abs_error"], rows)
    return _result(worst <= cfg.tolerance, worst, cfg.tolerance)


def _cmd_normalization(cfg: RunConfig) -> int:
    cfg.require("space", "max_degree")
    space = parse_space(cfg.space)
    worst = 0.0
    for ell in range(cfg.max_degree + 1):
        val = eigenfunction_norm_sq(space, ell)
        worst = max(worst, abs(val - 1.0))
        print(f"{ell:>5d} {fmt(val)}")
    return _result(worst <= cfg.tolerance, worst, cfg.tolerance)


COMMANDS = {
    "spaces": _cmd_spaces,
    "eval": _cmd_eval,
    "verify-identity": _cmd_verify_identity,
    "verify-cutlocus": _cmd_verify_cutlocus,
    "kuznecov": _cmd_kuznecov,
    "orthogonality": _cmd_orthogonality,
    "normalization": _cmd_normalization,
}


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except (UsageError, DomainError, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # one-line diagnostic instead of the usage block
        self.exit(2, f"error: {self.prog}: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="jacobicross",
        description="Jacobi polynomials and spectral sums on compact rank-one symmetric spaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help)

    def jacobi_flags(p, with_space=False):
        if with_space:
            p.add_argument("--space", help="sphere:n, cp:n, hp:n or cap2")
        p.add_argument("--alpha", type=float)
        p.add_argument("--beta", type=float)

    add("spaces", "print the catalog of symmetric spaces")

    p = add("eval", "evaluate a Jacobi polynomial")
    jacobi_flags(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--x", type=float, required=True)

    p = add("verify-identity", "Cesàro-mean identity for squared Jacobi polynomials")
    jacobi_flags(p, with_space=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--m-schedule", type=parse_schedule_arg, required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", dest="csv_path")

    p = add("verify-cutlocus", "cut-locus limit for the projective spaces")
    p.add_argument("--space", required=True)
    p.add_argument("--m-schedule", type=parse_schedule_arg, required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", dest="csv_path")
    p.add_argument("--workers", type=int, default=1)

    p = add("kuznecov", "Kuznecov sums against their predicted growth")
    p.add_argument("--space", required=True)
    p.add_argument("--target", required=True, help="sphere:<r> or cutlocus")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", dest="csv_path")

    p = add("orthogonality", "Gram matrix of orthonormal polynomials under Gauss-Jacobi")
    jacobi_flags(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--nodes", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", dest="csv_path")

    p = add("normalization", "unit norm of the radial eigenfunctions")
    p.add_argument("--space", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--tol", type=float)
    return parser


def parse_schedule_arg(text: str) -> list[int]:
    try:
        return parse_schedule(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
