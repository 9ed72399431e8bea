"""Cesàro means of squared Jacobi polynomials and the Kuznecov-type sums behind them.

Sums are exactly rounded (``math.fsum``), so a result does not depend on
the order in which terms are produced and is reproducible bit for bit,
including when the terms are computed in parallel blocks.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from jacobicross.errors import DomainError, UnsupportedError
from jacobicross.geometry import (
    SpaceParams,
    SymmetricSpace,
    area,
    max_degree_below,
    pushforward_constant,
    require_non_sphere,
    space_params,
)
from jacobicross.special import JacobiParams, log_gamma, orthonormal_eval_all

__all__ = [
    "ReportEntry",
    "ConvergenceReport",
    "DistanceSphere",
    "CutLocus",
    "SumTarget",
    "identity_terms",
    "identity_lhs",
    "identity_rhs",
    "verify_identity",
    "cutlocus_term",
    "cutlocus_sum",
    "cutlocus_target",
    "verify_cutlocus",
    "kuznecov_sum",
    "sphere_prediction_via_cesaro",
    "fit_rate",
    "BLOCK_SIZE",
]

BLOCK_SIZE = 8192


@dataclass(frozen=True)
class ReportEntry:
    m: int
    lhs: float
    target: float

    @property
    def rel_err(self) -> float:
        return abs(self.lhs - self.target) / abs(self.target)


@dataclass
class ConvergenceReport:
    entries: list[ReportEntry]
    tol: float
    fitted_rate: Optional[float] = field(default=None)

    @property
    def final_rel_err(self) -> float:
        return self.entries[-1].rel_err

    @property
    def passed(self) -> bool:
        return self.final_rel_err <= self.tol


def _check_schedule(schedule: Sequence[int], tol: float) -> list[int]:
    sched = list(schedule)
    if not sched:
        raise DomainError("schedule must be non-empty")
    for m in sched:
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise DomainError(f"schedule entries must be positive integers, got {m!r}")
    if any(b <= a for a, b in zip(sched, sched[1:])):
        raise DomainError("schedule must be strictly increasing")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    return sched


def _report(entries: list[ReportEntry], tol: float) -> ConvergenceReport:
    report = ConvergenceReport(entries, tol)
    try:
        report.fitted_rate = fit_rate(report)
    except UnsupportedError:
        pass
    return report


def fit_rate(report: ConvergenceReport) -> float:
    """Least-squares slope of log(rel_err) against log(m)."""
    pts = [(math.log(e.m), math.log(e.rel_err)) for e in report.entries if e.rel_err > 0]
    if len(pts) < 3:
        raise UnsupportedError("rate fitting needs at least 3 entries with nonzero error")
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope


# Cesàro mean of the squared, normalized polynomials.

def _check_open_interval(x: float) -> float:
    if not abs(x) < 1:
        raise DomainError(f"x must lie strictly inside (-1, 1), got {x!r}")
    return float(x)


def identity_terms(params: JacobiParams, m: int, x: float) -> list[float]:
    """Summands coeff_l P_l(x)^2 for l = 0..m, as 2^(a+b+1) times squared orthonormal values."""
    scale = 2.0 ** (params.a + params.b + 1.0)
    return [scale * v * v for v in orthonormal_eval_all(params, m, x)]


def identity_lhs(params: JacobiParams, m: int, x: float) -> float:
    """(1/m) sum_{l=0}^{m} coeff_l P_l(x)^2; the sum is inclusive but divided by m."""
    x = _check_open_interval(x)
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    return math.fsum(identity_terms(params, m, x)) / m


def identity_rhs(params: JacobiParams, x: float) -> float:
    x = _check_open_interval(x)
    a, b = params.a, params.b
    return 2.0 ** (a + b + 1.0) / (math.pi * (1.0 - x) ** (a + 0.5) * (1.0 + x) ** (b + 0.5))


def verify_identity(
    params: JacobiParams, x: float, schedule: Sequence[int], tol: float
) -> ConvergenceReport:
    x = _check_open_interval(x)
    sched = _check_schedule(schedule, tol)
    target = identity_rhs(params, x)
    terms = identity_terms(params, sched[-1], x)
    entries = [ReportEntry(m, math.fsum(terms[: m + 1]) / m, target) for m in sched]
    return _report(entries, tol)


# Cut-locus sums: x = -1 in the projective spaces.

def cutlocus_term(sp: SpaceParams, ell: int) -> float:
    """((4l+p+2q)/2) G((2l+p+2q)/2) G((2l+q+1)/2) / (G((2l+p+q+1)/2) G(l+1))."""
    p, q = sp.p, sp.q
    log_t = (
        math.log((4 * ell + p + 2 * q) / 2)
        + log_gamma((2 * ell + p + 2 * q) / 2)
        + log_gamma((2 * ell + q + 1) / 2)
        - log_gamma((2 * ell + p + q + 1) / 2)
        - log_gamma(ell + 1.0)
    )
    return math.exp(log_t)


def _cutlocus_block(sp: SpaceParams, start: int, stop: int) -> list[float]:
    return [cutlocus_term(sp, ell) for ell in range(start, stop)]


def _blocks(m: int) -> list[tuple[int, int]]:
    return [(s, min(s + BLOCK_SIZE, m + 1)) for s in range(0, m + 1, BLOCK_SIZE)]


def _cutlocus_terms(sp: SpaceParams, m: int, workers: int) -> list[float]:
    blocks = _blocks(m)
    if workers <= 1 or len(blocks) == 1:
        parts: Iterable[list[float]] = (_cutlocus_block(sp, s, e) for s, e in blocks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves block order
            parts = list(pool.map(_cutlocus_block, [sp] * len(blocks), *zip(*blocks)))
    terms: list[float] = []
    for part in parts:
        terms.extend(part)
    return terms


def cutlocus_sum(space: SymmetricSpace, m: int, workers: int = 1) -> float:
    """(1/m^k) sum_{l=0}^{m} of the cut-locus terms, k the cut-locus codimension."""
    sp = require_non_sphere(space)
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    return math.fsum(_cutlocus_terms(sp, m, workers)) / float(m) ** sp.cut_codim


def cutlocus_target(space: SymmetricSpace) -> float:
    return 2.0 / require_non_sphere(space).cut_codim


def verify_cutlocus(
    space: SymmetricSpace, schedule: Sequence[int], tol: float, workers: int = 1
) -> ConvergenceReport:
    sp = require_non_sphere(space)
    sched = _check_schedule(schedule, tol)
    target = 2.0 / sp.cut_codim
    terms = _cutlocus_terms(sp, sched[-1], workers)
    entries = [
        ReportEntry(m, math.fsum(terms[: m + 1]) / float(m) ** sp.cut_codim, target) for m in sched
    ]
    return _report(entries, tol)


# Kuznecov sums over distance spheres and cut loci.

@dataclass(frozen=True)
class DistanceSphere:
    r: float


@dataclass(frozen=True)
class CutLocus:
    pass


SumTarget = Union[DistanceSphere, CutLocus]


def _target_geometry(space: SymmetricSpace, target: SumTarget) -> tuple[float, int, float]:
    """(x_N, codimension k, measure of N)."""
    sp = space_params(space)
    if isinstance(target, DistanceSphere):
        r = target.r
        if not 0 < r < sp.L:
            raise DomainError(f"distance-sphere radius must lie in (0, {sp.L}), got {r!r}")
        return math.cos(2 * sp.omega * r), 1, area(space, r)
    if isinstance(target, CutLocus):
        sp = require_non_sphere(space)
        return -1.0, sp.cut_codim, sp.cut_measure
    raise UnsupportedError(f"unknown sum target {target!r}")


def kuznecov_sum(space: SymmetricSpace, target: SumTarget, T: float) -> tuple[float, float]:
    """Empirical sum_{lambda_l < T} c_l^2 P_l(x_N)^2 and its predicted asymptote.

    The prediction is T^(k/2) / ((4 pi)^(k/2) Gamma(k/2 + 1) nu(N)).
    c_l^2 P_l^2 is evaluated as p_l^2 / D (orthonormal value over the
    pushforward constant) so large degrees never overflow.
    """
    if not T > 0:
        raise DomainError(f"T must be positive, got {T!r}")
    x, k, measure = _target_geometry(space, target)
    sp = space_params(space)
    predicted = math.exp(
        0.5 * k * math.log(T) - 0.5 * k * math.log(4 * math.pi) - log_gamma(k / 2 + 1) - math.log(measure)
    )
    m = max_degree_below(space, T)
    if m is None:
        return 0.0, predicted
    vals = orthonormal_eval_all(sp.jacobi, m, x)
    empirical = math.fsum(v * v for v in vals) / pushforward_constant(space)
    return empirical, predicted


def sphere_prediction_via_cesaro(space: SymmetricSpace, r: float, T: float) -> float:
    """Distance-sphere prediction rebuilt from the Cesàro limit and c_l asymptotics.

    K sqrt(T) / (2 omega pi sin^(p+q)(omega r) cos^q(omega r)) with
    K = omega^(p+q+1) Gamma((p+q+1)/2) / pi^((p+q+1)/2); algebraically equal
    to sqrt(T) / (pi A(r)).
    """
    sp = space_params(space)
    h = (sp.p + sp.q + 1) / 2
    K = math.exp((sp.p + sp.q + 1) * math.log(sp.omega) + log_gamma(h) - h * math.log(math.pi))
    wr = sp.omega * r
    return K * math.sqrt(T) / (2 * sp.omega * math.pi * math.sin(wr) ** (sp.p + sp.q) * math.cos(wr) ** sp.q)
