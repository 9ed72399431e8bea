"""Gauss-Jacobi quadrature from the eigen-decomposition of the Jacobi matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from jacobicross.errors import DomainError
from jacobicross.special import JacobiParams, jacobi_matrix

__all__ = ["QuadratureRule", "gauss_jacobi", "integrate", "tridiag_eigen", "MAX_NODES"]

MAX_NODES = 2048
QL_TOL = 1e-15
QL_MAX_ITER = 50


class ConvergenceError(RuntimeError):
    pass


def tridiag_eigen(diag, off, tol: float = QL_TOL, max_iter: int = QL_MAX_ITER):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit-shift QL with Wilkinson-type shifts. Only the first row of the
    eigenvector matrix is accumulated, which is all Golub-Welsch needs.
    Returns ``(values, first)`` sorted by ascending eigenvalue.
    """
    d = [float(v) for v in diag]
    n = len(d)
    e = [float(v) for v in off] + [0.0]
    if len(e) != n:
        raise ValueError("off-diagonal must have length len(diag) - 1")
    z = [0.0] * n
    z[0] = 1.0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= tol * dd or abs(e[m]) < 1e-300:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                raise ConvergenceError(f"QL iteration did not converge for eigenvalue {l}")
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    order = sorted(range(n), key=d.__getitem__)
    return [d[k] for k in order], [z[k] for k in order]


def _jacobi_and_deriv(a: float, b: float, n: int, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # P_n and P_n' at many points; the derivative uses the (a+1, b+1) family.
    def values(a, b, n):
        p_prev = np.ones_like(xs)
        if n == 0:
            return p_prev
        s = a + b
        p = (a + 1.0) + 0.5 * (s + 2.0) * (xs - 1.0)
        for k in range(1, n):
            t = 2.0 * k + s
            c1 = 2.0 * (k + 1) * (k + s + 1.0) * t
            c2 = (t + 1.0) * ((t + 2.0) * t * xs + (a * a - b * b))
            c3 = 2.0 * (k + a) * (k + b) * (t + 2.0)
            p_prev, p = p, (c2 * p - c3 * p_prev) / c1
        return p

    p = values(a, b, n)
    dp = 0.5 * (n + a + b + 1.0) * values(a + 1.0, b + 1.0, n - 1)
    return p, dp


@dataclass(frozen=True)
class QuadratureRule:
    params: JacobiParams
    n: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    def integrate(self, f: Callable[[float], float]) -> float:
        return integrate(self, f)


def gauss_jacobi(params: JacobiParams, n: int) -> QuadratureRule:
    """n-point Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].

    Nodes are eigenvalues of the Jacobi matrix, refined by one Newton step on
    P_n; weights are squared first eigenvector components times the total mass.
    """
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_NODES:
        raise DomainError(f"node count must be an integer in [1, {MAX_NODES}], got {n!r}")
    diag, off = jacobi_matrix(params, n)
    values, first = tridiag_eigen(diag, off)
    xs = np.array(values)
    p, dp = _jacobi_and_deriv(params.a, params.b, n, xs)
    step = np.where(dp != 0.0, p / np.where(dp != 0.0, dp, 1.0), 0.0)
    polished = xs - step
    # keep the eigenvalue if the Newton step wanders (it should move by ~eps)
    ok = np.abs(step) < 1e-8
    xs = np.where(ok, polished, xs)
    mass = math.exp(params.log_total_mass())
    weights = [mass * v * v for v in first]
    return QuadratureRule(params, n, tuple(float(v) for v in xs), tuple(weights))


def integrate(rule: QuadratureRule, f: Callable[[float], float]) -> float:
    """Sum of weight_i * f(node_i), accumulated with ``math.fsum``."""
    return math.fsum(w * f(x) for x, w in zip(rule.nodes, rule.weights))
