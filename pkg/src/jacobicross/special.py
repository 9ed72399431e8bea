"""Jacobi polynomials: evaluation, norms, derivatives and an exact Rodrigues oracle.

All floating-point evaluation goes through three-term recurrences in the
degree, so evaluating every degree up to ``m`` at a point costs O(m).
Gamma-function ratios are always formed as ``exp`` of ``log_gamma``
differences; arguments routinely reach 1e6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Sequence

from jacobicross.errors import DomainError, UnsupportedError

__all__ = [
    "JacobiParams",
    "ExactPolynomial",
    "log_gamma",
    "log_beta",
    "jacobi_eval",
    "jacobi_eval_all",
    "orthonormal_eval_all",
    "jacobi_norm_sq",
    "log_jacobi_norm_sq",
    "jacobi_deriv",
    "jacobi_deriv2",
    "ode_residual",
    "rodrigues_exact",
    "RODRIGUES_MAX_DEGREE",
]

_EULER_GAMMA = 0.5772156649015329

# zeta(k) - 1 for k = 2, 3, ...
_ZETA_MINUS_ONE = (
    0.6449340668482264, 0.2020569031595943, 0.08232323371113819,
    0.03692775514336993, 0.01734306198444914, 0.008349277381922827,
    0.00407735619794434, 0.0020083928260822143, 0.0009945751278180853,
    0.0004941886041194645, 0.0002460865533080483, 0.00012271334757848915,
    6.124813505870483e-05, 3.058823630702049e-05, 1.528225940865187e-05,
    7.637197637899763e-06, 3.81729326499984e-06, 1.908212716553939e-06,
    9.539620338727962e-07, 4.769329867878064e-07, 2.38450502727733e-07,
    1.1921992596531106e-07, 5.960818905125948e-08, 2.980350351465228e-08,
    1.4901554828365043e-08, 7.45071178983543e-09, 3.725334024788457e-09,
    1.862659723513049e-09, 9.313274324196682e-10, 4.656629065033784e-10,
    2.3283118336765053e-10, 1.164155017270052e-10, 5.820772087902701e-11,
    2.9103850444971e-11, 1.4551921891041985e-11, 7.275959835057482e-12,
    3.637979547378651e-12, 1.818989650307066e-12, 9.094947840263888e-13,
)


def _lgamma_two_plus(z: float) -> float:
    # ln Gamma(2 + z) for |z| <= 1/2; the series has radius 2.
    total = 0.0
    zk = -z
    for k, c in enumerate(_ZETA_MINUS_ONE, start=2):
        zk *= -z
        term = c * zk / k
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return z * (1.0 - _EULER_GAMMA) + total


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``.

    ``math.lgamma`` loses relative accuracy next to the zeros at 1 and 2,
    so on [0.5, 2.5] a zeta-series expansion about 2 is used instead.
    """
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    x = float(x)
    if 1.5 <= x <= 2.5:
        return _lgamma_two_plus(x - 2.0)
    if 0.5 <= x < 1.5:
        z = x - 1.0
        return _lgamma_two_plus(z) - math.log1p(z)
    return math.lgamma(x)


def log_beta(a: float, b: float) -> float:
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameters (alpha, beta); both must exceed -1."""

    alpha: Real
    beta: Real

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, Real) or not math.isfinite(v) or not v > -1:
                raise DomainError(f"{name} must be a finite real > -1, got {v!r}")

    @property
    def a(self) -> float:
        return float(self.alpha)

    @property
    def b(self) -> float:
        return float(self.beta)

    def swapped(self) -> "JacobiParams":
        return JacobiParams(self.beta, self.alpha)

    def shifted(self, k: int = 1) -> "JacobiParams":
        return JacobiParams(self.alpha + k, self.beta + k)

    def log_total_mass(self) -> float:
        """log of the integral of (1-x)^alpha (1+x)^beta over [-1, 1]."""
        a, b = self.a, self.b
        return (a + b + 1.0) * math.log(2.0) + log_beta(a + 1.0, b + 1.0)


def _check_degree(ell: int) -> int:
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise DomainError(f"degree must be a non-negative integer, got {ell!r}")
    return ell


def jacobi_eval_all(params: JacobiParams, m: int, x: float) -> list[float]:
    """Values P_0(x), ..., P_m(x) from the classical three-term recurrence."""
    _check_degree(m)
    a, b = params.a, params.b
    x = float(x)
    out = [1.0]
    if m == 0:
        return out
    s = a + b
    out.append((a + 1.0) + 0.5 * (s + 2.0) * (x - 1.0))
    d = a * a - b * b
    p_prev, p = 1.0, out[1]
    for n in range(1, m):
        t = 2.0 * n + s
        c1 = 2.0 * (n + 1) * (n + s + 1.0) * t
        c2 = (t + 1.0) * ((t + 2.0) * t * x + d)
        c3 = 2.0 * (n + a) * (n + b) * (t + 2.0)
        p_prev, p = p, (c2 * p - c3 * p_prev) / c1
        out.append(p)
    return out


def jacobi_eval(params: JacobiParams, ell: int, x: float) -> float:
    """P_ell^{(alpha, beta)}(x)."""
    return jacobi_eval_all(params, _check_degree(ell), x)[-1]


def log_jacobi_norm_sq(params: JacobiParams, ell: int) -> float:
    _check_degree(ell)
    a, b = params.a, params.b
    s1 = a + b + 1.0
    head = s1 * math.log(2.0) + log_gamma(ell + a + 1.0) + log_gamma(ell + b + 1.0)
    if ell == 0:
        # (a+b+1) Gamma(a+b+1) = Gamma(a+b+2); finite even when a+b+1 = 0
        return head - log_gamma(s1 + 1.0)
    return head - math.log(2.0 * ell + s1) - log_gamma(ell + 1.0) - log_gamma(ell + s1)


def jacobi_norm_sq(params: JacobiParams, ell: int) -> float:
    """Weighted L2 norm squared h_ell of P_ell over [-1, 1]."""
    return math.exp(log_jacobi_norm_sq(params, ell))


def _recurrence_coeffs(a: float, b: float, n: int) -> tuple[float, float]:
    """Diagonal entry a_n and off-diagonal b_n (n >= 1) of the Jacobi matrix."""
    s = a + b
    if n == 0:
        return (b - a) / (s + 2.0), 0.0
    t = 2.0 * n + s
    diag = (b - a) * s / (t * (t + 2.0))
    if n == 1:
        off_sq = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) ** 2 * (3.0 + s))
    else:
        off_sq = 4.0 * n * (n + a) * (n + b) * (n + s) / (t * t * (t + 1.0) * (t - 1.0))
    return diag, math.sqrt(off_sq)


def jacobi_matrix(params: JacobiParams, n: int) -> tuple[list[float], list[float]]:
    """Diagonal (length n) and off-diagonal (length n-1) of the symmetric Jacobi matrix."""
    a, b = params.a, params.b
    diag = [_recurrence_coeffs(a, b, k)[0] for k in range(n)]
    off = [_recurrence_coeffs(a, b, k)[1] for k in range(1, n)]
    return diag, off


def orthonormal_eval_all(params: JacobiParams, m: int, x: float) -> list[float]:
    """Orthonormal values P_l(x)/sqrt(h_l) for l = 0..m.

    The recurrence runs on the orthonormal polynomials directly, so the
    values stay O(1) in the interior for any degree.
    """
    _check_degree(m)
    a, b = params.a, params.b
    x = float(x)
    p = math.exp(-0.5 * params.log_total_mass())
    out = [p]
    p_prev = 0.0
    diag, off = _recurrence_coeffs(a, b, 0)
    for n in range(m):
        diag_next, off_next = _recurrence_coeffs(a, b, n + 1)
        p_prev, p = p, ((x - diag) * p - off * p_prev) / off_next
        out.append(p)
        diag, off = diag_next, off_next
    return out


def jacobi_deriv(params: JacobiParams, ell: int, x: float) -> float:
    """d/dx P_ell(x) via P_ell' = (ell+a+b+1)/2 * P_{ell-1}^{(a+1, b+1)}."""
    _check_degree(ell)
    if ell == 0:
        return 0.0
    s = params.a + params.b
    return 0.5 * (ell + s + 1.0) * jacobi_eval(params.shifted(1), ell - 1, x)


def jacobi_deriv2(params: JacobiParams, ell: int, x: float) -> float:
    _check_degree(ell)
    if ell < 2:
        return 0.0
    s = params.a + params.b
    return 0.25 * (ell + s + 1.0) * (ell + s + 2.0) * jacobi_eval(params.shifted(2), ell - 2, x)


def ode_residual(params: JacobiParams, ell: int, x: float) -> float:
    """Residual of the Jacobi differential equation at y = P_ell, for |x| < 1."""
    if not abs(x) < 1:
        raise DomainError(f"ode_residual requires |x| < 1, got {x!r}")
    a, b = params.a, params.b
    y = jacobi_eval(params, ell, x)
    dy = jacobi_deriv(params, ell, x)
    d2y = jacobi_deriv2(params, ell, x)
    return math.fsum(
        [
            (1.0 - x * x) * d2y,
            (b - a - (a + b + 2.0) * x) * dy,
            ell * (ell + a + b + 1.0) * y,
        ]
    )


RODRIGUES_MAX_DEGREE = 12


@dataclass(frozen=True)
class ExactPolynomial:
    """Exact rational coefficients, ascending powers of x."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or (len(self.coefficients) > 1 and self.coefficients[-1] == 0):
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return ExactPolynomial(tuple(_poly_trim(_poly_mul(self.coefficients, other.coefficients))))


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, u in enumerate(p):
        if u:
            for j, v in enumerate(q):
                out[i + j] += u * v
    return out


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _as_exact(v: Real, name: str) -> Fraction:
    if isinstance(v, Rational):
        return Fraction(v)
    f = Fraction(v)
    if f.limit_denominator(10**6) != f:
        raise UnsupportedError(f"{name}={v!r} is not a small-denominator rational")
    return f


def _falling(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out


def rodrigues_exact(params: JacobiParams, ell: int) -> ExactPolynomial:
    """Exact P_ell from a Leibniz expansion of the Rodrigues derivative.

    The ell-th derivative of (1-x)^(ell+a) (1+x)^(ell+b), divided by the
    weight, is sum_k C(ell,k) (-1)^k (ell+a)_k (ell+b)_(ell-k) (1-x)^(ell-k) (1+x)^k
    with falling factorials (.)_k. Independent of the recurrence.
    """
    _check_degree(ell)
    if ell > RODRIGUES_MAX_DEGREE:
        raise UnsupportedError(f"rodrigues_exact supports ell <= {RODRIGUES_MAX_DEGREE}")
    a = _as_exact(params.alpha, "alpha")
    b = _as_exact(params.beta, "beta")
    one_minus = [Fraction(1), Fraction(-1)]
    one_plus = [Fraction(1), Fraction(1)]
    powers_minus = [[Fraction(1)]]
    powers_plus = [[Fraction(1)]]
    for _ in range(ell):
        powers_minus.append(_poly_mul(powers_minus[-1], one_minus))
        powers_plus.append(_poly_mul(powers_plus[-1], one_plus))
    total = [Fraction(0)] * (ell + 1)
    for k in range(ell + 1):
        c = math.comb(ell, k) * (-1) ** k * _falling(ell + a, k) * _falling(ell + b, ell - k)
        for i, v in enumerate(_poly_mul(powers_minus[ell - k], powers_plus[k])):
            total[i] += c * v
    scale = Fraction((-1) ** ell, 2**ell * math.factorial(ell))
    return ExactPolynomial(tuple(_poly_trim([scale * c for c in total])))
