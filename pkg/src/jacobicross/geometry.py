"""Compact rank-one symmetric spaces and their radial spectral data.

Every space is normalized to minimum sectional curvature 1.  Only radial
quantities appear, so everything is expressed in the distance ``r`` from a
fixed base point, or in ``x = cos(2 omega r)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from jacobicross.errors import DomainError, UnsupportedError
from jacobicross.quadrature import gauss_jacobi
from jacobicross.special import JacobiParams, jacobi_eval, log_gamma, log_beta

__all__ = [
    "SymmetricSpace",
    "SpaceParams",
    "sphere",
    "complex_projective",
    "quaternionic_projective",
    "cayley_plane",
    "parse_space",
    "space_params",
    "area",
    "log_area_constant",
    "volume",
    "eigenvalue",
    "max_degree_below",
    "normalizing_constant",
    "log_normalizing_constant_sq",
    "radial_eigenfunction",
    "pushforward_constant",
    "pushforward_density",
    "eigenfunction_norm_sq",
]

SPHERE, CP, HP, CAYLEY = "sphere", "cp", "hp", "cap"
_MIN_N = {SPHERE: 1, CP: 2, HP: 2}


@dataclass(frozen=True)
class SymmetricSpace:
    kind: str
    n: int = 2

    def __post_init__(self) -> None:
        if self.kind == CAYLEY:
            if self.n != 2:
                raise DomainError("the Cayley projective plane only exists for n = 2")
            return
        if self.kind not in _MIN_N:
            raise DomainError(f"unknown space kind {self.kind!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < _MIN_N[self.kind]:
            raise DomainError(f"{self.kind} requires integer n >= {_MIN_N[self.kind]}, got {self.n!r}")

    @property
    def is_sphere(self) -> bool:
        return self.kind == SPHERE

    def __str__(self) -> str:
        return "cap2" if self.kind == CAYLEY else f"{self.kind}:{self.n}"


def sphere(n: int) -> SymmetricSpace:
    return SymmetricSpace(SPHERE, n)


def complex_projective(n: int) -> SymmetricSpace:
    return SymmetricSpace(CP, n)


def quaternionic_projective(n: int) -> SymmetricSpace:
    return SymmetricSpace(HP, n)


def cayley_plane() -> SymmetricSpace:
    return SymmetricSpace(CAYLEY, 2)


def parse_space(text: str) -> SymmetricSpace:
    """Parse ``sphere:n``, ``cp:n``, ``hp:n`` or ``cap2``."""
    s = text.strip().lower()
    if s == "cap2":
        return cayley_plane()
    match = re.fullmatch(r"(sphere|cp|hp):(\d+)", s)
    if not match:
        raise DomainError(f"unrecognized space {text!r}; expected sphere:n, cp:n, hp:n or cap2")
    return SymmetricSpace(match.group(1), int(match.group(2)))


@dataclass(frozen=True)
class SpaceParams:
    d: int
    p: int
    q: int
    L: float
    omega: float
    alpha: float
    beta: float
    cut_codim: Optional[int] = None
    cut_measure: Optional[float] = None

    @property
    def jacobi(self) -> JacobiParams:
        return JacobiParams(self.alpha, self.beta)


def space_params(space: SymmetricSpace) -> SpaceParams:
    """Dimension, (p, q), diameter and derived constants; cut-locus data for non-spheres."""
    n = space.n
    if space.kind == SPHERE:
        d, p, q, L = n, 0, n - 1, math.pi
        cut = None
    elif space.kind == CP:
        d, p, q, L = 2 * n, 2 * n - 2, 1, math.pi / 2
        cut = (2, (n - 1) * math.log(math.pi) - log_gamma(n))
    elif space.kind == HP:
        d, p, q, L = 4 * n, 4 * n - 4, 3, math.pi / 2
        cut = (4, 2 * (n - 1) * math.log(math.pi) - log_gamma(2 * n))
    else:
        d, p, q, L = 16, 8, 7, math.pi / 2
        cut = (8, 4 * math.log(math.pi) + log_gamma(4) - log_gamma(8))
    omega = math.pi / (2 * L)
    alpha = (p + q - 1) / 2
    beta = (q - 1) / 2
    if cut is None:
        return SpaceParams(d, p, q, L, omega, alpha, beta)
    return SpaceParams(d, p, q, L, omega, alpha, beta, cut[0], math.exp(cut[1]))


def log_area_constant(sp: SpaceParams) -> float:
    """log of 2 pi^((p+q+1)/2) / (Gamma((p+q+1)/2) omega^(p+q))."""
    h = (sp.p + sp.q + 1) / 2
    return math.log(2.0) + h * math.log(math.pi) - log_gamma(h) - (sp.p + sp.q) * math.log(sp.omega)


def area(space: SymmetricSpace, r: float) -> float:
    """Measure of the distance sphere of radius r, for 0 < r < L."""
    sp = space_params(space)
    if not 0 < r < sp.L:
        raise DomainError(f"radius must lie in (0, {sp.L}), got {r!r}")
    wr = sp.omega * r
    return math.exp(log_area_constant(sp)) * math.sin(wr) ** (sp.p + sp.q) * math.cos(wr) ** sp.q


def volume(space: SymmetricSpace) -> float:
    """Total volume; integral of sin^a cos^b over a quarter period is B((a+1)/2, (b+1)/2)/2."""
    sp = space_params(space)
    a, b = sp.p + sp.q, sp.q
    log_int = log_beta((a + 1) / 2, (b + 1) / 2) - math.log(2.0 * sp.omega)
    return math.exp(log_area_constant(sp) + log_int)


def eigenvalue(space: SymmetricSpace, ell: int) -> float:
    """ell-th distinct eigenvalue of minus the Laplace-Beltrami operator."""
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise DomainError(f"degree must be a non-negative integer, got {ell!r}")
    sp = space_params(space)
    return 4.0 * sp.omega**2 * ell * (ell + sp.alpha + sp.beta + 1.0)


def max_degree_below(space: SymmetricSpace, T: float) -> Optional[int]:
    """Largest m with eigenvalue(m) < T, or None when T <= 0."""
    if not T > 0:
        return None
    sp = space_params(space)
    s = sp.alpha + sp.beta + 1.0
    m = max(0, int((-s + math.sqrt(s * s + T / sp.omega**2)) / 2))
    while m > 0 and eigenvalue(space, m) >= T:
        m -= 1
    while eigenvalue(space, m + 1) < T:
        m += 1
    return m


def log_normalizing_constant_sq(space: SymmetricSpace, ell: int) -> float:
    sp = space_params(space)
    p, q = sp.p, sp.q
    h = (p + q + 1) / 2
    out = (p + q + 1) * math.log(sp.omega) + log_gamma(h) + log_gamma(ell + 1.0)
    out -= h * math.log(math.pi) + log_gamma((2 * ell + p + q + 1) / 2) + log_gamma((2 * ell + q + 1) / 2)
    if ell == 0:
        # ((p+2q)/2) Gamma((p+2q)/2) = Gamma((p+2q)/2 + 1); covers the circle
        return out + log_gamma((p + 2 * q) / 2 + 1.0)
    return out + math.log((4 * ell + p + 2 * q) / 2) + log_gamma((2 * ell + p + 2 * q) / 2)


def normalizing_constant(space: SymmetricSpace, ell: int) -> float:
    """c_ell making c_ell P_ell(cos 2 omega r) a unit vector in L2(M)."""
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise DomainError(f"degree must be a non-negative integer, got {ell!r}")
    return math.exp(0.5 * log_normalizing_constant_sq(space, ell))


def radial_eigenfunction(space: SymmetricSpace, ell: int, r: float) -> float:
    sp = space_params(space)
    if not 0 <= r <= sp.L:
        raise DomainError(f"radius must lie in [0, {sp.L}], got {r!r}")
    x = math.cos(2 * sp.omega * r)
    return normalizing_constant(space, ell) * jacobi_eval(sp.jacobi, ell, x)


def pushforward_constant(space: SymmetricSpace) -> float:
    """D with pushforward density D (1-x)^alpha (1+x)^beta."""
    sp = space_params(space)
    h = (sp.p + sp.q + 1) / 2
    return math.exp(
        h * math.log(math.pi)
        - log_gamma(h)
        - (sp.p + sp.q + 1) * math.log(sp.omega)
        - (sp.p + 2 * sp.q) / 2 * math.log(2.0)
    )


def pushforward_density(space: SymmetricSpace, x: float) -> float:
    """Density of the Riemannian measure pushed to [-1, 1] by x = cos(2 omega r)."""
    if not abs(x) < 1:
        raise DomainError(f"pushforward density requires |x| < 1, got {x!r}")
    sp = space_params(space)
    return pushforward_constant(space) * (1 - x) ** sp.alpha * (1 + x) ** sp.beta


def eigenfunction_norm_sq(space: SymmetricSpace, ell: int, nodes: Optional[int] = None) -> float:
    """Integral of phi_ell(r)^2 A(r) over (0, L), after the x = cos(2 omega r) substitution.

    The integrand becomes c_ell^2 D P_ell(x)^2 against the Jacobi weight, a
    degree-2 ell polynomial, so ell + 1 Gauss-Jacobi nodes integrate it exactly.
    """
    sp = space_params(space)
    rule = gauss_jacobi(sp.jacobi, nodes or ell + 1)
    scale = normalizing_constant(space, ell) ** 2 * pushforward_constant(space)
    return scale * rule.integrate(lambda x: jacobi_eval(sp.jacobi, ell, x) ** 2)


def require_non_sphere(space: SymmetricSpace) -> SpaceParams:
    if space.is_sphere:
        raise UnsupportedError("cut-locus quantities are only defined for the projective spaces")
    return space_params(space)
