"""Sharp Hardy constants and the Riesz-convolution profile Psi_{s,d}.

Provides C_{s,d}, the Fourier normalization b_alpha, the profile
Psi_{s,d}(alpha) governing the convolution identity

    int |p-q|^{-(d-2s)} |q|^{-alpha} dq = Psi_{s,d}(alpha) |p|^{2s-alpha},

and finite certificates for its structure: evenness about (d+2s)/2, the
midpoint identity linking Psi to C_{s,d}, and strict monotonicity on each
half, witnessed through the trigamma difference h(tau).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import riesz, specfun
from .errors import DomainError

LN2 = math.log(2.0)
LN2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class DimParams:
    """Admissible parameter tuple (d, s[, t][, gamma]).

    Requires d >= 1 integer and 0 < s < d/2; when present, 0 < t < s and
    gamma > 0.  The tighter remainder-pipeline window on t is enforced at
    the pipeline entry, not here.
    """

    d: int
    s: float
    t: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f"d must be a positive integer, got {self.d}")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "s", float(self.s))
        if not 0.0 < self.s < self.d / 2.0:
            raise DomainError(f"s must satisfy 0 < s < d/2, got s={self.s}, d={self.d}")
        if self.t is not None:
            object.__setattr__(self, "t", float(self.t))
            if not 0.0 < self.t < self.s:
                raise DomainError(f"t must satisfy 0 < t < s, got t={self.t}, s={self.s}")
        if self.gamma is not None:
            object.__setattr__(self, "gamma", float(self.gamma))
            if not self.gamma > 0.0:
                raise DomainError(f"gamma must be positive, got {self.gamma}")

    @property
    def theta(self) -> float:
        if self.t is None:
            raise DomainError("theta = t/s needs t")
        return self.t / self.s

    @property
    def midpoint(self) -> float:
        """Symmetry center (d + 2s)/2 of the profile Psi_{s,d}."""
        return 0.5 * (self.d + 2.0 * self.s)

    def with_t(self, t: float) -> "DimParams":
        return replace(self, t=t)


def hardy_constant(p: DimParams) -> float:
    """Sharp constant C_{s,d} = 2^{2s} Gamma((d+2s)/4)^2 / Gamma((d-2s)/4)^2."""
    d, s = p.d, p.s
    lg = specfun.log_gamma_value
    return math.exp(2.0 * s * LN2 + 2.0 * (lg((d + 2 * s) / 4.0) - lg((d - 2 * s) / 4.0)))


def b_const(alpha: float, d: int | None = None) -> float:
    """Fourier normalization b_alpha = 2^{alpha/2} Gamma(alpha/2)."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise DomainError(f"b_const requires alpha > 0, got {alpha}")
    if d is not None and not alpha < d:
        raise DomainError(f"b_const requires alpha < d, got alpha={alpha}, d={d}")
    return math.exp(0.5 * alpha * LN2 + specfun.log_gamma_value(0.5 * alpha))


def _check_alpha(p: DimParams, alpha: float) -> None:
    if not 2.0 * p.s < alpha < p.d:
        raise DomainError(
            f"alpha must lie in (2s, d) = ({2 * p.s}, {p.d}), got {alpha}"
        )


def psi_function(p: DimParams, alpha: float) -> float:
    """Profile value Psi_{s,d}(alpha) for alpha in (2s, d), Gamma-ratio form."""
    _check_alpha(p, alpha)
    d, s = p.d, p.s
    lg = specfun.log_gamma_value
    logv = (
        0.5 * d * math.log(math.pi)
        + lg(s)
        - lg(0.5 * (d - 2 * s))
        + lg(0.5 * (alpha - 2 * s))
        + lg(0.5 * (d - alpha))
        - lg(0.5 * (d - alpha + 2 * s))
        - lg(0.5 * alpha)
    )
    return math.exp(logv)


def psi_function_bform(p: DimParams, alpha: float) -> float:
    """Psi_{s,d}(alpha) assembled from b-constants; equals psi_function."""
    _check_alpha(p, alpha)
    d, s = p.d, p.s
    num = b_const(2 * s) * b_const(alpha - 2 * s) * b_const(d - alpha)
    den = b_const(d - 2 * s) * b_const(d - alpha + 2 * s) * b_const(alpha)
    return math.exp(0.5 * d * LN2PI) * num / den


def psi_midpoint_identity_value(p: DimParams) -> float:
    """(2 pi)^{d/2} b_{2s} b_{d-2s}^{-1} C_{s,d}^{-1}: the midpoint value."""
    return (
        math.exp(0.5 * p.d * LN2PI)
        * b_const(2 * p.s)
        / (b_const(p.d - 2 * p.s) * hardy_constant(p))
    )


@dataclass(frozen=True)
class PsiProfile:
    """Sampled profile with structural certificate flags."""

    alpha_grid: np.ndarray
    values: np.ndarray
    midpoint: float
    midpoint_value: float
    even_ok: bool = field(default=False)
    midpoint_ok: bool = field(default=False)
    monotone_ok: bool = field(default=False)

    @property
    def all_ok(self) -> bool:
        return self.even_ok and self.midpoint_ok and self.monotone_ok


def psi_profile(p: DimParams, n: int = 64, rel_tol: float = 1e-10) -> PsiProfile:
    """Evaluate Psi on an n-point symmetric grid and certify its structure."""
    if n < 16:
        raise DomainError(f"psi_profile needs n >= 16 grid points, got {n}")
    grid = np.linspace(2.0 * p.s, float(p.d), n + 2)[1:-1]
    vals = np.array([psi_function(p, a) for a in grid])
    mid = p.midpoint
    mid_val = psi_function(p, mid)

    even_err = np.abs(vals - vals[::-1]) / np.abs(vals)
    even_ok = bool(np.max(even_err) <= rel_tol)

    ident = psi_midpoint_identity_value(p)
    midpoint_ok = bool(abs(mid_val - ident) <= rel_tol * abs(ident))

    left = vals[grid < mid]
    right = vals[grid > mid]
    monotone_ok = bool(np.all(np.diff(left) < 0.0) and np.all(np.diff(right) > 0.0))

    return PsiProfile(
        alpha_grid=grid,
        values=vals,
        midpoint=mid,
        midpoint_value=mid_val,
        even_ok=even_ok,
        midpoint_ok=midpoint_ok,
        monotone_ok=monotone_ok,
    )


def monotonicity_witness(p: DimParams, tau_grid: np.ndarray) -> np.ndarray:
    """h(tau) = psi'(tau) - psi'(T+s-tau) with T = (d-2s)/2, on (0, T+s).

    h is odd about (T+s)/2 and strictly positive to the left of it, which
    is what forces the strict monotonicity of the profile on each half.
    """
    tau = np.asarray(tau_grid, dtype=float)
    ts = 0.5 * (p.d - 2.0 * p.s) + p.s  # T + s = (d - 2s)/2 + s
    if np.any(tau <= 0.0) or np.any(tau >= ts):
        raise DomainError(f"tau grid must lie in (0, {ts})")
    return np.array([specfun.trigamma(x) - specfun.trigamma(ts - x) for x in tau])


def convolution_identity_error(
    p: DimParams, alpha: float, momentum: float, epsrel: float = 1e-7
) -> tuple[float, float, float]:
    """Quadrature vs closed form for the convolution identity.

    Returns (quadrature_value, closed_form_value, relative_error).  The
    quadrature side never touches the Gamma-ratio machinery, so this is an
    independent consistency check of psi_function.
    """
    _check_alpha(p, alpha)
    if p.d not in (1, 2, 3):
        raise DomainError("quadrature cross-check implemented for d in {1,2,3}")
    quad_val, _ = riesz.riesz_convolution(
        lambda u: u ** (-alpha), p.d, p.s, momentum, epsrel=epsrel
    )
    closed = psi_function(p, alpha) * momentum ** (2.0 * p.s - alpha)
    rel = abs(quad_val - closed) / abs(closed)
    return quad_val, closed, rel
