"""Convolution of radial functions with the Riesz kernel |x|^{-(d-2s)}.

Computes I(rho) = int_{R^d} f(|q|) |p - q|^{-(d-2s)} dq at |p| = rho for
d in {1, 2, 3} by reducing the angular integral in closed form (d = 1, 3)
or to a Gauss hypergeometric factor (d = 2), then integrating radially with
adaptive quadrature split at the kernel diagonal u = rho and at any extra
scale the integrand carries.

The d = 2 angular factor int_0^{2pi} (a - b cos phi)^{-(1-s)} dphi is
2 pi a^{-(1-s)} 2F1(c/2, (c+1)/2; 1; (b/a)^2) with c = 1 - s.  Near the
diagonal (b/a -> 1) the hypergeometric argument rounds to 1 in double
precision, so there we switch to the x -> 1 connection formula with
y = 1 - x computed from the exact factorization
y = ((u-rho)(u+rho)/(u^2+rho^2))^2, which keeps full accuracy however close
u is to rho.  For s = 1/2 the factor is a complete elliptic integral and
scipy's ellipkm1 evaluates it stably.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

import numpy as np
from scipy import integrate
from scipy import special as sp

from .errors import DomainError, QuadratureError

_CONNECTION_SWITCH = 1e-8  # use the x -> 1 connection formula below this 1-x


def _ang2d(u: float, rho: float, s: float) -> float:
    """int_0^{2pi} (rho^2 + u^2 - 2 rho u cos phi)^{s-1} dphi."""
    a = rho * rho + u * u
    if s == 0.5:
        # 4 K(m) / (u + rho) with 1 - m = ((u-rho)/(u+rho))^2.
        m1 = ((u - rho) / (u + rho)) ** 2
        return 4.0 * float(sp.ellipkm1(m1)) / (u + rho)
    c = 1.0 - s
    y = ((u - rho) * (u + rho) / a) ** 2  # = 1 - (2 rho u / a)^2, exactly
    if y > _CONNECTION_SWITCH:
        f = float(sp.hyp2f1(0.5 * c, 0.5 * (c + 1.0), 1.0, 1.0 - y))
    else:
        # Connection formula at unit argument, parameters (a1, b1; 1):
        # F = G1 * F(a1, b1; 1-mu; y) + y^mu * G2 * F(1-a1, 1-b1; 1+mu; y),
        # mu = 1 - a1 - b1 = s - 1/2.
        a1 = 0.5 * c
        b1 = 0.5 * (c + 1.0)
        mu = s - 0.5
        g1 = sp.gamma(mu) / (sp.gamma(1.0 - a1) * sp.gamma(1.0 - b1))
        g2 = sp.gamma(-mu) / (sp.gamma(a1) * sp.gamma(b1))
        f = g1 * float(sp.hyp2f1(a1, b1, 1.0 - mu, y))
        f += y**mu * g2 * float(sp.hyp2f1(1.0 - a1, 1.0 - b1, 1.0 + mu, y))
    return 2.0 * math.pi * a ** (-c) * f


def _radial_weight(d: int, s: float, rho: float) -> Callable[[float], float]:
    """Weight w(u) with I = int_0^inf f(u) w(u) du."""
    if d == 1:
        e = 2.0 * s - 1.0

        def w1(u: float) -> float:
            return abs(rho - u) ** e + (rho + u) ** e

        return w1
    if d == 2:

        def w2(u: float) -> float:
            return u * _ang2d(u, rho, s)

        return w2
    if d == 3:
        if s == 0.5:

            def w3_log(u: float) -> float:
                return (2.0 * math.pi / rho) * u * math.log((u + rho) / abs(u - rho))

            return w3_log
        e = 2.0 * s - 1.0
        pref = 2.0 * math.pi / (rho * e)

        def w3(u: float) -> float:
            return pref * u * ((u + rho) ** e - abs(u - rho) ** e)

        return w3
    raise DomainError(f"riesz_convolution supports d in {{1,2,3}}, got {d}")


def riesz_convolution(
    f: Callable[[float], float],
    d: int,
    s: float,
    rho: float,
    epsrel: float = 1e-9,
    extra_breaks: Iterable[float] = (),
) -> tuple[float, float]:
    """Return (value, error_estimate) of the Riesz convolution at |p| = rho.

    ``f`` is the radial profile f(|q|); it may be singular at 0 and must
    decay fast enough that the integral converges (the caller guarantees
    this).  ``extra_breaks`` lists additional radii where ``f`` changes
    behaviour (e.g. a crossover scale), used as quadrature breakpoints.
    """
    if not 0.0 < s < d / 2.0:
        raise DomainError(f"riesz_convolution requires 0 < s < d/2, got s={s}, d={d}")
    if not rho > 0.0:
        raise DomainError(f"riesz_convolution requires rho > 0, got {rho}")
    w = _radial_weight(d, s, rho)

    def integrand(u: float) -> float:
        return f(u) * w(u)

    breaks = {0.5 * rho, rho, 2.0 * rho}
    breaks.update(b for b in extra_breaks if b > 0.0)
    pts = sorted(breaks)
    edges = [0.0] + pts
    total = 0.0
    err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = integrate.quad(integrand, lo, hi, epsrel=epsrel, epsabs=0.0, limit=200)
        total += v
        err += e
    v, e = integrate.quad(integrand, edges[-1], np.inf, epsrel=epsrel, epsabs=0.0, limit=200)
    total += v
    err += e
    return total, err


def riesz_convolution_checked(
    f: Callable[[float], float],
    d: int,
    s: float,
    rho: float,
    rel_tol: float,
    extra_breaks: Iterable[float] = (),
) -> float:
    """As riesz_convolution, raising QuadratureError if rel_tol is not met."""
    value, err = riesz_convolution(f, d, s, rho, epsrel=min(rel_tol, 1e-9),
                                   extra_breaks=extra_breaks)
    if abs(value) > 0.0 and err > rel_tol * abs(value):
        raise QuadratureError(
            f"Riesz convolution reached relative error {err / abs(value):.3e} "
            f"> {rel_tol:.3e} at rho={rho}",
            value=value,
            achieved=err,
        )
    return value
