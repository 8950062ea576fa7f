"""Gamma-family special functions and Legendre functions of the second kind.

Everything downstream (Hardy constants, kernel profiles, moment bounds) is
assembled from log-Gamma, digamma, trigamma and Q_0, Q_1.  The Gamma family
is delegated to scipy.special, which meets the accuracy contract on the
documented domains; Q_0 and Q_1 use closed forms arranged to stay accurate
both near the diagonal t -> 1+ and for large t, where the naive expression
(t/2) ln((t+1)/(t-1)) - 1 loses all significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .errors import DomainError

_EPS = float(np.finfo(float).eps)

# Horner depth for the large-argument series of Q_1; at t >= 2 the terms
# decay at least like 4^-k, so 40 terms are far below double precision.
_Q1_SERIES_TERMS = 40


@dataclass(frozen=True)
class SpecialValue:
    """A function value together with a bound on its evaluation error."""

    value: float
    abs_error_estimate: float


def log_gamma(x: float) -> SpecialValue:
    """ln Gamma(x) for x > 0, with an absolute error bound."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    v = float(sp.gammaln(x))
    return SpecialValue(v, 8.0 * _EPS * max(1.0, abs(v)))


def log_gamma_value(x: float) -> float:
    """ln Gamma(x) for x > 0 (bare float, no error object)."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return float(sp.gammaln(x))


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a)/Gamma(b), computed in log space to avoid overflow."""
    a, b = float(a), float(b)
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"gamma_ratio requires a, b > 0, got ({a}, {b})")
    return math.exp(float(sp.gammaln(a) - sp.gammaln(b)))


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    return float(sp.psi(x))


def trigamma(x: float) -> float:
    """psi'(x) for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"trigamma requires x > 0, got {x}")
    return float(sp.polygamma(1, x))


def _legendre_q_array(l: int, t: np.ndarray) -> np.ndarray:
    """Vectorized Q_l for l in {0, 1} on t > 1 (no domain checks)."""
    t = np.asarray(t, dtype=float)
    # ln((t+1)/(t-1)) = log1p(2/(t-1)): exact small/large-t behaviour and,
    # for t in (1, 2], t - 1 is computed without cancellation.
    big_log = np.log1p(2.0 / (t - 1.0))
    q0 = 0.5 * big_log
    if l == 0:
        return q0
    # Q_1(t) = (t/2) ln((t+1)/(t-1)) - 1.  For t >= 2 use
    # Q_1(t) = sum_{k>=1} t^{-2k}/(2k+1), which avoids the 1 - 1 cancellation.
    close = t < 2.0
    out = np.empty_like(t)
    out[close] = 0.5 * t[close] * big_log[close] - 1.0
    r = 1.0 / (t[~close] * t[~close])
    acc = np.zeros_like(r)
    for k in range(_Q1_SERIES_TERMS, 0, -1):
        acc = r * (1.0 / (2 * k + 1) + acc)
    out[~close] = acc
    return out


def legendre_q(l: int, t: float) -> float:
    """Legendre function of the second kind Q_l(t), l in {0, 1}, t > 1.

    Q_0(t) = (1/2) ln((t+1)/(t-1)) and Q_1(t) = (t/2) ln((t+1)/(t-1)) - 1.
    """
    if l not in (0, 1):
        raise DomainError(f"legendre_q implemented for l in {{0, 1}}, got {l}")
    t = float(t)
    if not t > 1.0:
        raise DomainError(f"legendre_q requires t > 1, got {t}")
    return float(_legendre_q_array(l, np.array([t]))[0])
