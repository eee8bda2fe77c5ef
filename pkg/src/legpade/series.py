"""Truncated Legendre-basis series: the partial sums whose endpoint
oscillation the rational resummation removes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import DomainError
from .special import legendre_eval_all

__all__ = ["ComplexSeries", "eval_partial_sum", "project_legendre_coefficient"]


@dataclass(frozen=True)
class ComplexSeries:
    """Ordered Legendre coefficients c_0 .. c_N of a truncated expansion.

    Immutable after construction; entries must be finite and there must be
    at least one.
    """

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("a series needs a one-dimensional, non-empty coefficient list")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    def __len__(self) -> int:
        return self.coefficients.size

    @property
    def order(self) -> int:
        """Highest retained Legendre order N; the series carries N+1 terms."""
        return self.coefficients.size - 1

    def scaled(self, factor: complex) -> "ComplexSeries":
        return ComplexSeries(self.coefficients * factor)


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta = {theta} outside [0, pi]")
    return theta


def _legendre_basis_at(n: int, x: np.ndarray) -> np.ndarray:
    """P_n evaluated at an array of abscissas by the Bonnet recurrence."""
    if n == 0:
        return np.ones_like(x)
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    return p


def eval_partial_sum(series: ComplexSeries, theta: float) -> complex:
    """Sum of c_l P_l(cos theta) over the retained orders.

    theta = 0 is allowed (the sum is finite everywhere); callers comparing
    against oracles that diverge in the forward direction must exclude it
    themselves.
    """
    theta = _check_theta(theta)
    p = legendre_eval_all(series.order, math.cos(theta))
    return complex(np.dot(series.coefficients, p))


def project_legendre_coefficient(f: Callable[[float], complex], n: int) -> complex:
    """Order-n Legendre coefficient of a function of theta.

    Gauss-Legendre quadrature of ((2n+1)/2) * integral of f(theta) P_n over
    d(cos theta), carried out in the theta parametrization: the sin(theta)
    Jacobian regularizes the forward-direction divergences the scattering
    oracles carry, where nodes placed in cos(theta) would stall on the
    endpoint singularity. Starts from max(64, n+9) nodes (degree 2n+16
    polynomials in cos(theta) are integrated to machine precision) and
    doubles until two successive estimates agree to 1e-11.
    """
    if n < 0:
        raise DomainError(f"projection order must be non-negative, got {n}")
    nodes = max(64, n + 9)
    previous = None
    for _ in range(7):
        x, w = leggauss(nodes)
        theta = 0.5 * math.pi * (x + 1.0)
        pn = _legendre_basis_at(n, np.cos(theta))
        fv = np.array([f(t) for t in theta], dtype=complex)
        estimate = (
            0.25 * math.pi * (2 * n + 1) * complex(np.dot(w, fv * pn * np.sin(theta)))
        )
        if previous is not None and abs(estimate - previous) <= 1e-11 * max(1.0, abs(estimate)):
            return estimate
        previous = estimate
        nodes *= 2
    return estimate
