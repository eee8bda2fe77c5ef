"""Rational resummation of a truncated Legendre series.

The approximant is a ratio of two Legendre-basis polynomials, degrees L over
M, whose coefficients are matched to the series: expanding

    (sum_m b_m P_m) * (sum_l c_l P_l)

in Legendre polynomials, the orders L+1 .. L+M are forced to vanish (an MxM
linear system for b_1..b_M with b_0 = 1) and the orders 0 .. L define the
numerator. Products of Legendre polynomials are relinearized through squared
zero-projection 3j symbols, taken from exact rational arithmetic.

The matching sums run over every coefficient the caller supplies, not just
the first L+M+1: feeding more terms of the underlying function sharpens the
match (and is what reproduces the reference worked examples, which carry the
series two orders past L+M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InsufficientCoefficientsError,
    PoleError,
    ResidualTooLargeError,
    SingularSystemError,
)
from .series import ComplexSeries, _check_theta
from .special import legendre_eval_all, threej_zero_sq_float

__all__ = [
    "PadeApproximant",
    "ConstructionReport",
    "build_denominator_system",
    "solve_denominator",
    "compute_numerator",
    "construct",
    "evaluate",
    "default_split",
]

_PIVOT_FLOOR = 1e-14
_RESIDUAL_FLOOR = 1e-8
_POLE_FLOOR = 1e-12


@dataclass(frozen=True)
class PadeApproximant:
    """Numerator a_0..a_L and denominator b_0..b_M in the Legendre basis."""

    numerator: np.ndarray
    denominator: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.numerator, dtype=complex)
        b = np.asarray(self.denominator, dtype=complex)
        if a.ndim != 1 or b.ndim != 1 or a.size < 1 or b.size < 1:
            raise ValueError("numerator and denominator must be non-empty 1-d coefficient lists")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("approximant coefficients must be finite")
        if b[0] != 1.0:
            raise ValueError(f"denominator must be normalized to b_0 = 1, got {b[0]}")
        a = a.copy(); a.flags.writeable = False
        b = b.copy(); b.flags.writeable = False
        object.__setattr__(self, "numerator", a)
        object.__setattr__(self, "denominator", b)

    @property
    def L(self) -> int:
        return self.numerator.size - 1

    @property
    def M(self) -> int:
        return self.denominator.size - 1

    def __call__(self, theta: float) -> complex:
        return evaluate(self, theta)


@dataclass(frozen=True)
class ConstructionReport:
    """Numerical health of a construction: linear-system conditioning and the
    recomputed magnitude of the enforced-zero orders."""

    condition_estimate: float
    residual: float


def default_split(n: int) -> tuple[int, int]:
    """Default (L, M) with L + M = n: equal halves, numerator gets the odd one."""
    if n < 0:
        raise DomainError(f"series order must be non-negative, got {n}")
    if n % 2 == 0:
        return n // 2, n // 2
    return (n + 1) // 2, (n - 1) // 2


def _lu_solve(a: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, float]:
    """Solve a dense complex system by LU with partial pivoting.

    Returns (solution, 1-norm condition estimate). Raises SingularSystemError
    when a pivot falls below 1e-14 * max|A|.
    """
    a = np.array(a, dtype=complex)
    m = a.shape[0]
    norm_a = np.max(np.sum(np.abs(a), axis=0))
    scale = np.max(np.abs(a))
    if scale == 0.0:
        raise SingularSystemError("coefficient matrix is identically zero", condition_estimate=math.inf)
    lu = a.copy()
    piv = np.arange(m)
    for col in range(m):
        p = col + int(np.argmax(np.abs(lu[col:, col])))
        if abs(lu[p, col]) < _PIVOT_FLOOR * scale:
            raise SingularSystemError(
                f"pivot {abs(lu[p, col]):.3e} below {_PIVOT_FLOOR:g} * max|A| = {_PIVOT_FLOOR * scale:.3e}",
                condition_estimate=math.inf,
            )
        if p != col:
            lu[[col, p]] = lu[[p, col]]
            piv[[col, p]] = piv[[p, col]]
        lu[col + 1:, col] /= lu[col, col]
        lu[col + 1:, col + 1:] -= np.outer(lu[col + 1:, col], lu[col, col + 1:])

    def back_substitute(b):
        y = b[piv].astype(complex)
        for i in range(1, m):
            y[i] -= np.dot(lu[i, :i], y[:i])
        x = y
        for i in range(m - 1, -1, -1):
            x[i] = (x[i] - np.dot(lu[i, i + 1:], x[i + 1:])) / lu[i, i]
        return x

    inv = np.column_stack([back_substitute(e) for e in np.eye(m)])
    cond = max(1.0, float(norm_a * np.max(np.sum(np.abs(inv), axis=0))))
    return back_substitute(np.asarray(rhs, dtype=complex)), cond


def _product_coefficient(c: np.ndarray, b: np.ndarray, n: int) -> complex:
    """Order-n Legendre coefficient of (sum_l c_l P_l)(sum_k b_k P_k)."""
    total = 0.0 + 0.0j
    for k in range(b.size):
        acc = 0.0 + 0.0j
        # triangle rule: only |k-n| <= m <= k+n contributes
        for m in range(max(0, n - k), min(c.size - 1, n + k) + 1):
            w = threej_zero_sq_float(k, m, n)
            if w != 0.0:
                acc += c[m] * w
        total += b[k] * acc
    return (2 * n + 1) * total


def build_denominator_system(series: ComplexSeries, L: int, M: int) -> tuple[np.ndarray, np.ndarray]:
    """Matrix and right-hand side of the vanishing conditions for b_1..b_M.

    Row j (for enforced order n = L+j): A[j-1, k-1] = sum_m c_m W(k, m, n)
    with W the squared zero-projection 3j symbol, rhs[j-1] the negated b_0
    column. Sums run over all coefficients the series carries.
    """
    if M < 1:
        raise DomainError("the denominator system needs M >= 1")
    if L < 0:
        raise DomainError("numerator degree must be non-negative")
    c = series.coefficients
    if c.size < L + M + 1:
        raise InsufficientCoefficientsError(
            f"need at least {L + M + 1} coefficients for L={L}, M={M}; series has {c.size}"
        )
    a = np.zeros((M, M), dtype=complex)
    rhs = np.zeros(M, dtype=complex)
    for j in range(1, M + 1):
        n = L + j
        for k in range(1, M + 1):
            a[j - 1, k - 1] = sum(
                c[m] * threej_zero_sq_float(k, m, n)
                for m in range(max(0, n - k), min(c.size - 1, n + k) + 1)
            )
        rhs[j - 1] = -sum(
            c[m] * threej_zero_sq_float(0, m, n)
            for m in range(max(0, n), min(c.size - 1, n) + 1)
        )
    return a, rhs


def solve_denominator(series: ComplexSeries, L: int, M: int) -> tuple[np.ndarray, float]:
    """Denominator coefficients b_0..b_M (b_0 = 1) and a condition estimate."""
    if M == 0:
        if len(series) < L + 1:
            raise InsufficientCoefficientsError(
                f"need at least {L + 1} coefficients for L={L}, M=0; series has {len(series)}"
            )
        return np.array([1.0 + 0.0j]), 1.0
    a, rhs = build_denominator_system(series, L, M)
    tail, cond = _lu_solve(a, rhs)
    residual = np.max(np.abs(a @ tail - rhs))
    norm_a = np.max(np.abs(a))
    if residual > 1e-10 * norm_a * max(1.0, np.max(np.abs(tail))):
        raise SingularSystemError(
            f"solve residual {residual:.3e} exceeds 1e-10 * |A|; system is numerically singular",
            condition_estimate=cond,
        )
    return np.concatenate([[1.0 + 0.0j], tail]), cond


def compute_numerator(series: ComplexSeries, denominator: np.ndarray, L: int, M: int) -> np.ndarray:
    """Numerator coefficients a_0..a_L for a given denominator."""
    b = np.asarray(denominator, dtype=complex)
    if b.size != M + 1:
        raise ValueError(f"denominator must carry M+1 = {M + 1} coefficients, got {b.size}")
    c = series.coefficients
    if c.size < L + M + 1:
        raise InsufficientCoefficientsError(
            f"need at least {L + M + 1} coefficients for L={L}, M={M}; series has {c.size}"
        )
    return np.array([_product_coefficient(c, b, n) for n in range(L + 1)])


def construct(series: ComplexSeries, L: int, M: int) -> tuple[PadeApproximant, ConstructionReport]:
    """Build the degree-(L, M) approximant matched to the series.

    The report carries the linear-system condition estimate and the largest
    recomputed magnitude among the enforced-zero orders L+1 .. L+M; the
    construction fails if that residual exceeds 1e-8 * max|c|.
    """
    b, cond = solve_denominator(series, L, M)
    a = compute_numerator(series, b, L, M)
    c = series.coefficients
    if M == 0:
        residual = 0.0
    else:
        residual = max(
            abs(_product_coefficient(c, b, n)) for n in range(L + 1, L + M + 1)
        )
    scale = float(np.max(np.abs(c)))
    if residual > _RESIDUAL_FLOOR * scale:
        raise ResidualTooLargeError(
            f"enforced-zero orders leave residual {residual:.3e} > {_RESIDUAL_FLOOR:g} * max|c| = "
            f"{_RESIDUAL_FLOOR * scale:.3e}",
            residual=residual,
        )
    return PadeApproximant(a, b), ConstructionReport(condition_estimate=float(cond), residual=float(residual))


def evaluate(p: PadeApproximant, theta: float) -> complex:
    """Value of the approximant at a scattering angle in [0, pi].

    Raises PoleError where the denominator is smaller than 1e-12 * sum|b_m|,
    the signature of a spurious rational pole inside the domain.
    """
    theta = _check_theta(theta)
    basis = legendre_eval_all(max(p.L, p.M), math.cos(theta))
    num = complex(np.dot(p.numerator, basis[: p.L + 1]))
    den = complex(np.dot(p.denominator, basis[: p.M + 1]))
    floor = _POLE_FLOOR * float(np.sum(np.abs(p.denominator)))
    if abs(den) < floor:
        raise PoleError(f"denominator vanishes at theta = {theta:.6g} (|Q| = {abs(den):.3e})")
    return num / den
