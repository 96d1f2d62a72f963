"""Gegenbauer polynomials, reduced normalization ratios and derivative expansions.

All normalization bookkeeping is done with finite products of rational
factors; no Gamma function is evaluated anywhere in this module.  This keeps
every quantity finite for the whole admissible parameter range, including
lam = 0 (Chebyshev limit) and lam close to -1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Lambda",
    "DerivativeExpansion",
    "eval_gegenbauer",
    "eval_gegenbauer_derivative",
    "eval_weight",
    "h_squared_ratio",
    "derivative_expansion",
]


@dataclass(frozen=True)
class Lambda:
    """Weight-exponent parameter of (1 - t^2)^(lam - 1/2); must exceed -1/2."""

    value: float

    def __post_init__(self) -> None:
        v = self.value
        if not (math.isfinite(v) and v > -0.5):
            raise ValueError("lambda must exceed -1/2")


def _lam(lam: Lambda | float) -> float:
    if isinstance(lam, Lambda):
        return lam.value
    return Lambda(float(lam)).value


@dataclass(frozen=True)
class DerivativeExpansion:
    """Expansion of the derivative of the j-th orthonormal basis element.

    ``terms`` holds (target_degree, coefficient) pairs; target degrees run
    j-1, j-3, ... down to 1 or 0, and every coefficient is positive.
    """

    degree: int
    terms: tuple[tuple[int, float], ...]


def eval_gegenbauer(k: int, lam: Lambda | float, t):
    """Evaluate the Gegenbauer polynomial C_k at t via the three-term recurrence.

    For lam = 0 and k >= 1 the rescaled Chebyshev limit (2/k) T_k(t) is
    returned, so the family stays a basis (plain C_k collapses to 0 there).
    Accepts scalars or arrays.
    """
    lv = _lam(lam)
    if k < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    if k == 0:
        out = np.ones_like(t)
    elif lv == 0.0:
        # (2/k) T_k via the Chebyshev recurrence
        p_prev = np.ones_like(t)
        p = t.copy()
        for _ in range(2, k + 1):
            p, p_prev = 2.0 * t * p - p_prev, p
        out = (2.0 / k) * p
    else:
        p_prev = np.ones_like(t)
        p = 2.0 * lv * t
        for j in range(2, k + 1):
            p, p_prev = (2.0 * (j + lv - 1.0) * t * p - (j + 2.0 * lv - 2.0) * p_prev) / j, p
        out = p if k >= 1 else p_prev
    return float(out[0]) if scalar else out


def eval_gegenbauer_derivative(k: int, lam: Lambda | float, t):
    """Derivative of eval_gegenbauer(k, lam, .) at t.

    Uses d/dt C_k = 2 lam C_{k-1}^{lam+1}; in the lam = 0 limit basis this
    becomes 2 C_{k-1}^{1}.
    """
    lv = _lam(lam)
    if k == 0:
        t = np.asarray(t, dtype=float)
        return 0.0 if t.ndim == 0 else np.zeros_like(t)
    if lv == 0.0:
        return 2.0 * np.asarray(eval_gegenbauer(k - 1, 1.0, t))
    return 2.0 * lv * np.asarray(eval_gegenbauer(k - 1, lv + 1.0, t))


def eval_weight(lam: Lambda | float, t: float) -> float:
    """The weight (1 - t^2)^(lam - 1/2); |t| >= 1 is rejected where unbounded."""
    lv = _lam(lam)
    if abs(t) > 1.0 or (abs(t) == 1.0 and lv < 0.5):
        raise ValueError("weight requires |t| < 1 (endpoint allowed only for lambda >= 1/2)")
    return (1.0 - t * t) ** (lv - 0.5)


def h_squared_ratio(j: int, k: int, lam: Lambda | float) -> float:
    """Ratio h_j^2 / h_k^2 of reduced squared norms, as a finite product.

    h_k^2 = Gamma(k + 2 lam) / (k! (k + lam)) up to a constant factor that
    cancels in every ratio.  At lam = 0 the index-0 element carries the
    rescaled limit normalization h_0^2 = 1/2 (the value of lam^2 h_0^2 as
    lam -> 0), matching the Chebyshev limit basis of eval_gegenbauer.
    """
    lv = _lam(lam)
    if j < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if j == k:
        return 1.0
    if j < k:
        return 1.0 / h_squared_ratio(k, j, lam)
    # j > k:  (k+lam)/(j+lam) * prod_{r=k}^{j-1} (r + 2 lam)/(r + 1)
    if lv == 0.0 and k == 0:
        # absorbed continuation: (k+lam)(k+2lam) / lam^2 -> 2 at k = 0
        ratio = 2.0 / (j + lv)
        for r in range(1, j):
            ratio *= r / (r + 1.0)
        return ratio
    ratio = (k + lv) / (j + lv)
    for r in range(k, j):
        ratio *= (r + 2.0 * lv) / (r + 1.0)
    return ratio


def _expansion_coefficient_sq(target: int, j: int, lv: float) -> float:
    # 4 (target+lam)^2 h_target^2 / h_j^2 as one product; the head factor
    # (t+lam)(t+1)/(t+2lam) equals 1/2 exactly at t = 0 for every lam.
    head = 0.5 if target == 0 else (target + lv) * (target + 1.0) / (target + 2.0 * lv)
    p = head
    for r in range(target + 1, j):
        p *= (r + 1.0) / (r + 2.0 * lv)
    return 4.0 * (j + lv) * p


def derivative_expansion(j: int, lam: Lambda | float) -> DerivativeExpansion:
    """Coefficients of the derivative of the j-th orthonormal element.

    The term at target degree j - 2k - 1 has coefficient
    2 (j - 2k - 1 + lam) h_{j-2k-1} / h_j, k = 0 .. floor((j-1)/2).
    Coefficients are reported as positive magnitudes; for lam < 0 the
    degree-0 term is negative in the raw basis orientation (the factor
    2 lam flips sign), which only matters when reconstructing pointwise
    values -- every norm and Gram computation uses the squares.
    """
    lv = _lam(lam)
    if j < 1:
        raise ValueError("degree must be at least 1")
    terms = []
    for k in range((j - 1) // 2 + 1):
        target = j - 2 * k - 1
        coef = math.sqrt(_expansion_coefficient_sq(target, j, lv))
        terms.append((target, coef))
    return DerivativeExpansion(degree=j, terms=tuple(terms))
