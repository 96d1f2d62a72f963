"""Sharp constant of the weighted L2 Markov inequality and its extremal polynomial.

The constant for degree n is 2 sqrt(nu) where nu is the larger of the
dominant eigenvalues of the even and odd parity blocks; the winning Perron
eigenvector yields the extremal polynomial's Gegenbauer coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import Lambda, _lam, eval_gegenbauer, h_squared_ratio
from .matrices import build_matrix
from .quadrature import rayleigh_sample
from .spectral import SpectralResult, dominant_eig

__all__ = [
    "MarkovReport",
    "ExtremalPolynomial",
    "InterlacingRecord",
    "sharp_constant",
    "theorem_bound",
    "trace_bound",
    "extremal_polynomial",
    "interlacing_check",
]


@dataclass(frozen=True)
class MarkovReport:
    n: int
    lam: float
    sharp_constant: float
    branch: str  # parity of the winning block
    nu_even: float | None  # absent for n = 1 (empty even block)
    nu_odd: float
    trace_bound: float
    theorem_bound: float
    normalized: float  # sharp_constant / n^2


@dataclass(frozen=True)
class ExtremalPolynomial:
    n: int
    lam: float
    parity: str
    coefficients: tuple[tuple[int, float], ...]  # (degree, value), degree n first
    achieved_ratio: float
    samples: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class InterlacingRecord:
    m: int
    nu_tilde_m: float
    nu_m: float
    nu_tilde_next: float
    ok: bool


@lru_cache(maxsize=4096)
def _block_eig(m: int, parity: str, lv: float, tol: float) -> SpectralResult:
    return dominant_eig(build_matrix(m, parity, lv), tol=tol)


def theorem_bound(n: int, lam: Lambda | float) -> float:
    """Closed-form strict upper bound (n+1)(n+2 lam+1)/(2 sqrt(2 lam+1))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lv = _lam(lam)
    return (n + 1.0) * (n + 2.0 * lv + 1.0) / (2.0 * math.sqrt(2.0 * lv + 1.0))


def trace_bound(n: int, lam: Lambda | float) -> float:
    """2 sqrt(trace of the winning parity block), from the closed-form traces."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lv = _lam(lam)
    if n % 2 == 0:
        m = n // 2
        tr = m * (m + 1.0) * (m + lv) * (m + lv + 1.0) / (2.0 * lv + 1.0)
    else:
        m1 = (n + 1) // 2
        tr = m1 * (m1 + lv) * (m1 * m1 + lv * m1 - 0.5) / (2.0 * lv + 1.0)
    return 2.0 * math.sqrt(tr)


def sharp_constant(n: int, lam: Lambda | float, tol: float = 1e-13) -> MarkovReport:
    """Sharp Markov constant for degree n: 2 sqrt(max of the block eigenvalues)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lv = _lam(lam)
    m_even = n // 2
    m_odd = (n + 1) // 2
    nu_even = _block_eig(m_even, "even", lv, tol).eigenvalue if m_even >= 1 else None
    nu_odd = _block_eig(m_odd, "odd", lv, tol).eigenvalue
    if nu_even is not None and nu_even > nu_odd:
        nu, branch = nu_even, "even"
    else:
        nu, branch = nu_odd, "odd"
    c = 2.0 * math.sqrt(nu)
    return MarkovReport(
        n=n,
        lam=lv,
        sharp_constant=c,
        branch=branch,
        nu_even=nu_even,
        nu_odd=nu_odd,
        trace_bound=trace_bound(n, lv),
        theorem_bound=theorem_bound(n, lv),
        normalized=c / float(n * n),
    )


def extremal_polynomial(n: int, lam: Lambda | float, sample_points=()) -> ExtremalPolynomial:
    """Extremal polynomial from the winning Perron eigenvector.

    The eigenvector components (orthonormal-basis coefficients) are mapped
    through the reduced normalization ratios to Gegenbauer coefficients at
    degrees n, n-2, ...; the leading coefficient is positive and no constant
    term ever appears.  At lam = 0 the coefficients refer to the Chebyshev
    limit basis (2/k) T_k.
    """
    report = sharp_constant(n, lam)
    lv = report.lam
    if report.branch == "even":
        m = n // 2
        degrees = [2 * (j + 1) for j in range(m)]
    else:
        m = (n + 1) // 2
        degrees = [2 * j + 1 for j in range(m)]
    tau = _block_eig(m, report.branch, lv, 1e-13).eigenvector
    # coefficient at degree d is tau_d / h_d, up to one overall positive scale
    coeffs = np.array(
        [tau[i] * math.sqrt(h_squared_ratio(n, d, lv)) for i, d in enumerate(degrees)]
    )
    if coeffs[-1] < 0:
        coeffs = -coeffs
    coeffs /= np.linalg.norm(coeffs)
    full = np.zeros(n)
    for d, c in zip(degrees, coeffs):
        full[d - 1] = c
    achieved = rayleigh_sample(n, lv, full)
    pts = np.asarray(sample_points, dtype=float)
    if pts.size:
        vals = np.zeros_like(pts)
        for d, c in zip(degrees, coeffs):
            vals += c * np.asarray(eval_gegenbauer(d, lv, pts))
        samples = tuple((float(t), float(v)) for t, v in zip(pts, vals))
    else:
        samples = ()
    ordered = tuple((d, float(c)) for d, c in sorted(zip(degrees, coeffs), reverse=True))
    return ExtremalPolynomial(
        n=n,
        lam=lv,
        parity=report.branch,
        coefficients=ordered,
        achieved_ratio=achieved,
        samples=samples,
    )


def interlacing_check(m: int, lam: Lambda | float, tol: float = 1e-13) -> InterlacingRecord:
    """Strict eigenvalue interlacing of the odd/even blocks at order m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    lv = _lam(lam)
    nu_t = _block_eig(m, "odd", lv, tol).eigenvalue
    nu = _block_eig(m, "even", lv, tol).eigenvalue
    nu_t_next = _block_eig(m + 1, "odd", lv, tol).eigenvalue
    return InterlacingRecord(
        m=m,
        nu_tilde_m=nu_t,
        nu_m=nu,
        nu_tilde_next=nu_t_next,
        ok=nu_t < nu < nu_t_next,
    )
