"""Gram matrices of the parity-split derivative map and their closed forms.

The derivative of a polynomial expanded in the orthonormal Gegenbauer basis
splits into an even-degree and an odd-degree block.  This module builds the
upper-triangular factors of both blocks, the symmetric positive definite
Gram matrices, and the closed-form prefix sums, diagonal entries and traces
used to cross-check them.

Every quantity is normalized by the common factor Gamma(2 lam + 1), which
cancels in all matrix entries and all identities; with that reduction each
coefficient is a finite product of rational factors, well defined for every
lam > -1/2 including lam = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Lambda, _lam

__all__ = [
    "CoefficientSet",
    "PrefixDiag",
    "TriFactor",
    "SpdMatrix",
    "TraceReport",
    "seq_coefficients",
    "prefix_and_diag",
    "build_matrix",
    "build_factor",
    "traces",
]

PARITIES = ("even", "odd")


def _check_parity(parity: str) -> None:
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError("matrix order m must be at least 1")


@dataclass(frozen=True)
class CoefficientSet:
    """Squared row/column coefficients of the triangular factors at index k."""

    k: int
    alpha_sq: float
    beta_sq: float
    alpha_tilde_sq: float
    beta_tilde_sq: float


@dataclass(frozen=True)
class PrefixDiag:
    """Prefix sums of squared row coefficients and the induced diagonal entries.

    Each quantity comes in a directly-summed and a closed-form variant; the
    two must agree to ~1e-12 relative (checked by the verify suite).
    """

    k: int
    s_summed: float
    s_closed: float
    st_summed: float
    st_closed: float
    d_summed: float
    d_closed: float
    dt_summed: float
    dt_closed: float


@dataclass(frozen=True)
class TriFactor:
    m: int
    parity: str
    entries: np.ndarray  # upper triangular, entry (k,i) = alpha_k beta_i


@dataclass(frozen=True)
class SpdMatrix:
    m: int
    parity: str
    entries: np.ndarray  # dense symmetric positive definite


@dataclass(frozen=True)
class TraceReport:
    m: int
    tr_a_summed: float
    tr_a_closed: float
    tr_at_summed: float
    tr_at_closed: float
    tr_at_next_closed: float


def _alpha_sq(k: int, lv: float) -> float:
    # (2k + lam - 1) prod_{r=1}^{2k-2} (r + 2 lam)/r / (2k - 1)
    p = (2 * k + lv - 1.0) / (2 * k - 1.0)
    for r in range(1, 2 * k - 1):
        p *= (r + 2.0 * lv) / r
    return p

def _beta_sq(k: int, lv: float) -> float:
    # (2k + lam) 2k prod_{r=1}^{2k-1} r/(r + 2 lam)
    p = (2 * k + lv) * 2.0 * k
    for r in range(1, 2 * k):
        p *= r / (r + 2.0 * lv)
    return p

def _alpha_tilde_sq(k: int, lv: float) -> float:
    if k == 1:
        # lam Gamma(2 lam)/Gamma(2 lam + 1) = 1/2 for every lam, incl. lam = 0
        return 0.5
    # (2k + lam - 2) prod_{i=1}^{2k-3} (2 lam + i)/i / (2k - 2)
    p = (2 * k + lv - 2.0) / (2 * k - 2.0)
    for i in range(1, 2 * k - 2):
        p *= (2.0 * lv + i) / i
    return p

def _beta_tilde_sq(k: int, lv: float) -> float:
    # (2k + lam - 1)(2k - 1) prod_{i=1}^{2k-2} i/(2 lam + i)
    p = (2 * k + lv - 1.0) * (2 * k - 1.0)
    for i in range(1, 2 * k - 1):
        p *= i / (2.0 * lv + i)
    return p


def seq_coefficients(k: int, lam: Lambda | float) -> CoefficientSet:
    """The four squared coefficient values at index k >= 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lv = _lam(lam)
    return CoefficientSet(
        k=k,
        alpha_sq=_alpha_sq(k, lv),
        beta_sq=_beta_sq(k, lv),
        alpha_tilde_sq=_alpha_tilde_sq(k, lv),
        beta_tilde_sq=_beta_tilde_sq(k, lv),
    )


def _d_closed(k: int, lv: float) -> float:
    return 2.0 * k * (k + lv) * (2 * k + lv) / (2.0 * lv + 1.0)

def _dt_closed(k: int, lv: float) -> float:
    return (2 * k - 1.0) * (2 * k + lv - 1.0) * (2 * k + 2.0 * lv - 1.0) / (2.0 * (2.0 * lv + 1.0))

def _s_closed(k: int, lv: float) -> float:
    # prod_{i=1}^{2k} (2 lam + i)/i * 2k / (2 (2 lam + 1))
    p = 2.0 * k / (2.0 * (2.0 * lv + 1.0))
    for i in range(1, 2 * k + 1):
        p *= (2.0 * lv + i) / i
    return p

def _st_closed(k: int, lv: float) -> float:
    p = (2.0 * k - 1.0) / (2.0 * (2.0 * lv + 1.0))
    for i in range(1, 2 * k):
        p *= (2.0 * lv + i) / i
    return p


def prefix_and_diag(k: int, lam: Lambda | float) -> PrefixDiag:
    """Prefix sums and diagonal entries at index k, summed and in closed form."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lv = _lam(lam)
    s = sum(_alpha_sq(j, lv) for j in range(1, k + 1))
    st = sum(_alpha_tilde_sq(j, lv) for j in range(1, k + 1))
    return PrefixDiag(
        k=k,
        s_summed=s,
        s_closed=_s_closed(k, lv),
        st_summed=st,
        st_closed=_st_closed(k, lv),
        d_summed=_beta_sq(k, lv) * s,
        d_closed=_d_closed(k, lv),
        dt_summed=_beta_tilde_sq(k, lv) * st,
        dt_closed=_dt_closed(k, lv),
    )


def _beta_ratio_steps(parity: str, lv: float, m: int) -> np.ndarray:
    """ratios beta_{k+1}^2 / beta_k^2 for k = 1..m-1, as rational products."""
    steps = np.empty(max(m - 1, 0))
    for k in range(1, m):
        if parity == "even":
            # beta_{k+1}^2/beta_k^2 = (2k+2+lam)/(2k+lam) * prod_{r=2k}^{2k+1} (r+1)/(r+2lam)
            r0, off = 2 * k, lv
        else:
            # beta~_{k+1}^2/beta~_k^2, shifted one index down
            r0, off = 2 * k - 1, lv
        num = (r0 + 2.0 + off) if parity == "even" else (2 * k + 1.0 + lv)
        den = (r0 + off) if parity == "even" else (2 * k - 1.0 + lv)
        val = num / den
        for r in (r0, r0 + 1):
            val *= (r + 1.0) / (r + 2.0 * lv)
        steps[k - 1] = val
    return steps


def build_matrix(m: int, parity: str, lam: Lambda | float) -> SpdMatrix:
    """Dense symmetric Gram matrix of the chosen parity block.

    Entry (k,i), i >= k, equals sqrt(beta_i^2/beta_k^2) * D_k with D_k the
    closed-form diagonal entry; the beta ratios are rational products, so no
    cancellation-prone partial sums enter the entries.
    """
    _check_m(m)
    _check_parity(parity)
    lv = _lam(lam)
    d = np.array(
        [(_d_closed(k, lv) if parity == "even" else _dt_closed(k, lv)) for k in range(1, m + 1)]
    )
    steps = _beta_ratio_steps(parity, lv, m)
    a = np.zeros((m, m))
    for k in range(m):
        ratio = 1.0
        a[k, k] = d[k]
        for i in range(k + 1, m):
            ratio *= steps[i - 1]
            a[k, i] = a[i, k] = np.sqrt(ratio) * d[k]
    return SpdMatrix(m=m, parity=parity, entries=a)


def build_factor(m: int, parity: str, lam: Lambda | float) -> TriFactor:
    """Upper-triangular factor with entry (k,i) = alpha_k beta_i for i >= k."""
    _check_m(m)
    _check_parity(parity)
    lv = _lam(lam)
    if parity == "even":
        alphas = np.array([_alpha_sq(k, lv) for k in range(1, m + 1)])
        betas = np.array([_beta_sq(k, lv) for k in range(1, m + 1)])
    else:
        alphas = np.array([_alpha_tilde_sq(k, lv) for k in range(1, m + 1)])
        betas = np.array([_beta_tilde_sq(k, lv) for k in range(1, m + 1)])
    c = np.sqrt(np.outer(alphas, betas))
    c[np.tril_indices(m, -1)] = 0.0
    return TriFactor(m=m, parity=parity, entries=c)


def traces(m: int, lam: Lambda | float) -> TraceReport:
    """Traces of both parity blocks, summed from the built matrices and closed."""
    _check_m(m)
    lv = _lam(lam)

    def tr_a(mm: float) -> float:
        return mm * (mm + 1.0) * (mm + lv) * (mm + lv + 1.0) / (2.0 * lv + 1.0)

    def tr_at(mm: float) -> float:
        return mm * (mm + lv) * (mm * mm + lv * mm - 0.5) / (2.0 * lv + 1.0)

    return TraceReport(
        m=m,
        tr_a_summed=float(np.trace(build_matrix(m, "even", lv).entries)),
        tr_a_closed=tr_a(float(m)),
        tr_at_summed=float(np.trace(build_matrix(m, "odd", lv).entries)),
        tr_at_closed=tr_at(float(m)),
        tr_at_next_closed=tr_at(float(m + 1)),
    )
