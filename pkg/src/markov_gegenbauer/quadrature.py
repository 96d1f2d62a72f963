"""Independent oracles for the sharp Markov constant.

Two routes reproduce the constant without touching the parity-split Gram
machinery: a coefficient-space matrix assembled from the derivative
expansions, and a Gauss-Gegenbauer quadrature realization of the Rayleigh
quotient over the raw (unnormalized) polynomial basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from .basis import (
    Lambda,
    _lam,
    derivative_expansion,
    eval_gegenbauer,
    eval_gegenbauer_derivative,
)
from .spectral import dominant_eig, generalized_dominant

__all__ = [
    "QuadratureRule",
    "gauss_gegenbauer",
    "gram_matrices",
    "oracle_constant_coefficient",
    "oracle_constant_quadrature",
    "rayleigh_sample",
]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int


def total_mass(lam: Lambda | float) -> float:
    """Integral of the weight over [-1,1]: sqrt(pi) Gamma(lam+1/2)/Gamma(lam+1)."""
    lv = _lam(lam)
    return math.exp(0.5 * math.log(math.pi) + math.lgamma(lv + 0.5) - math.lgamma(lv + 1.0))


def _monic_recurrence_b(q: int, lv: float) -> np.ndarray:
    """b_k of the monic recurrence pi_{k+1} = t pi_k - b_k pi_{k-1}, k=1..q-1."""
    b = np.empty(max(q - 1, 0))
    for k in range(1, q):
        if k == 1:
            b[0] = 1.0 / (2.0 * (1.0 + lv))
        else:
            b[k - 1] = k * (k + 2.0 * lv - 1.0) / (4.0 * (k + lv) * (k + lv - 1.0))
    return b


@lru_cache(maxsize=512)
def _gauss_cached(q: int, lv: float) -> QuadratureRule:
    b = _monic_recurrence_b(q, lv)
    nodes, vecs = scipy.linalg.eigh_tridiagonal(np.zeros(q), np.sqrt(b))
    weights = total_mass(lv) * vecs[0, :] ** 2
    # the rule is symmetric about 0; enforce it exactly
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, exactness_degree=2 * q - 1)


def gauss_gegenbauer(q: int, lam: Lambda | float) -> QuadratureRule:
    """q-node Gauss rule for the Gegenbauer weight, exact through degree 2q-1."""
    if q < 1:
        raise ValueError("node count must be at least 1")
    return _gauss_cached(q, _lam(lam))


def _basis_tables(n: int, lam: Lambda | float, nodes: np.ndarray):
    """Values and derivatives of the raw basis C_1..C_n at the nodes."""
    v = np.empty((n, nodes.size))
    dv = np.empty((n, nodes.size))
    for k in range(1, n + 1):
        v[k - 1] = eval_gegenbauer(k, lam, nodes)
        dv[k - 1] = eval_gegenbauer_derivative(k, lam, nodes)
    return v, dv


def gram_matrices(n: int, lam: Lambda | float, q: int | None = None):
    """Quadrature Gram matrices (G, H) of the raw basis and its derivatives."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rule = gauss_gegenbauer(q if q is not None else 2 * n, lam)
    v, dv = _basis_tables(n, lam, rule.nodes)
    wv = v * rule.weights
    g = wv @ v.T
    h = (dv * rule.weights) @ dv.T
    return 0.5 * (g + g.T), 0.5 * (h + h.T)


def derivative_map_matrix(n: int, lam: Lambda | float) -> np.ndarray:
    """Columns hold the orthonormal-basis coefficients of each derivative.

    Row index runs over target degrees 0..n-1, column index over source
    degrees 1..n.
    """
    d = np.zeros((n, n))
    for j in range(1, n + 1):
        for target, coef in derivative_expansion(j, lam).terms:
            d[target, j - 1] = coef
    return d


def oracle_constant_coefficient(n: int, lam: Lambda | float) -> float:
    """Sharp constant via the full n x n coefficient-space Gram matrix.

    Never performs the parity split; the block structure (vanishing entries
    between mismatched parities) emerges and is checked defensively.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    d = derivative_map_matrix(n, lam)
    m = d.T @ d
    jj, kk = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    cross = np.abs(m[(jj - kk) % 2 == 1])
    if cross.size and cross.max() > 1e-12 * np.abs(m).max():
        raise RuntimeError("cross-parity block of the derivative Gram did not vanish")
    return math.sqrt(dominant_eig(m).eigenvalue)


def oracle_constant_quadrature(n: int, lam: Lambda | float) -> float:
    """Sharp constant via the generalized eigenproblem of raw-basis Grams."""
    g, h = gram_matrices(n, lam)
    return math.sqrt(generalized_dominant(h, g).eigenvalue)


def rayleigh_sample(n: int, lam: Lambda | float, coefficients) -> float:
    """||p'|| / ||p|| for p = sum coefficients[k-1] C_k, degrees 1..n.

    Any such ratio is a lower witness for the sharp constant.
    """
    c = np.asarray(coefficients, dtype=float)
    if c.shape != (n,):
        raise ValueError("coefficients must have length n (degrees 1..n)")
    if not np.any(c):
        raise ValueError("coefficients must not all be zero")
    g, h = gram_matrices(n, lam)
    return math.sqrt((c @ h @ c) / (c @ g @ c))
