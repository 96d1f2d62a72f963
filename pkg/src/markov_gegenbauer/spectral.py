"""Symmetric eigenvalue machinery: power iteration, cyclic Jacobi, and a
Cholesky-reduced generalized solver used by the quadrature oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = [
    "SpectralResult",
    "ConvergenceError",
    "dominant_eig",
    "full_spectrum_jacobi",
    "generalized_dominant",
]

_STALL_WINDOW = 500


@dataclass(frozen=True)
class SpectralResult:
    eigenvalue: float
    eigenvector: np.ndarray  # unit norm, last component positive
    iterations: int
    residual: float  # ||A v - nu v||_2


class ConvergenceError(RuntimeError):
    """Raised when power iteration fails to reach the requested residual."""

    def __init__(self, message: str, best: SpectralResult):
        super().__init__(message)
        self.best = best


def _as_array(matrix) -> np.ndarray:
    a = getattr(matrix, "entries", matrix)
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    return a


def _sign_fix(v: np.ndarray) -> np.ndarray:
    return -v if v[-1] < 0 else v


def dominant_eig(matrix, tol: float = 1e-13, max_iter: int = 100000) -> SpectralResult:
    """Largest eigenvalue and Perron vector of an entrywise-positive SPD matrix.

    Power iteration starting from the all-ones vector, which has positive
    overlap with the Perron vector.  Convergence is declared when the
    relative residual ||A v - nu v|| / nu drops below tol.  If the residual
    plateaus, falls back to the Jacobi full-spectrum solver.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _as_array(matrix)
    m = a.shape[0]
    v = np.full(m, 1.0 / np.sqrt(m))
    best_res = np.inf
    stall = 0
    for it in range(1, max_iter + 1):
        w = a @ v
        nu = float(v @ w)
        res = float(np.linalg.norm(w - nu * v))
        if res <= tol * abs(nu):
            return SpectralResult(nu, _sign_fix(v), it, res)
        if res < best_res * (1.0 - 1e-3):
            best_res = res
            stall = 0
        else:
            stall += 1
            if stall >= _STALL_WINDOW:
                return _jacobi_dominant(a, it)
        v = w / np.linalg.norm(w)
    w = a @ v
    nu = float(v @ w)
    res = float(np.linalg.norm(w - nu * v))
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations (residual {res:.3e})",
        SpectralResult(nu, _sign_fix(v), max_iter, res),
    )


def _jacobi_dominant(a: np.ndarray, iterations: int) -> SpectralResult:
    vals, vecs = _jacobi(a, 1e-14, want_vectors=True)
    idx = int(np.argmax(vals))
    v = _sign_fix(vecs[:, idx])
    nu = float(vals[idx])
    res = float(np.linalg.norm(a @ v - nu * v))
    return SpectralResult(nu, v, iterations, res)


def _jacobi(matrix, tol: float, want_vectors: bool = False):
    a = _as_array(matrix).copy()
    m = a.shape[0]
    vecs = np.eye(m) if want_vectors else None
    if m == 1:
        return a.diagonal().copy(), vecs
    for _ in range(100):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        diag_mass = np.linalg.norm(a.diagonal())
        if off <= tol * max(diag_mass, np.finfo(float).tiny):
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # asymptotic small-angle rotation
                elif diff == 0.0:
                    t = 1.0
                else:
                    theta = 0.5 * diff / apq
                    t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                if vecs is not None:
                    vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
                    vecs[:, p] = c * vp - s * vq
                    vecs[:, q] = s * vp + c * vq
    order = np.argsort(a.diagonal())
    vals = a.diagonal()[order].copy()
    if vecs is not None:
        vecs = vecs[:, order]
    return vals, vecs


def full_spectrum_jacobi(matrix, tol: float = 1e-14) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi."""
    a = _as_array(matrix)
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be symmetric")
    vals, _ = _jacobi(a, tol)
    return vals


def generalized_dominant(h, g) -> SpectralResult:
    """Largest generalized eigenvalue of H x = theta G x for SPD G.

    Reduces via the Cholesky factor of G and solves the reduced symmetric
    problem with a library eigensolver; the returned vector maximizes the
    quotient (x^T H x)/(x^T G x).
    """
    hm = _as_array(h)
    gm = _as_array(g)
    try:
        cho = np.linalg.cholesky(gm)
    except np.linalg.LinAlgError as exc:
        raise ValueError("G must be symmetric positive definite") from exc
    tmp = scipy.linalg.solve_triangular(cho, hm, lower=True)
    reduced = scipy.linalg.solve_triangular(cho, tmp.T, lower=True)
    reduced = 0.5 * (reduced + reduced.T)
    vals, vecs = np.linalg.eigh(reduced)
    theta = float(vals[-1])
    x = scipy.linalg.solve_triangular(cho.T, vecs[:, -1], lower=False)
    x = _sign_fix(x / np.linalg.norm(x))
    res = float(np.linalg.norm(hm @ x - theta * (gm @ x)))
    return SpectralResult(theta, x, 0, res)
