"""Batch verification: every closed-form identity, ordering and bound becomes
an executable check returning a pass/fail outcome with its worst error."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .asymptotics import bessel_first_zero, legendre_bracket
from .basis import derivative_expansion, eval_gegenbauer, eval_gegenbauer_derivative, h_squared_ratio
from .constant import extremal_polynomial, interlacing_check, sharp_constant
from .matrices import build_factor, build_matrix, prefix_and_diag, traces
from .quadrature import gram_matrices, oracle_constant_coefficient, oracle_constant_quadrature
from .spectral import dominant_eig, full_spectrum_jacobi

__all__ = ["VerifyOutcome", "DEFAULT_LAMBDA_GRID", "run_all"]

DEFAULT_LAMBDA_GRID = (-0.49, -0.25, 0.0, 0.25, 0.5, 1.0, 2.5, 10.0)

Perturb = Callable[[np.ndarray, int, str, float], np.ndarray]


@dataclass(frozen=True)
class VerifyOutcome:
    check_name: str
    parameters: str
    status: str  # "pass" | "fail"
    worst_relative_error: float
    detail: str


def _outcome(name: str, params: str, ok: bool, worst: float, detail: str = "") -> VerifyOutcome:
    return VerifyOutcome(name, params, "pass" if ok else "fail", worst, detail)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def check_h_ratio_identities(grid: Sequence[float], k_max: int) -> VerifyOutcome:
    worst = 0.0
    for lv in grid:
        for j in range(0, k_max + 1, 3):
            for k in range(0, k_max + 1, 4):
                prod = h_squared_ratio(j, k, lv) * h_squared_ratio(k, j, lv)
                worst = max(worst, abs(prod - 1.0))
                i = (j + k) // 2
                worst = max(
                    worst,
                    _rel(
                        h_squared_ratio(j, k, lv),
                        h_squared_ratio(j, i, lv) * h_squared_ratio(i, k, lv),
                    ),
                )
    return _outcome("h_ratio_identities", f"k<={k_max}", worst <= 1e-13, worst)


def check_derivative_expansion(grid: Sequence[float], j_max: int) -> VerifyOutcome:
    ts = np.linspace(-0.95, 0.95, 9)
    worst = 0.0
    for lv in grid:
        for j in range(1, j_max + 1):
            exact = np.asarray(eval_gegenbauer_derivative(j, lv, ts))
            # expansion acts on the orthonormal elements q_k = C_k / h_k:
            # q_j' = sum coef q_target, i.e. C_j' = sum coef (h_j/h_target) C_target
            approx = np.zeros_like(ts)
            for target, coef in derivative_expansion(j, lv).terms:
                ratio = math.sqrt(h_squared_ratio(j, target, lv))
                # raw-basis orientation: the degree-0 term carries sign(lam)
                sign = -1.0 if (target == 0 and lv < 0) else 1.0
                approx += sign * coef * ratio * np.asarray(eval_gegenbauer(target, lv, ts))
            scale = max(np.max(np.abs(exact)), 1e-300)
            worst = max(worst, float(np.max(np.abs(exact - approx)) / scale))
    return _outcome("derivative_expansion", f"j<={j_max}", worst <= 1e-10, worst)


def check_prefix_diag(grid: Sequence[float], k_max: int) -> VerifyOutcome:
    worst = 0.0
    for lv in grid:
        for k in range(1, k_max + 1):
            r = prefix_and_diag(k, lv)
            for a, b in (
                (r.s_summed, r.s_closed),
                (r.st_summed, r.st_closed),
                (r.d_summed, r.d_closed),
                (r.dt_summed, r.dt_closed),
            ):
                worst = max(worst, _rel(a, b))
    return _outcome("prefix_diag_identities", f"k<={k_max}", worst <= 1e-12, worst)


def check_traces(grid: Sequence[float], m_max: int, perturb: Perturb | None = None) -> VerifyOutcome:
    worst = 0.0
    ordering_ok = True
    for lv in grid:
        for m in range(1, m_max + 1):
            if perturb is None:
                t = traces(m, lv)
                tr_a_summed, tr_at_summed = t.tr_a_summed, t.tr_at_summed
            else:
                t = traces(m, lv)
                a = perturb(build_matrix(m, "even", lv).entries.copy(), m, "even", lv)
                at = perturb(build_matrix(m, "odd", lv).entries.copy(), m, "odd", lv)
                tr_a_summed, tr_at_summed = float(np.trace(a)), float(np.trace(at))
            worst = max(worst, _rel(tr_a_summed, t.tr_a_closed))
            worst = max(worst, _rel(tr_at_summed, t.tr_at_closed))
            ordering_ok &= t.tr_at_closed < t.tr_a_closed < t.tr_at_next_closed
    return _outcome(
        "trace_identities",
        f"m<={m_max}",
        worst <= 1e-12 and ordering_ok,
        worst,
        "" if ordering_ok else "trace ordering violated",
    )


def check_factor_product(grid: Sequence[float], m_max: int) -> VerifyOutcome:
    worst = 0.0
    for lv in grid:
        for m in (1, 2, 3, min(7, m_max), m_max):
            for parity in ("even", "odd"):
                a = build_matrix(m, parity, lv).entries
                c = build_factor(m, parity, lv).entries
                worst = max(worst, float(np.max(np.abs(c.T @ c - a)) / np.max(np.abs(a))))
    return _outcome("factor_product", f"m in {{1,2,3,...,{m_max}}}", worst <= 1e-13, worst)


def check_entrywise_domination(grid: Sequence[float], m_max: int) -> VerifyOutcome:
    ok = True
    for lv in grid:
        for m in range(1, m_max + 1):
            a = build_matrix(m, "even", lv).entries
            at = build_matrix(m, "odd", lv).entries
            at_next = build_matrix(m + 1, "odd", lv).entries
            ok &= bool(np.all(at < a)) and bool(np.all(a < at_next[1:, 1:]))
    return _outcome("entrywise_domination", f"m<={m_max}", ok, 0.0)


def check_spd(grid: Sequence[float], m_max: int) -> VerifyOutcome:
    ok = True
    for lv in grid:
        for m in (1, 2, m_max // 2 or 1, m_max):
            for parity in ("even", "odd"):
                try:
                    np.linalg.cholesky(build_matrix(m, parity, lv).entries)
                except np.linalg.LinAlgError:
                    ok = False
    return _outcome("positive_definiteness", f"m<={m_max}", ok, 0.0)


def check_eigen_solvers(grid: Sequence[float], m_max: int) -> VerifyOutcome:
    worst = 0.0
    trace_ok = True
    for lv in grid:
        for m in (1, 2, 5, min(11, m_max), m_max):
            for parity in ("even", "odd"):
                mat = build_matrix(m, parity, lv)
                r = dominant_eig(mat)
                vals = full_spectrum_jacobi(mat)
                worst = max(worst, _rel(r.eigenvalue, float(vals[-1])))
                trace_ok &= _rel(float(vals.sum()), float(np.trace(mat.entries))) <= 1e-12
                trace_ok &= r.eigenvalue <= float(np.trace(mat.entries)) * (1.0 + 1e-13)
                trace_ok &= bool(np.all(r.eigenvector > 0))
    return _outcome(
        "eigen_solver_agreement",
        f"m<={m_max}",
        worst <= 1e-10 and trace_ok,
        worst,
        "" if trace_ok else "trace/positivity side conditions failed",
    )


def check_eigen_ordering(grid: Sequence[float], m_max: int) -> VerifyOutcome:
    ok = True
    for lv in grid:
        for m in range(1, m_max + 1):
            ok &= interlacing_check(m, lv).ok
    return _outcome("eigenvalue_ordering", f"m<={m_max}", ok, 0.0)


def check_bounds(grid: Sequence[float], n_max: int) -> VerifyOutcome:
    ok = True
    prev = {}
    for lv in grid:
        for n in range(1, n_max + 1):
            r = sharp_constant(n, lv)
            ok &= r.sharp_constant < r.theorem_bound
            ok &= r.sharp_constant <= r.trace_bound * (1.0 + 1e-13)
            ok &= r.trace_bound <= r.theorem_bound
            ok &= r.branch == ("even" if n % 2 == 0 else "odd")
            if lv in prev:
                ok &= r.sharp_constant > prev[lv]
            prev[lv] = r.sharp_constant
    return _outcome("bound_chain_and_monotonicity", f"n<={n_max}", ok, 0.0)


def check_oracle_coefficient(grid: Sequence[float], n_max: int) -> VerifyOutcome:
    worst = 0.0
    for lv in grid:
        for n in range(1, n_max + 1):
            worst = max(
                worst, _rel(sharp_constant(n, lv).sharp_constant, oracle_constant_coefficient(n, lv))
            )
    return _outcome("oracle_coefficient", f"n<={n_max}", worst <= 1e-10, worst)


def check_oracle_quadrature(grid: Sequence[float], n_max: int) -> VerifyOutcome:
    worst = 0.0
    for lv in grid:
        for n in range(1, n_max + 1):
            c = sharp_constant(n, lv).sharp_constant
            worst = max(worst, _rel(c, oracle_constant_quadrature(n, lv)))
            worst = max(worst, _rel(oracle_constant_coefficient(n, lv), oracle_constant_quadrature(n, lv)))
    return _outcome("oracle_quadrature", f"n<={n_max}", worst <= 1e-8, worst)


def check_extremal(grid: Sequence[float], n_max: int) -> VerifyOutcome:
    worst = 0.0
    struct_ok = True
    ts = np.linspace(-1.0, 1.0, 21)
    finding = ""
    for lv in grid:
        for n in range(1, n_max + 1):
            p = extremal_polynomial(n, lv, ts)
            c = sharp_constant(n, lv).sharp_constant
            worst = max(worst, _rel(p.achieved_ratio, c))
            degs = [d for d, _ in p.coefficients]
            struct_ok &= all(d % 2 == n % 2 for d in degs) and p.coefficients[0][1] > 0
            if any(v == 0.0 for _, v in p.coefficients):
                finding = f"zero coefficient at n={n}, lam={lv} (reported, not a failure)"
            vals = np.array([v for _, v in p.samples])
            scale = max(np.max(np.abs(vals)), 1e-300)
            sign = 1.0 if n % 2 == 0 else -1.0
            worst_par = float(np.max(np.abs(vals - sign * vals[::-1])) / scale)
            struct_ok &= worst_par <= 1e-10
    return _outcome("extremal_structure", f"n<={n_max}", worst <= 1e-8 and struct_ok, worst, finding)


def check_random_witnesses(grid: Sequence[float], n_max: int, seed: int, count: int = 1000) -> VerifyOutcome:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for lv in grid:
        for n in (1, 2, 3, max(4, n_max // 2), n_max):
            c = sharp_constant(n, lv).sharp_constant
            g, h = gram_matrices(n, lv)
            x = rng.standard_normal((count, n))
            num = np.einsum("ij,jk,ik->i", x, h, x)
            den = np.einsum("ij,jk,ik->i", x, g, x)
            worst = max(worst, float(np.sqrt(np.max(num / den)) / c))
    ok = worst <= 1.0 + 1e-10
    return _outcome("random_witnesses", f"n<={n_max}, {count} draws", ok, max(worst - 1.0, 0.0))


def check_legendre_bracket(n_max: int) -> VerifyOutcome:
    ok = True
    for n in range(6, n_max + 1):
        b = legendre_bracket(n)
        c = sharp_constant(n, 0.5).sharp_constant
        ok &= b.lower <= c <= b.upper
    return _outcome("legendre_bracket", f"lam=1/2, 6<=n<={n_max}", ok, 0.0)


def check_bessel_reference() -> VerifyOutcome:
    worst = abs(bessel_first_zero(-0.5) * 2.0 / math.pi - 1.0)
    worst = max(worst, abs(bessel_first_zero(0.5) / math.pi - 1.0))
    return _outcome("bessel_reference", "nu=+-1/2", worst <= 1e-10, worst)


def check_limit_bound_surrogate(grid: Sequence[float], n_max: int) -> VerifyOutcome:
    ok = True
    for lv in grid:
        bound = 1.0 / (2.0 * math.sqrt(2.0 * lv + 1.0))
        for n in range(20, n_max + 1, 5):
            ok &= sharp_constant(n, lv).normalized < bound
    return _outcome("limit_bound_surrogate", f"20<=n<={n_max}", ok, 0.0)


def run_all(
    max_m: int,
    lambda_grid: Sequence[float] | None = None,
    seed: int = 0,
    perturb: Perturb | None = None,
) -> list[VerifyOutcome]:
    """Run every module's invariant suite; `perturb` is a fault-injection hook
    applied to built matrices inside the trace check (negative control)."""
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    grid = tuple(lambda_grid) if lambda_grid is not None else DEFAULT_LAMBDA_GRID
    n_big = 2 * max_m
    return [
        check_h_ratio_identities(grid, min(n_big, 40)),
        check_derivative_expansion(grid, min(n_big, 24)),
        check_prefix_diag(grid, max(n_big, 100)),
        check_traces(grid, max_m, perturb=perturb),
        check_factor_product(grid, max_m),
        check_entrywise_domination(grid, min(max_m, 20)),
        check_spd(grid, max_m),
        check_eigen_solvers(grid, min(max_m, 40)),
        check_eigen_ordering(grid, min(max_m, 30)),
        check_bounds(grid, n_big),
        check_oracle_coefficient(grid, n_big),
        check_oracle_quadrature(grid, min(n_big, 30)),
        check_extremal(grid, min(n_big, 20)),
        check_random_witnesses(grid, min(n_big, 20), seed),
        check_legendre_bracket(min(n_big, 40) if n_big >= 6 else 6),
        check_bessel_reference(),
        check_limit_bound_surrogate(grid, max(n_big, 25)),
    ]
