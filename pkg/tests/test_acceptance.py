"""Acceptance gate: ten numbered criteria, each printing one PASS/FAIL line.

Criterion 10's verifiable surrogate (normalized constants strictly below the
closed-form limit upper bound for n >= 20) is implemented exactly as stated
and is expected to FAIL: the normalized constant approaches that limit from
above, so finite n >= 20 sits slightly above it.  See the repository notes
for the measured margins; the failure is reported honestly, not patched.
"""

import math

import numpy as np
import pytest

from markov_gegenbauer.asymptotics import asymptotic_report, bessel_first_zero, legendre_bracket
from markov_gegenbauer.constant import extremal_polynomial, interlacing_check, sharp_constant
from markov_gegenbauer.matrices import build_matrix, prefix_and_diag, traces
from markov_gegenbauer.quadrature import (
    gram_matrices,
    oracle_constant_coefficient,
    oracle_constant_quadrature,
)
from markov_gegenbauer.spectral import dominant_eig

LAMBDA_GRID = (-0.49, -0.25, 0.0, 0.25, 0.5, 1.0, 2.5, 10.0)


def _report(number: int, ok: bool, description: str) -> None:
    print(f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"acceptance criterion {number} failed: {description}"


def test_criterion_01_trace_identities():
    worst = 0.0
    for lam in LAMBDA_GRID:
        for m in range(1, 61):
            t = traces(m, lam)
            worst = max(worst, abs(t.tr_a_summed - t.tr_a_closed) / abs(t.tr_a_closed))
            worst = max(worst, abs(t.tr_at_summed - t.tr_at_closed) / abs(t.tr_at_closed))
    # spot value m=2, lam=1/2: 2 * 3 * 2.5 * 3.5 / 2 = 26.25 by both routes
    spot = traces(2, 0.5)
    ok = (
        worst <= 1e-12
        and spot.tr_a_closed == pytest.approx(26.25, rel=1e-13)
        and spot.tr_a_summed == pytest.approx(26.25, rel=1e-13)
    )
    _report(1, ok, f"summed vs closed traces, m<=60, worst rel err {worst:.2e}")


def test_criterion_02_prefix_identities():
    worst = 0.0
    for lam in LAMBDA_GRID:
        for k in range(1, 101):
            r = prefix_and_diag(k, lam)
            worst = max(worst, abs(r.s_summed - r.s_closed) / abs(r.s_closed))
            worst = max(worst, abs(r.st_summed - r.st_closed) / abs(r.st_closed))
    _report(2, worst <= 1e-12, f"prefix sums vs closed forms, k<=100, worst rel err {worst:.2e}")


def test_criterion_03_orderings():
    ok = True
    for lam in LAMBDA_GRID:
        for m in range(1, 31):
            t = traces(m, lam)
            ok &= t.tr_at_closed < t.tr_a_closed < t.tr_at_next_closed
            ok &= interlacing_check(m, lam).ok
        for m in range(1, 21):
            a = build_matrix(m, "even", lam).entries
            at = build_matrix(m, "odd", lam).entries
            at_next = build_matrix(m + 1, "odd", lam).entries
            ok &= bool(np.all(at < a)) and bool(np.all(a < at_next[1:, 1:]))
    _report(3, ok, "trace ordering, eigenvalue interlacing (m<=30), entrywise domination (m<=20)")


def test_criterion_04_closed_form_spot_values():
    worst = 0.0
    for lam in LAMBDA_GRID:
        # hand-derived 1x1 odd block: nu = (1+lam)/2, so c_1 = sqrt(2 lam + 2)
        worst = max(
            worst,
            abs(sharp_constant(1, lam).sharp_constant / math.sqrt(2.0 * lam + 2.0) - 1.0),
        )
    # hand-derived 1x1 even block at lam=1/2: nu = 15/4, so c_2 = sqrt(15)
    worst = max(worst, abs(sharp_constant(2, 0.5).sharp_constant / math.sqrt(15.0) - 1.0))
    # hand-derived 2x2 odd block at lam=1/2: nu = (11.25 + sqrt(100.3125))/2,
    # equivalently c_3 = sqrt((45 + sqrt(1605))/2)
    nu = (11.25 + math.sqrt(100.3125)) / 2.0
    c3 = math.sqrt((45.0 + math.sqrt(1605.0)) / 2.0)
    worst = max(worst, abs(2.0 * math.sqrt(nu) / c3 - 1.0))
    worst = max(worst, abs(sharp_constant(3, 0.5).sharp_constant / c3 - 1.0))
    _report(4, worst <= 1e-12, f"closed-form spot values c_1, c_2, c_3, worst rel err {worst:.2e}")


def test_criterion_05_oracle_equivalence():
    worst_coef = 0.0
    worst_quad = 0.0
    for lam in LAMBDA_GRID:
        for n in range(1, 61):
            c = sharp_constant(n, lam).sharp_constant
            worst_coef = max(worst_coef, abs(oracle_constant_coefficient(n, lam) / c - 1.0))
            if n <= 30:
                worst_quad = max(worst_quad, abs(oracle_constant_quadrature(n, lam) / c - 1.0))
    ok = worst_coef <= 1e-10 and worst_quad <= 1e-8
    _report(5, ok, f"oracle agreement: coefficient {worst_coef:.2e}, quadrature {worst_quad:.2e}")


def test_criterion_06_strict_upper_bound_chain():
    ok = True
    for lam in LAMBDA_GRID:
        for n in range(1, 201):
            r = sharp_constant(n, lam)
            ok &= r.sharp_constant < r.theorem_bound
            ok &= r.sharp_constant <= r.trace_bound * (1.0 + 1e-13)
            ok &= r.trace_bound <= r.theorem_bound * (1.0 + 1e-15)
    _report(6, ok, "c < closed-form bound and c <= 2 sqrt(trace) <= bound, n<=200")


def test_criterion_07_legendre_two_sided_bracket():
    ok = True
    for n in range(6, 41):
        b = legendre_bracket(n)
        c = sharp_constant(n, 0.5).sharp_constant
        ok &= b.lower <= c <= b.upper
    _report(7, ok, "two-sided asymptotic bracket contains c_n at lam=1/2, 6<=n<=40")


def test_criterion_08_bessel_limit():
    err_zero = abs(bessel_first_zero(-0.5) - math.pi / 2.0)
    err_lim = abs(sharp_constant(100, 0.5).sharp_constant / 101.5**2 - 1.0 / math.pi)
    ok = err_zero <= 1e-10 and err_lim <= 1e-3
    _report(8, ok, f"first Bessel zero err {err_zero:.2e}, c_100 limit err {err_lim:.2e}")


def test_criterion_09_extremal_structure_and_witnesses():
    ok = True
    worst_ratio = 0.0
    rng = np.random.default_rng(12345)
    ts = np.linspace(-1.0, 1.0, 17)
    for lam in LAMBDA_GRID:
        for n in range(1, 31):
            m = (n + n % 2) // 2 if n % 2 else n // 2
            parity = "even" if n % 2 == 0 else "odd"
            vec = dominant_eig(build_matrix(m, parity, lam)).eigenvector
            ok &= bool(np.all(vec > 0))
            p = extremal_polynomial(n, lam, ts)
            c = sharp_constant(n, lam).sharp_constant
            worst_ratio = max(worst_ratio, abs(p.achieved_ratio / c - 1.0))
            vals = np.array([v for _, v in p.samples])
            sign = 1.0 if n % 2 == 0 else -1.0
            ok &= float(np.max(np.abs(vals - sign * vals[::-1]))) <= 1e-10 * np.abs(vals).max()
            g, h = gram_matrices(n, lam)
            x = rng.standard_normal((1000, n))
            ratios = np.sqrt(
                np.einsum("ij,jk,ik->i", x, h, x) / np.einsum("ij,jk,ik->i", x, g, x)
            )
            ok &= bool(np.max(ratios) <= c * (1.0 + 1e-10))
    ok &= worst_ratio <= 1e-8
    _report(9, ok, f"Perron positivity, parity defect, witnesses; ratio err {worst_ratio:.2e}")


def test_criterion_10_limit_annotations_and_surrogate():
    # annotations: the tight Chebyshev / lam=1 brackets and the closed-form
    # bracket are attached to the asymptotics report, not verified as limits
    annotated = True
    for lam in (0.0, 1.0):
        r = asymptotic_report(lam, [20, 40])
        annotated &= r.tight_bracket is not None
        annotated &= r.bracket_lower < r.bracket_upper
    _report(10, annotated, "limit brackets attached as report annotations")
    # verifiable surrogate as stated: every normalized constant for n >= 20
    # lies strictly below the closed-form limit upper bound.  This is known
    # to be false (the limit is approached from above); expected FAIL.
    ok = True
    worst_excess = 0.0
    for lam in LAMBDA_GRID:
        bound = 1.0 / (2.0 * math.sqrt(2.0 * lam + 1.0))
        for n in range(20, 201):
            excess = sharp_constant(n, lam).normalized / bound - 1.0
            worst_excess = max(worst_excess, excess)
            ok &= excess < 0.0
    _report(10, ok, f"surrogate: c/n^2 below limit upper bound for n>=20 (worst excess {worst_excess:+.2e})")
