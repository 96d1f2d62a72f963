import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_gegenbauer.matrices import (
    build_factor,
    build_matrix,
    prefix_and_diag,
    seq_coefficients,
    traces,
)

LAMBDA_GRID = [-0.49, -0.25, 0.0, 0.25, 0.5, 1.0, 2.5, 10.0]

lambdas = st.one_of(st.sampled_from(LAMBDA_GRID), st.floats(-0.499, 12.0))


def test_coefficients_first_index_legendre():
    c = seq_coefficients(1, 0.5)
    assert c.alpha_sq == pytest.approx(1.5, rel=1e-15)
    assert c.beta_sq == pytest.approx(2.5, rel=1e-15)
    assert c.alpha_tilde_sq == 0.5
    assert c.beta_tilde_sq == pytest.approx(1.5, rel=1e-15)


@pytest.mark.parametrize("lam", LAMBDA_GRID)
def test_alpha_tilde_first_is_half_for_every_lambda(lam):
    assert seq_coefficients(1, lam).alpha_tilde_sq == 0.5


@given(k=st.integers(1, 60), lam=lambdas)
@settings(max_examples=200)
def test_coefficients_positive_and_finite(k, lam):
    c = seq_coefficients(k, lam)
    for v in (c.alpha_sq, c.beta_sq, c.alpha_tilde_sq, c.beta_tilde_sq):
        assert np.isfinite(v) and v > 0


@given(k=st.integers(1, 80), lam=lambdas)
@settings(max_examples=200)
def test_prefix_and_diag_closed_forms(k, lam):
    r = prefix_and_diag(k, lam)
    assert r.s_summed == pytest.approx(r.s_closed, rel=1e-12)
    assert r.st_summed == pytest.approx(r.st_closed, rel=1e-12)
    assert r.d_summed == pytest.approx(r.d_closed, rel=1e-12)
    assert r.dt_summed == pytest.approx(r.dt_closed, rel=1e-12)


def test_diagonal_spot_values_legendre():
    r = prefix_and_diag(1, 0.5)
    assert r.d_closed == pytest.approx(3.75, rel=1e-15)
    assert r.dt_closed == pytest.approx(0.75, rel=1e-15)


def test_build_matrix_matches_factor_product():
    for lam in LAMBDA_GRID:
        for m in (1, 2, 3, 8):
            for parity in ("even", "odd"):
                a = build_matrix(m, parity, lam).entries
                c = build_factor(m, parity, lam).entries
                np.testing.assert_allclose(c.T @ c, a, rtol=0, atol=1e-13 * np.abs(a).max())


def test_build_matrix_small_entries_by_hand():
    # order-2 even block at lam = 1/2: diagonal D_1, D_2 and
    # off-diagonal sqrt(beta_2^2/beta_1^2) * D_1
    c1 = seq_coefficients(1, 0.5)
    c2 = seq_coefficients(2, 0.5)
    d1 = c1.beta_sq * c1.alpha_sq
    d2 = c2.beta_sq * (c1.alpha_sq + c2.alpha_sq)
    off = np.sqrt(c2.beta_sq / c1.beta_sq) * d1
    a = build_matrix(2, "even", 0.5).entries
    np.testing.assert_allclose(a, [[d1, off], [off, d2]], rtol=1e-14)


def test_build_matrix_symmetric_positive_entries():
    for lam in (-0.49, 0.0, 2.5):
        for parity in ("even", "odd"):
            a = build_matrix(6, parity, lam).entries
            np.testing.assert_array_equal(a, a.T)
            assert np.all(a > 0)
            np.linalg.cholesky(a)  # raises if not positive definite


def test_traces_closed_forms_and_ordering():
    for lam in LAMBDA_GRID:
        for m in (1, 2, 5, 17):
            t = traces(m, lam)
            assert t.tr_a_summed == pytest.approx(t.tr_a_closed, rel=1e-12)
            assert t.tr_at_summed == pytest.approx(t.tr_at_closed, rel=1e-12)
            assert t.tr_at_closed < t.tr_a_closed < t.tr_at_next_closed


def test_trace_spot_value_legendre():
    # 2 * 3 * 2.5 * 3.5 / 2; the summed route must reproduce it exactly
    t = traces(2, 0.5)
    assert t.tr_a_closed == pytest.approx(26.25, rel=1e-15)
    assert t.tr_a_summed == pytest.approx(26.25, rel=1e-13)


def test_entrywise_domination():
    for lam in (-0.25, 0.5, 10.0):
        for m in (1, 2, 7):
            a = build_matrix(m, "even", lam).entries
            at = build_matrix(m, "odd", lam).entries
            at_next = build_matrix(m + 1, "odd", lam).entries
            assert np.all(at < a)
            assert np.all(a < at_next[1:, 1:])


def test_argument_validation():
    with pytest.raises(ValueError):
        seq_coefficients(0, 0.5)
    with pytest.raises(ValueError):
        build_matrix(0, "even", 0.5)
    with pytest.raises(ValueError):
        build_matrix(3, "mixed", 0.5)
    with pytest.raises(ValueError):
        prefix_and_diag(2, -0.6)
