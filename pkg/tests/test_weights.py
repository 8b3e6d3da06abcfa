import math
import random

import pytest

from copz import (
    TruncationError,
    WeightPositivityError,
    boundary_check,
    gram_offdiag_max,
    make_family,
    norm_sq,
    orthogonality_residual,
    pearson_residual_max,
    sample_params,
    weight_table,
)
from copz.weights import weight_ratio

CONSISTENT_KINDS = (
    "hahn",
    "charlier",
    "krawtchouk",
    "meixner",
    "racah",
    "dual_hahn",
    "q_meixner",
    "q_charlier",
    "al_salam_carlitz_2",
    "q_hahn",
    "q_krawtchouk",
    "affine_q_krawtchouk",
    "quantum_q_krawtchouk",
    "little_q_jacobi",
    "q_racah",
    "dual_q_hahn",
)


def test_charlier_ratio_and_closed_form():
    alpha = 2.3
    spec = make_family("charlier", alpha=alpha)
    for s in range(6):
        assert weight_ratio(spec, float(s)) == pytest.approx(alpha / (s + 1), rel=1e-14)
    table = weight_table(spec)
    for k in range(min(10, len(table))):
        expected = alpha**k / math.factorial(k)
        assert table.weight(k) == pytest.approx(expected, rel=1e-12)


def test_krawtchouk_ratio_formula():
    alpha, N = 0.35, 9
    spec = make_family("krawtchouk", alpha=alpha, N=N)
    for s in range(N - 1):
        expected = alpha * (N - 1 - s) / ((1 - alpha) * (s + 1))
        assert weight_ratio(spec, float(s)) == pytest.approx(expected, rel=1e-14)


def test_hahn_uniform_weight():
    spec = make_family("hahn", alpha=0.0, beta=0.0, N=7)
    table = weight_table(spec)
    assert len(table) == 7
    for k in range(7):
        assert table.weight(k) == pytest.approx(1.0, rel=1e-14)


def test_weight_table_positive_everywhere():
    rng = random.Random(17)
    for kind in CONSISTENT_KINDS:
        spec = make_family(kind, sample_params(kind, rng))
        table = weight_table(spec)
        assert all(math.isfinite(lv) for lv in table.log_values)
        assert not table.sign_flipped
        if not spec.resolve_base().is_finite:
            assert table.truncation_bound <= 1e-14


def test_pearson_residual_pointwise():
    rng = random.Random(23)
    for kind in CONSISTENT_KINDS:
        spec = make_family(kind, sample_params(kind, rng))
        assert pearson_residual_max(spec) < 1e-12


def test_gram_matrix_diagonal():
    rng = random.Random(29)
    for kind in ("hahn", "meixner", "q_hahn", "q_racah", "little_q_jacobi"):
        spec = make_family(kind, sample_params(kind, rng))
        kmax = min(8, spec.degree_max)
        assert gram_offdiag_max(spec, kmax) < 1e-8


def test_orthogonality_examples():
    spec = make_family("hahn", alpha=0.0, beta=0.0, N=5)
    assert orthogonality_residual(spec, 0, 1) < 1e-12
    assert orthogonality_residual(spec, 1, 1) > 0.0
    charlier = make_family("charlier", alpha=1.1)
    assert orthogonality_residual(charlier, 2, 5) < 1e-10


def test_norm_examples():
    alpha = 1.3
    charlier = make_family("charlier", alpha=alpha)
    assert norm_sq(charlier, 0) == pytest.approx(math.exp(alpha), rel=1e-12)
    N = 9
    hahn = make_family("hahn", alpha=0.0, beta=0.0, N=N)
    assert norm_sq(hahn, 0) == pytest.approx(float(N), rel=1e-14)
    rng = random.Random(31)
    for kind in ("racah", "q_meixner", "dual_q_hahn"):
        spec = make_family(kind, sample_params(kind, rng))
        for n in (0, 1, 3):
            assert norm_sq(spec, n) > 0.0


def test_boundary_conditions():
    assert boundary_check(make_family("hahn", alpha=0.4, beta=0.8, N=8)).passed
    assert boundary_check(make_family("krawtchouk", alpha=0.3, N=7)).passed
    assert boundary_check(make_family("charlier", alpha=2.0)).passed
    assert boundary_check(make_family("racah", a=0.0, alpha=0.5, beta=0.4, N=6)).passed
    assert boundary_check(make_family("q_racah", a=0.9, alpha=0.2, beta=1.0, q=0.6, N=6)).passed


def test_inconsistent_tables_flag():
    qb = make_family("q_bessel", alpha=1.5, q=0.5)
    with pytest.raises(WeightPositivityError) as err:
        weight_table(qb)
    assert err.value.ratio < 0.0
    # with sign flipping allowed, the |ratio| table diverges for this family
    with pytest.raises(TruncationError):
        weight_table(qb, allow_sign_flip=True)
    lql = make_family("little_q_laguerre", alpha=1.2, q=0.5)
    with pytest.raises(WeightPositivityError):
        weight_table(lql)
    # the neighboring two-parameter family on the same lattice is consistent
    lqj = make_family("little_q_jacobi", alpha=1.2, beta=0.8, q=0.5)
    table = weight_table(lqj)
    assert not table.sign_flipped
    assert gram_offdiag_max(lqj, 5, table) < 1e-8


def test_little_q_jacobi_weight_matches_product_form():
    alpha, beta, q = 1.1, 0.6, 0.5
    spec = make_family("little_q_jacobi", alpha=alpha, beta=beta, q=q)
    table = weight_table(spec)
    # w(k) = alpha^k (beta*q; q)_k / (q; q)_k
    w = 1.0
    for k in range(1, min(12, len(table))):
        w *= alpha * (1 - beta * q**k) / (1 - q**k)
        assert table.weight(k) == pytest.approx(w, rel=1e-12)


def test_infinite_truncation_error_cap():
    # a diverging |ratio| table must stop with a diagnostic, not loop forever
    lql = make_family("little_q_laguerre", alpha=1.9, q=0.52)
    with pytest.raises((TruncationError, WeightPositivityError)):
        weight_table(lql, allow_sign_flip=True)
