import random

import pytest
from hypothesis import given, strategies as st

from copz import (
    DomainError,
    SeriesSpec,
    UndefinedSeriesError,
    eval_terminating_series,
    identity_value,
    pochhammer,
    q_pochhammer,
)
from copz.qseries import (
    chu_vandermonde,
    hyper_sum,
    q_chu_vandermonde,
    q_pfaff_saalschutz,
    qhyper_sum,
    sheppard,
)


def test_pochhammer_values():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(2.0, 3) == 24.0
    assert pochhammer(-2.0, 3) == 0.0


@given(st.floats(-10, 10), st.integers(0, 20))
def test_pochhammer_recurrence_exact(a, k):
    assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


def test_q_pochhammer_values():
    a, q = 0.7, 0.5
    assert q_pochhammer(a, q, 1) == 1.0 - a
    assert q_pochhammer(0.0, q, 5) == 1.0
    assert q_pochhammer(q**-2, q, 3) == pytest.approx(0.0, abs=1e-15)


def test_two_term_expansion():
    b, c, z = 1.5, 2.5, 0.7
    assert hyper_sum((-1.0, b), (c,), z, 1) == pytest.approx(1 - b * z / c, rel=1e-15)
    assert hyper_sum((-4.0, b), (c,), 0.0, 4) == 1.0
    assert hyper_sum((-3.0, 0.0, b), (c, 1 - 9.0), 1.0, 3) == 1.0


def test_series_spec_termination_validation():
    spec = SeriesSpec((-2.0, 1.5), (2.0,), 0.3, 2)
    assert eval_terminating_series(spec) == pytest.approx(
        hyper_sum((-2.0, 1.5), (2.0,), 0.3, 2), rel=1e-15
    )
    with pytest.raises(DomainError):
        eval_terminating_series(SeriesSpec((1.0,), (), 0.5, 2))
    q = 0.5
    qspec = SeriesSpec((q**-3, 0.2), (0.4,), 0.1, 3, q=q)
    assert eval_terminating_series(qspec) == pytest.approx(
        qhyper_sum((q**-3, 0.2), (0.4,), q, 0.1, 3), rel=1e-15
    )
    with pytest.raises(DomainError):
        eval_terminating_series(SeriesSpec((0.2,), (0.4,), 0.1, 3, q=q))


def test_vanishing_denominator_raises():
    with pytest.raises(UndefinedSeriesError):
        hyper_sum((-3.0, 1.0), (-2.0,), 1.0, 3)
    q = 0.5
    with pytest.raises(UndefinedSeriesError):
        qhyper_sum((q**-3, 0.3), (q**-2,), q, 0.5, 3)


def test_chu_vandermonde_degree_one():
    b, c = 1.3, 2.1
    assert chu_vandermonde(1, b, c) == pytest.approx((c - b) / c, rel=1e-14)


def _series_chu_vandermonde(n, b, c):
    return hyper_sum((-n, b), (c,), 1.0, n)


def _series_sheppard(n, a, b, c):
    return hyper_sum((-n, a, b), (c, 1.0 + a + b - c - n), 1.0, n)


def _series_q_saalschutz(n, a, b, c, q):
    return qhyper_sum((q**-n, a, b), (c, a * b * q ** (1 - n) / c), q, q, n)


def _series_q_chu_vandermonde(n, b, c, q):
    return qhyper_sum((q**-n, b), (c,), q, q, n)


def test_identity_oracles_randomized():
    # parameters drawn with the shapes the catalog actually produces; outside
    # these, direct summation can lose digits to cancellation (see the
    # wide-range spot checks below)
    rng = random.Random(101)
    for _ in range(120):
        n = rng.randint(1, 6)
        N = rng.randint(n + 1, 14)
        a = rng.uniform(-0.45, 1.8)
        alpha = rng.uniform(max(-1.0, a) + 0.05, 2 * a + 0.95)
        b, c = 2 * a - alpha, 1.0 - N
        assert chu_vandermonde(n, b, c) == pytest.approx(
            _series_chu_vandermonde(n, b, c), rel=1e-11
        )
    for _ in range(120):
        n = rng.randint(1, 6)
        N = rng.randint(n + 1, 14)
        a = rng.uniform(0.0, 1.8)
        alpha = rng.uniform(-0.8, 2.0)
        beta = rng.uniform(max(-1.0, 2 * a) + 0.02, 2 * a + 0.98)
        A, B, C = alpha + beta + n + 1, 2 * a - beta, 2 * a + alpha + N + 1
        assert sheppard(n, A, B, C) == pytest.approx(
            _series_sheppard(n, A, B, C), rel=1e-11
        )
    for _ in range(120):
        n = rng.randint(1, 6)
        q = rng.uniform(0.35, 0.9)
        N = rng.randint(n + 1, 12)
        a = rng.uniform(0.15, 1.8)
        alpha = rng.uniform(-0.8, 1.5)
        beta = rng.uniform(max(-1.0, 2 * a - 1.0) + 0.05, 2 * a - 0.05)
        A = q ** (alpha + beta + n + 1)
        B = q ** (2 * a - beta - 1)
        C = q ** (2 * a + alpha + N)
        assert q_pfaff_saalschutz(n, A, B, C, q) == pytest.approx(
            _series_q_saalschutz(n, A, B, C, q), rel=1e-11
        )
    for _ in range(120):
        n = rng.randint(1, 6)
        q = rng.uniform(0.35, 0.9)
        N = rng.randint(n + 1, 12)
        a = rng.uniform(0.3, 1.8)
        alpha = rng.uniform(max(-1.0, 2 * a - 1.0) + 0.05, 2 * a - 0.05)
        b, c = q ** (2 * a - alpha - 1), q ** (1 - N)
        assert q_chu_vandermonde(n, b, c, q) == pytest.approx(
            _series_q_chu_vandermonde(n, b, c, q), rel=1e-11
        )


def test_identity_oracles_wide_ranges_loose():
    # far corners of the validity domains: direct summation is limited by the
    # term-to-sum cancellation ratio, so only a loose agreement is checked
    rng = random.Random(55)
    for _ in range(60):
        n = rng.randint(1, 7)
        q = rng.uniform(0.3, 0.9)
        a = q ** rng.uniform(-2.0, 2.5)
        b = q ** rng.uniform(-2.0, 2.5)
        c = q ** rng.uniform(0.3, 4.0)
        assert q_pfaff_saalschutz(n, a, b, c, q) == pytest.approx(
            _series_q_saalschutz(n, a, b, c, q), rel=1e-6, abs=1e-9
        )
    for _ in range(60):
        n = rng.randint(1, 7)
        b = rng.uniform(-3.0, 3.0)
        c = rng.uniform(0.5, 6.0)
        assert chu_vandermonde(n, b, c) == pytest.approx(
            _series_chu_vandermonde(n, b, c), rel=1e-8, abs=1e-10
        )


def test_balanced_3f2_proof_instance():
    # sample instance (a, alpha, beta, N) = (1, 0.5, 0.5, 6), degree 2:
    # parameters map to A = alpha+beta+n+1, B = 2a-beta, C = 2a+alpha+N+1
    n, a, alpha, beta, N = 2, 1.0, 0.5, 0.5, 6
    A = alpha + beta + n + 1
    B = 2 * a - beta
    C = 2 * a + alpha + N + 1
    closed = sheppard(n, A, B, C)
    assert closed == pytest.approx(_series_sheppard(n, A, B, C), rel=1e-12)
    # the same value written out through shifted factorials
    explicit = (
        pochhammer(2 * a - beta + N - n, n)
        * pochhammer(alpha + beta + N + 1, n)
        / (pochhammer(2 * a + alpha + N + 1, n) * pochhammer(N - n, n))
    )
    assert closed == pytest.approx(explicit, rel=1e-13)


def test_quadratic_gap_instance_chu_vandermonde():
    # the three-parameter quadratic-lattice family evaluates, at the gap edge,
    # to 2F1(-n, 2a-alpha; 1-N; 1) = (1-N-2a+alpha)_n / (1-N)_n
    n, a, alpha, N = 3, 0.8, 1.1, 7
    val = _series_chu_vandermonde(n, 2 * a - alpha, 1.0 - N)
    explicit = pochhammer(1 - N + alpha - 2 * a, n) / pochhammer(1.0 - N, n)
    assert val == pytest.approx(explicit, rel=1e-12)
    assert val > 0.0


def test_q_quadratic_gap_instances():
    # balanced 3phi2 with parameters q^(alpha+beta+n+1), q^(2a-beta-1),
    # q^(2a+alpha+N); second denominator entry collapses to q^(1-N)
    n, a, alpha, beta, q, N = 2, 0.9, 0.4, 1.2, 0.55, 6
    A = q ** (alpha + beta + n + 1)
    B = q ** (2 * a - beta - 1)
    C = q ** (2 * a + alpha + N)
    assert A * B * q ** (1 - n) / C == pytest.approx(q ** (1 - N), rel=1e-12)
    closed = q_pfaff_saalschutz(n, A, B, C, q)
    assert closed == pytest.approx(_series_q_saalschutz(n, A, B, C, q), rel=1e-12)
    explicit = (
        q_pochhammer(q ** (2 * a - beta + N - n - 1), q, n)
        * q_pochhammer(q ** (alpha + beta + N + 1), q, n)
        / (
            q_pochhammer(q ** (2 * a + alpha + N), q, n)
            * q_pochhammer(q ** (N - n), q, n)
        )
    )
    assert closed == pytest.approx(explicit, rel=1e-12)
    assert closed > 0.0

    # 2phi1(q^-n, q^(2a-alpha-1); q^(1-N); q, q) in closed form
    n, a, alpha, N = 3, 0.7, 0.9, 7
    b = q ** (2 * a - alpha - 1)
    c = q ** (1 - N)
    val = _series_q_chu_vandermonde(n, b, c, q)
    explicit = (
        q ** (n * (2 * a - alpha - 1))
        * q_pochhammer(q ** (alpha - 2 * a - N + 2), q, n)
        / q_pochhammer(q ** (1 - N), q, n)
    )
    assert val == pytest.approx(explicit, rel=1e-12)
    assert val > 0.0


def test_identity_dispatcher():
    assert identity_value("chu_vandermonde", n=2, b=0.5, c=3.0) == pytest.approx(
        chu_vandermonde(2, 0.5, 3.0)
    )
    with pytest.raises(DomainError):
        identity_value("unknown_identity", n=1)


def test_q_to_one_consistency():
    # loose qualitative check: the basic series at q near 1 approaches the
    # ordinary one with the same argument
    q = 0.9999
    n, b, c, z = 3, 1.4, 2.2, 0.7
    qval = qhyper_sum((q**-n, q**b), (q**c,), q, z, n)
    oval = hyper_sum((-n, b), (c,), z, n)
    assert qval == pytest.approx(oval, rel=1e-3)


def test_compensated_alternating_sum():
    # large alternating terms cancel by ~10 orders here; the compensated sum
    # keeps the loss close to the conditioning floor
    n, b, c = 12, 9.5, 0.75
    assert hyper_sum((-n, b), (c,), 1.0, n) == pytest.approx(
        chu_vandermonde(n, b, c), rel=1e-5
    )
