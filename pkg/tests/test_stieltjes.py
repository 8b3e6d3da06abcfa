import math
import random

import pytest

from copz import (
    DomainError,
    Grid,
    ZeroProblem,
    build_stieltjes_system,
    hypothesis_report,
    make_family,
    monotonicity_verdict,
    sample_params,
    zero_derivatives_fd,
)
from copz.stieltjes import (
    b_antisymmetric_closed,
    b_entry,
    b_quadratic_closed,
    b_symmetric_closed,
    claimed_sweep,
    direction_from_signs,
)

SPANNING = [
    ("hahn", None),
    ("charlier", None),
    ("krawtchouk", None),
    ("meixner", None),
    ("racah", None),
    ("dual_hahn", None),
    ("q_meixner", None),
    ("al_salam_carlitz_2", None),
    ("q_hahn", None),
    ("q_krawtchouk", None),
    ("quantum_q_krawtchouk", None),
    ("q_racah", None),
    ("dual_q_hahn", None),
]


def test_hypothesis_report_hahn():
    spec = make_family("hahn", alpha=0.0, beta=0.0, N=5)
    rep = hypothesis_report(ZeroProblem(spec, 2), "alpha")
    assert rep.k_interval == (0.0, 4.0)
    assert rep.f_positive and rep.f1_negative
    assert rep.f2_sign == "-"
    assert rep.grid4_condition == "not-applicable"
    assert rep.zero_set_inside_k
    assert rep.hypotheses_hold
    assert rep.predicted_direction == "decreasing"
    rep_b = hypothesis_report(ZeroProblem(spec, 2), "beta")
    assert rep_b.f2_sign == "+" and rep_b.predicted_direction == "increasing"


def test_hypothesis_report_racah_beta():
    spec = make_family("racah", a=1.0, alpha=0.0, beta=0.5, N=6)
    rep = hypothesis_report(ZeroProblem(spec, 3), "beta")
    assert rep.k_interval == (1.0, 6.0)
    assert rep.f2_sign == "+"
    assert rep.hypotheses_hold


def test_direction_sign_law():
    assert direction_from_signs("+", True) == "increasing"
    assert direction_from_signs("+", False) == "decreasing"
    assert direction_from_signs("-", True) == "decreasing"
    assert direction_from_signs("-", False) == "increasing"


def test_single_zero_system_charlier():
    spec = make_family("charlier", alpha=2.0)
    pr = ZeroProblem(spec, 1)
    system = build_stieltjes_system(pr, "alpha")
    # 1x1 system: a_11 = -f1 + f b_11 with empty off-diagonal sums
    y = system.zeros.zeros_s[0]
    f = spec.monotonicity_f(y)
    f1, _ = spec.f_partials(y, "alpha")
    assert system.matrix[0, 0] == pytest.approx(-f1 + f * system.b_matrix[0, 0], rel=1e-12)
    # zero sits at s = alpha, so its derivative in alpha is exactly 1
    assert system.solution[0] == pytest.approx(1.0, abs=1e-8)
    assert system.offdiag_negative and system.diag_dominant and system.inverse_positive


def test_b_entries_quadratic_closed_form():
    g = Grid.quadratic()
    rng = random.Random(3)
    for _ in range(60):
        yj = rng.uniform(0.2, 9.0)
        yk = rng.uniform(0.2, 9.0)
        assert b_entry(g, yj, yk) == pytest.approx(
            b_quadratic_closed(yj, yk), rel=1e-10
        )


def test_b_entries_symmetric_closed_form():
    rng = random.Random(4)
    for _ in range(60):
        q = rng.uniform(0.3, 0.95)
        g = Grid.q_symmetric(q)
        yj = rng.uniform(0.7, 9.0)
        yk = rng.uniform(0.7, 9.0)
        assert b_entry(g, yj, yk) == pytest.approx(
            b_symmetric_closed(g.theta, yj, yk), rel=1e-10
        )


def test_b_entries_antisymmetric_in_unit_interval():
    # |b| <= 4*theta*tanh(theta) < 1 needs theta < 0.52, i.e. q above ~0.35
    rng = random.Random(6)
    for _ in range(60):
        q = rng.uniform(0.45, 0.95)
        g = Grid.q_antisymmetric(q)
        yj = rng.uniform(-6.0, 6.0)
        yk = rng.uniform(-6.0, 6.0)
        val = b_entry(g, yj, yk)
        closed = b_antisymmetric_closed(g.theta, yj, yk)
        assert val == pytest.approx(closed, rel=1e-10, abs=1e-12)
        assert -1.0 < val < 0.0


def test_b_entries_vanish_on_exponential_lattices():
    for g in (Grid.linear(), Grid.q_exp_neg(0.5), Grid.q_exp(0.5)):
        assert b_entry(g, 2.3, 4.9) == pytest.approx(0.0, abs=1e-12)


def test_fd_direction_examples():
    d = zero_derivatives_fd(ZeroProblem(make_family("charlier", alpha=2.0), 1), "alpha")
    assert d[0] == pytest.approx(1.0, rel=1e-6)
    d = zero_derivatives_fd(ZeroProblem(make_family("hahn", alpha=0.0, beta=0.0, N=5), 2), "alpha")
    assert all(v < 0.0 for v in d)
    d = zero_derivatives_fd(ZeroProblem(make_family("meixner", alpha=0.5, beta=1.0), 2), "beta")
    assert all(v > 0.0 for v in d)


def test_system_matches_fd_across_grids():
    rng = random.Random(12)
    for kind, _ in SPANNING:
        spec = make_family(kind, sample_params(kind, rng))
        n = min(3, spec.degree_max)
        pr = ZeroProblem(spec, n)
        param = spec.claims()[0].param
        rep = hypothesis_report(pr, param, samples=80)
        assert rep.hypotheses_hold, (kind, rep)
        system = build_stieltjes_system(pr, param)
        fd = zero_derivatives_fd(pr, param)
        for a, b in zip(system.solution, fd):
            assert a == pytest.approx(b, rel=1e-4, abs=1e-10)
        assert system.offdiag_negative
        assert system.diag_dominant
        assert system.inverse_positive
        # sign law in the polynomial variable
        want = rep.predicted_direction
        for v in system.solution_X:
            assert (v > 0) == (want == "increasing")


def test_structural_parameter_guard():
    spec = make_family("q_hahn", alpha=0.8, beta=0.9, q=0.6, N=6)
    with pytest.raises(DomainError):
        build_stieltjes_system(ZeroProblem(spec, 2), "q")
    racah = make_family("racah", a=0.5, alpha=0.2, beta=0.4, N=6)
    with pytest.raises(DomainError):
        build_stieltjes_system(ZeroProblem(racah, 2), "a")


def test_monotonicity_verdict_examples():
    spec = make_family("hahn", alpha=0.5, beta=1.0, N=8)
    v = monotonicity_verdict(ZeroProblem(spec, 3), "alpha", (-0.9, 3.0), samples=25)
    assert v.directions == ("decreasing",) * 3
    assert v.reversals == 0
    assert v.claimed == "decreasing" and v.agrees

    spec = make_family("krawtchouk", alpha=0.5, N=7)
    v = monotonicity_verdict(ZeroProblem(spec, 2), "alpha", (0.05, 0.95), samples=15)
    assert v.directions == ("increasing",) * 2 and v.agrees

    q = 0.5
    spec = make_family("al_salam_carlitz_2", alpha=0.5 / q, q=q)
    v = monotonicity_verdict(ZeroProblem(spec, 2), "alpha", (0.1, 0.9 / q), samples=15)
    assert v.directions == ("increasing",) * 2 and v.agrees


def test_claimed_sweeps_agree_across_catalog():
    rng = random.Random(21)
    from copz import catalog_kinds

    for kind in catalog_kinds():
        spec = make_family(kind, sample_params(kind, rng))
        pr = ZeroProblem(spec, min(2, spec.degree_max))
        for claim in spec.claims():
            v = claimed_sweep(pr, claim, samples=9)
            assert v.agrees, (kind, claim.param, v.directions)
            assert v.reversals == 0


def test_trajectory_matrix_shape():
    spec = make_family("charlier", alpha=2.0)
    v = monotonicity_verdict(ZeroProblem(spec, 2), "alpha", (1.0, 3.0), samples=7)
    assert len(v.trajectories) == 2
    assert all(len(row) == len(v.ts) for row in v.trajectories)
    assert math.isfinite(v.trajectories[0][0])
