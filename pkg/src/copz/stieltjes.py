"""Sign hypotheses and the zero-derivative linear system.

Differentiating the three-point identity at each zero y_j(t) of a degree-n
polynomial yields the linear system  f2(y_j) = sum_k a_jk y'_k  with

    a_jk = f(y_j) c_jk                       (j != k)
    a_jj = -f1(y_j) + f(y_j) (sum_k b_jk - sum_{k != j} c_jk)

where f = B/A, f1 = df/ds, f2 = df/dt, and b_jk, c_jk are built from the
lattice map and its derivative.  Where f > 0 and f1 < 0 hold on the zero set
the matrix has positive diagonal, negative off-diagonal entries, strict
diagonal dominance, and an entrywise-positive inverse, which pins the common
sign of all y'_j to the sign of f2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    IllConditionedSystemError,
    SweepDiscontinuityError,
)
from .families import Claim, ZeroProblem
from .grid import Grid, Q_ANTISYMMETRIC
from .zeros import ZeroSet, find_zeros

#: parameters that move the lattice or the support; the zero-derivative system
#: assumes both are held fixed while t varies
STRUCTURAL_PARAMS = ("q", "N", "a")


def _problem_at(problem: ZeroProblem, param: str, t: float | None) -> ZeroProblem:
    if t is None:
        return problem
    fam = problem.family.with_param(param, float(t))
    return ZeroProblem(fam, problem.degree, problem.sweep_param)


@dataclass(frozen=True)
class HypothesisReport:
    kind: str
    degree: int
    param: str
    t: float
    k_interval: tuple[float, float]
    f_positive: bool
    f1_negative: bool
    f2_sign: str  # "+", "-", or "mixed"
    grid4_condition: str  # "pass", "fail", "not-applicable"
    zero_set_inside_k: bool
    sample_count: int
    counterexamples: tuple[float, ...]

    @property
    def hypotheses_hold(self) -> bool:
        return (
            self.f_positive
            and self.f1_negative
            and self.f2_sign in ("+", "-")
            and self.grid4_condition in ("pass", "not-applicable")
            and self.zero_set_inside_k
        )

    @property
    def predicted_direction(self) -> str | None:
        """Direction of the zeros in X implied by the signs, or None."""
        if not self.hypotheses_hold:
            return None
        return direction_from_signs(self.f2_sign, self.fgrid_increasing)

    # stored at construction; the grid object itself is not serialized
    fgrid_increasing: bool = True


def direction_from_signs(f2_sign: str, grid_increasing: bool) -> str:
    """Positive f2 pushes zeros up in s; the lattice direction maps that to X."""
    up = (f2_sign == "+") == grid_increasing
    return "increasing" if up else "decreasing"


def hypothesis_report(
    problem: ZeroProblem, param: str, t: float | None = None, samples: int = 200
) -> HypothesisReport:
    """Evaluate the sign hypotheses on the certified interval and the zero set."""
    problem = _problem_at(problem, param, t)
    fam = problem.family
    base = fam.resolve_base()
    zs = find_zeros(problem)
    lo, hi = fam.k_interval()
    hi_eff = hi if math.isfinite(hi) else max(zs.zeros_s) + 2.0
    pts = list(np.linspace(lo, hi_eff, samples + 2)[1:-1])
    pts.extend(zs.zeros_s)

    f_pos = True
    f1_neg = True
    f2_signs = set()
    counterexamples: list[float] = []
    grid4_vals_ok = True
    is_grid4 = base.grid.tag == Q_ANTISYMMETRIC
    for s in pts:
        try:
            fv = fam.monotonicity_f(s)
            f1, f2 = fam.f_partials(s, param)
        except Exception:
            counterexamples.append(s)
            f_pos = False
            continue
        ok = True
        if fv <= 0.0:
            f_pos = False
            ok = False
        if f1 >= 0.0:
            f1_neg = False
            ok = False
        f2_signs.add("+" if f2 > 0.0 else "-" if f2 < 0.0 else "0")
        if is_grid4 and problem.degree * fv + f1 > 0.0:
            grid4_vals_ok = False
        if not ok and len(counterexamples) < 8:
            counterexamples.append(s)
    if f2_signs <= {"+"}:
        f2_sign = "+"
    elif f2_signs <= {"-"}:
        f2_sign = "-"
    else:
        f2_sign = "mixed"
    grid4 = "not-applicable" if not is_grid4 else ("pass" if grid4_vals_ok else "fail")
    inside = all(lo < y < hi for y in zs.zeros_s)
    return HypothesisReport(
        kind=fam.kind,
        degree=problem.degree,
        param=param,
        t=float(fam.params[param]),
        k_interval=(lo, hi),
        f_positive=f_pos,
        f1_negative=f1_neg,
        f2_sign=f2_sign,
        grid4_condition=grid4,
        zero_set_inside_k=inside,
        sample_count=len(pts),
        counterexamples=tuple(counterexamples),
        fgrid_increasing=base.grid.increasing,
    )


def b_entry(grid: Grid, yj: float, yk: float) -> float:
    """Generic lattice curvature entry b_jk from the map and its derivative."""
    xm = grid.x_raw(yj - 1.0)
    xp = grid.x_raw(yj + 1.0)
    Xk = grid.x_raw(yk)
    dk = grid.dx_ds(yk)
    return (grid.dx_ds(yj - 1.0) - dk) / (xm - Xk) - (grid.dx_ds(yj + 1.0) - dk) / (
        xp - Xk
    )


def b_quadratic_closed(yj: float, yk: float) -> float:
    """Closed form of b_jk on the lattice X = s(s+1)."""
    return 4.0 / ((yj + yk) * (yj + yk + 2.0))


def b_symmetric_closed(theta: float, yj: float, yk: float) -> float:
    """Closed form of b_jk on the cosh lattice, base q = exp(-2*theta)."""
    u1 = (yj + yk - 1.0) * theta
    u2 = (yj + yk + 1.0) * theta
    return 2.0 * theta * math.sinh(2.0 * theta) / (math.sinh(u1) * math.sinh(u2))


def b_antisymmetric_closed(theta: float, yj: float, yk: float) -> float:
    """Closed form of b_jk on the sinh lattice; lands in (-1, 0)."""
    u1 = (yj + yk - 1.0) * theta
    u2 = (yj + yk + 1.0) * theta
    return -2.0 * theta * math.sinh(2.0 * theta) / (math.cosh(u1) * math.cosh(u2))


@dataclass(frozen=True)
class StieltjesSystem:
    """The assembled n x n system A y' = f2 with its structural flags."""

    t: float
    param: str
    zeros: ZeroSet
    matrix: np.ndarray
    rhs: np.ndarray
    b_matrix: np.ndarray
    c_matrix: np.ndarray
    solution: np.ndarray
    diag_dominant: bool
    offdiag_negative: bool
    inverse_positive: bool

    @property
    def solution_X(self) -> np.ndarray:
        """Zero derivatives mapped to the polynomial variable, dX/dt = x'(y) y'."""
        g = self.zeros.problem.family.resolve_base().grid
        return self.solution * np.array([g.dx_ds(y) for y in self.zeros.zeros_s])


def build_stieltjes_system(
    problem: ZeroProblem, param: str, t: float | None = None
) -> StieltjesSystem:
    """Assemble and solve the zero-derivative system at the current parameters.

    ``param`` must not move the lattice or the support (see STRUCTURAL_PARAMS).
    """
    if param not in problem.family.params:
        raise DomainError(f"{problem.family.kind} has no parameter {param!r}")
    if param in STRUCTURAL_PARAMS:
        raise DomainError(
            f"parameter {param!r} moves the lattice or support; the system assumes them fixed"
        )
    problem = _problem_at(problem, param, t)
    fam = problem.family
    base = fam.resolve_base()
    g = base.grid
    zs = find_zeros(problem)
    n = problem.degree
    ys = zs.zeros_s
    Xs = [g.x_raw(y) for y in ys]
    f_vals = [base.monotonicity_f(y) for y in ys]
    partials = [fam.f_partials(y, param) for y in ys]

    b = np.empty((n, n))
    c = np.empty((n, n))
    for j in range(n):
        xm = g.x_raw(ys[j] - 1.0)
        xp = g.x_raw(ys[j] + 1.0)
        dm = g.dx_ds(ys[j] - 1.0)
        dp = g.dx_ds(ys[j] + 1.0)
        for k in range(n):
            dk = g.dx_ds(ys[k])
            b[j, k] = (dm - dk) / (xm - Xs[k]) - (dp - dk) / (xp - Xs[k])
            c[j, k] = (1.0 / (xp - Xs[k]) - 1.0 / (xm - Xs[k])) * dk

    A = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            if j != k:
                A[j, k] = f_vals[j] * c[j, k]
        offdiag_c = sum(c[j, k] for k in range(n) if k != j)
        A[j, j] = -partials[j][0] + f_vals[j] * (b[j].sum() - offdiag_c)
    rhs = np.array([p[1] for p in partials])

    try:
        sol = np.linalg.solve(A, rhs)
        inv = np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise IllConditionedSystemError(f"{fam.kind}: {exc}") from exc

    off = A[~np.eye(n, dtype=bool)]
    offdiag_negative = bool(n == 1 or np.all(off < 0.0))
    dom = np.abs(np.diag(A)) - (np.sum(np.abs(A), axis=1) - np.abs(np.diag(A)))
    diag_dominant = bool(np.all(dom > 0.0))
    inverse_positive = bool(np.all(inv > 0.0))
    return StieltjesSystem(
        t=float(fam.params[param]),
        param=param,
        zeros=zs,
        matrix=A,
        rhs=rhs,
        b_matrix=b,
        c_matrix=c,
        solution=sol,
        diag_dominant=diag_dominant,
        offdiag_negative=offdiag_negative,
        inverse_positive=inverse_positive,
    )


def zero_derivatives_fd(
    problem: ZeroProblem, param: str, t: float | None = None, h: float | None = None
) -> tuple[float, ...]:
    """Central-difference derivatives of the s-coordinates of the zeros.

    Independent of the linear system; pairs zeros by sorted order at t-h and
    t+h and requires matching counts.
    """
    fam = problem.family
    t0 = float(fam.params[param]) if t is None else float(t)
    if h is None:
        h = 1e-5 * max(1.0, abs(t0))
    up = find_zeros(_problem_at(problem, param, t0 + h))
    dn = find_zeros(_problem_at(problem, param, t0 - h))
    if len(up) != len(dn):
        raise SweepDiscontinuityError(
            f"zero counts differ between t-h ({len(dn)}) and t+h ({len(up)})"
        )
    return tuple((u - d) / (2.0 * h) for u, d in zip(up.zeros_s, dn.zeros_s))


@dataclass(frozen=True)
class MonotonicityVerdict:
    """Empirical sweep of the zero trajectories in the polynomial variable."""

    kind: str
    degree: int
    param: str
    ts: tuple[float, ...]
    trajectories: tuple[tuple[float, ...], ...]  # one row per zero, X values
    directions: tuple[str, ...]
    reversals: int
    claimed: str | None
    agrees: bool | None

    @property
    def monotone(self) -> bool:
        return all(d in ("increasing", "decreasing") for d in self.directions)


def monotonicity_verdict(
    problem: ZeroProblem,
    param: str,
    t_range: tuple[float, float],
    samples: int = 15,
) -> MonotonicityVerdict:
    """Sweep t over t_range, track zero trajectories by sorted order in s.

    The sweep is refined (samples doubled, at most three times) when adjacent
    zero sets move by more than half the smallest zero gap, which keeps the
    sorted-order pairing trustworthy.
    """
    fam = problem.family
    lo, hi = t_range
    if not lo < hi:
        raise DomainError(f"empty sweep range {t_range!r}")
    count = max(3, samples)
    for _ in range(4):
        ts = list(np.linspace(lo, hi, count))
        sets = [find_zeros(_problem_at(problem, param, t)) for t in ts]
        jump = max(
            max(abs(u - v) for u, v in zip(s1.zeros_s, s2.zeros_s))
            for s1, s2 in zip(sets, sets[1:])
        )
        min_gap = min(s.min_gap_s for s in sets)
        if problem.degree == 1 or jump <= 0.5 * min_gap:
            break
        count *= 2
    n = problem.degree
    traj = tuple(tuple(zset.zeros_X[j] for zset in sets) for j in range(n))
    directions = []
    reversals = 0
    for row in traj:
        diffs = [b - a for a, b in zip(row, row[1:])]
        if all(d > 0.0 for d in diffs):
            directions.append("increasing")
        elif all(d < 0.0 for d in diffs):
            directions.append("decreasing")
        else:
            directions.append("non-monotone")
            lead = 1.0 if diffs[0] > 0 else -1.0
            reversals += sum(1 for d in diffs if d * lead <= 0.0)
    claim = next((c for c in fam.claims() if c.param == param), None)
    claimed = claim.direction if claim is not None else None
    agrees = None
    if claimed is not None:
        agrees = all(d == claimed for d in directions)
    return MonotonicityVerdict(
        kind=fam.kind,
        degree=n,
        param=param,
        ts=tuple(ts),
        trajectories=traj,
        directions=tuple(directions),
        reversals=reversals,
        claimed=claimed,
        agrees=agrees,
    )


def claimed_sweep(problem: ZeroProblem, claim: Claim, samples: int = 15) -> MonotonicityVerdict:
    """Run the sweep over the claim's catalogued finite window."""
    return monotonicity_verdict(problem, claim.param, claim.window, samples)
