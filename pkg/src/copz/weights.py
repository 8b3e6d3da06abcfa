"""Weight tables from the first-order ratio recurrence, and orthogonality checks.

The weight is generated from the coefficient tables themselves,

    w(s+1)/w(s) = B(s) dx(s-1/2) / [A(s+1) dx(s+1/2)],

normalized to w(a) = 1 and accumulated in log space.  Sums use the positively
oriented measure w(s) |dx(s-1/2)| so that norms stay positive on decreasing
lattices.  A non-positive ratio signals an inconsistent coefficient table; by
default it raises, and with ``allow_sign_flip`` the table is built from the
absolute ratios and prominently flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import TruncationError, WeightPositivityError
from .families import FamilySpec, eval_exact_at_support
from .qseries import Neumaier

_TAIL_REL = 1e-14
_MAX_POINTS = 10_000


@dataclass(frozen=True)
class WeightTable:
    """Log-space weight values on s = start, start+1, ... with w(start) = 1."""

    family: FamilySpec
    start: float
    log_values: tuple[float, ...]
    truncation_bound: float
    sign_flipped: bool
    flipped_at: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.log_values)

    def s_at(self, k: int) -> float:
        return self.start + k

    def weight(self, k: int) -> float:
        return math.exp(self.log_values[k])

    def log_measure(self, k: int) -> float:
        s = self.s_at(k)
        return self.log_values[k] + math.log(abs(self.family.grid.delta_x_half(s)))


def weight_ratio(family: FamilySpec, s: float) -> float:
    """The one-step ratio w(s+1)/w(s) read off the coefficient tables."""
    base = family.resolve_base()
    g = base.grid
    _, B = base.coeffs_AB(s)
    A1, _ = base.coeffs_AB(s + 1.0)
    num = B * g.delta_x_half(s)
    den = A1 * g.delta_x_half(s + 1.0)
    if den == 0.0:
        raise WeightPositivityError(s, math.inf)
    return num / den


def weight_table(
    family: FamilySpec, degree_hint: int = 8, allow_sign_flip: bool = False
) -> WeightTable:
    """Tabulate the weight over the support.

    ``degree_hint`` widens the truncation margin of infinite tables so that
    orthogonality sums of polynomials up to that degree are covered.  Alias
    families delegate to their base family.
    """
    base = family.resolve_base()
    g = base.grid
    a = base.support_start
    logs = [0.0]
    flipped_at: list[float] = []

    def push(s: float) -> None:
        r = weight_ratio(base, s)
        if r <= 0.0 or math.isinf(r):
            if not allow_sign_flip or r == 0.0 or math.isinf(r):
                raise WeightPositivityError(s, r)
            flipped_at.append(s)
            r = -r
        logs.append(logs[-1] + math.log(r))
        if logs[-1] > 600.0:
            raise TruncationError(
                f"{base.kind}: weight magnitude overflow (log w = {logs[-1]:.1f} at s={s + 1})"
            )

    if base.is_finite:
        npts = int(round(base.support_end - a))
        for k in range(npts - 1):
            push(a + k)
        return WeightTable(base, a, tuple(logs), 0.0, bool(flipped_at), tuple(flipped_at))

    # infinite support: extend until both the mass tail and the tail weighted
    # by max(1, |X|)^(2*degree_hint) drop below the relative bound
    power = 2.0 * max(1, degree_hint)

    def heavy(k: int) -> float:
        s = a + k
        logmu = logs[k] + math.log(abs(g.delta_x_half(s)))
        return logmu + power * math.log(max(1.0, abs(g.x_raw(s))))

    mass_partial = Neumaier()
    mass_partial.add(math.exp(logs[0] + math.log(abs(g.delta_x_half(a)))))
    heavy_max = heavy(0)
    prev_heavy = heavy_max
    k = 0
    # extra geometric-decay margin past the bound: on decreasing lattices the
    # polynomials tend to 1 in the tail while high-degree norms are tiny, so
    # pairing sums need the tail pushed well below the plain mass criterion
    padding = 2 * max(1, degree_hint)
    pad_left = None
    while True:
        if k + 1 >= _MAX_POINTS:
            raise TruncationError(
                f"{base.kind}: weight table exceeded {_MAX_POINTS} points without meeting its tail bound"
            )
        push(a + k)
        k += 1
        logmu = logs[k] + math.log(abs(g.delta_x_half(a + k)))
        if logmu > 600.0:
            raise TruncationError(
                f"{base.kind}: weight measure diverges (log mass {logmu:.1f} at s={a + k})"
            )
        mass_partial.add(math.exp(logmu))
        h = heavy(k)
        heavy_max = max(heavy_max, h)
        rh = math.exp(min(h - prev_heavy, 0.0)) if h < prev_heavy else 1.0
        prev_heavy = h
        if pad_left is not None:
            pad_left -= 1
            if pad_left <= 0:
                mass_tail = math.exp(logmu + math.log(rh) - math.log1p(-rh)) if rh < 1.0 else math.inf
                bound = mass_tail / mass_partial.value
                return WeightTable(
                    base, a, tuple(logs), bound, bool(flipped_at), tuple(flipped_at)
                )
            continue
        if rh < 0.999:
            tail_log = h + math.log(rh) - math.log1p(-rh)
            if tail_log <= heavy_max + math.log(_TAIL_REL):
                mass_tail = math.exp(logmu + math.log(rh) - math.log1p(-rh))
                if mass_tail / mass_partial.value <= _TAIL_REL:
                    pad_left = padding


def _poly_values(base: FamilySpec, table: WeightTable, degree: int) -> list[float]:
    """Polynomial values over the table, summed in exact rational arithmetic.

    Direct float summation loses all digits near the top lattice points at
    higher degrees (the terminating series cancels by many orders there), so
    orthogonality sums evaluate through the exact lattice path.
    """
    return [eval_exact_at_support(base, degree, k) for k in range(len(table))]


def _pair_sum_values(
    table: WeightTable, vm: list[float], vn: list[float]
) -> float:
    acc = Neumaier()
    for k in range(len(table)):
        prod = vm[k] * vn[k]
        if prod == 0.0:
            continue
        acc.add(math.copysign(math.exp(math.log(abs(prod)) + table.log_measure(k)), prod))
    return acc.value


def _pair_sum(base: FamilySpec, table: WeightTable, m: int, n: int) -> float:
    vm = _poly_values(base, table, m)
    vn = vm if n == m else _poly_values(base, table, n)
    return _pair_sum_values(table, vm, vn)


def norm_sq(family: FamilySpec, n: int, table: WeightTable | None = None) -> float:
    """Squared norm of the degree-n polynomial under the positive measure."""
    base = family.resolve_base()
    if table is None:
        table = weight_table(base, degree_hint=max(n, 1))
    return _pair_sum(base, table, n, n)


def orthogonality_residual(
    family: FamilySpec, m: int, n: int, table: WeightTable | None = None
) -> float:
    """Normalized pairing of degrees m and n; the m = n case returns the norm squared."""
    base = family.resolve_base()
    if table is None:
        table = weight_table(base, degree_hint=max(m, n, 1))
    if m == n:
        return _pair_sum(base, table, m, m)
    smn = _pair_sum(base, table, m, n)
    return abs(smn) / math.sqrt(
        _pair_sum(base, table, m, m) * _pair_sum(base, table, n, n)
    )


def gram_offdiag_max(
    family: FamilySpec, kmax: int, table: WeightTable | None = None
) -> float:
    """Largest normalized off-diagonal entry of the Gram matrix of degrees 0..kmax."""
    base = family.resolve_base()
    if table is None:
        table = weight_table(base, degree_hint=max(kmax, 1))
    values = [_poly_values(base, table, d) for d in range(kmax + 1)]
    norms = [_pair_sum_values(table, v, v) for v in values]
    worst = 0.0
    for m in range(kmax + 1):
        for n in range(m + 1, kmax + 1):
            r = abs(_pair_sum_values(table, values[m], values[n])) / math.sqrt(
                norms[m] * norms[n]
            )
            worst = max(worst, r)
    return worst


def pearson_residual_max(family: FamilySpec, table: WeightTable | None = None) -> float:
    """Largest pointwise residual of the ratio recurrence over the table."""
    base = family.resolve_base()
    if table is None:
        table = weight_table(base)
    g = base.grid
    worst = 0.0
    for k in range(len(table) - 1):
        s = table.s_at(k)
        _, B = base.coeffs_AB(s)
        A1, _ = base.coeffs_AB(s + 1.0)
        t2 = B * g.delta_x_half(s)
        t1 = A1 * g.delta_x_half(s + 1.0)
        # w(s+1) t1 - w(s) t2 = 0, evaluated through the log table
        lhs = math.exp(table.log_values[k + 1] - table.log_values[k]) * t1
        scale = max(abs(lhs), abs(t2))
        if scale > 0.0:
            worst = max(worst, abs(lhs - t2) / scale)
    return worst


@dataclass(frozen=True)
class BoundaryReport:
    passed: bool
    start_residuals: tuple[float, ...]
    end_residuals: tuple[float, ...]


def _a_lower(base: FamilySpec, s: float) -> float:
    """The lower-coefficient product A(s) * dx(s-1) * dx(s-1/2), limit-safe in A."""
    g = base.grid
    try:
        A, _ = base.coeffs_AB(s)
    except Exception:
        A, _ = base.coeffs_AB(s + 1e-7)
    return A * g.delta_x(s - 1.0) * g.delta_x_half(s)


def boundary_check(family: FamilySpec, k_max: int = 3) -> BoundaryReport:
    """Verify that the weighted lower coefficient vanishes at both support ends.

    Finite support: w(a) a(a) = 0 and w(b) a(b) = 0 exactly (up to rounding).
    Infinite support: the tabulated tail term must have decayed relative to the
    table maximum, for each moment order k = 0..k_max.
    """
    base = family.resolve_base()
    table = weight_table(base, degree_hint=max(k_max, 2), allow_sign_flip=True)
    g = base.grid
    a = base.support_start
    scale = max(math.exp(lv) for lv in table.log_values)
    start = []
    end = []
    if base.is_finite:
        b = base.support_end
        aa = _a_lower(base, a)
        r = weight_ratio(base, b - 1.0)
        w_b = math.exp(table.log_values[-1]) * abs(r)
        ab = _a_lower(base, b)
        for k in range(k_max + 1):
            xa = g.x_raw(a - 0.5) ** k
            xb = g.x_raw(b - 0.5) ** k
            start.append(abs(1.0 * aa * xa) / scale)
            end.append(abs(w_b * ab * xb) / scale)
        tol = 1e-10 * max(1.0, abs(g.x_raw(b - 0.5))) ** k_max
        ok = all(r <= tol for r in start + end)
        return BoundaryReport(ok, tuple(start), tuple(end))
    aa = _a_lower(base, a)
    last = len(table) - 1
    s_last = table.s_at(last)
    a_last = _a_lower(base, s_last)
    log_max = max(table.log_values)
    for k in range(k_max + 1):
        xa = g.x_raw(a - 0.5) ** k
        start.append(abs(aa * xa) / scale)
        tail = table.log_values[last] + math.log(max(abs(a_last), 1e-300))
        tail += k * math.log(max(1.0, abs(g.x_raw(s_last - 0.5))))
        end.append(math.exp(tail - log_max) / max(scale, 1.0))
    ok = all(r <= 1e-10 for r in start) and all(r <= 1e-8 for r in end)
    return BoundaryReport(ok, tuple(start), tuple(end))
