"""Catalog of discrete orthogonal polynomial families on the canonical lattices.

Each entry binds a lattice, parameter-domain validation, the (q-)hypergeometric
evaluation rule, the three-point difference-equation coefficients A and B, the
certified sign interval K, and the catalogued zero-monotonicity claims.

The three-point relation determines A and B only up to a common factor;
everything downstream consumes the ratio f = B/A and its signs, except the
weight recurrence, which needs the canonical scaling (it mixes A and B at
neighboring points).  The coefficients follow the standard tables in that
scaling; the intrinsic identity f(y) = -P(x(y-1))/P(x(y+1)) at every zero (see
the zeros module) is the arbiter for each entry, and two catalogued tables
(q-Bessel, little q-Laguerre) knowingly fail it and are kept as tabulated so
the diagnostics can flag them.

Alias families (q-Charlier, the first Al-Salam-Carlitz family, the special
big q-Jacobi case, q-Laguerre) are parameter/argument substitutions into a base
family and own no coefficient code of their own.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .errors import DomainError, SingularityError
from .grid import Q_EXP, Q_EXP_NEG, Grid
from .qseries import binom2, exact_summation, hyper_sum, q_pochhammer, qhyper_sum

INFINITE_DEGREE_CAP = 30
MAX_FINITE_SUPPORT = 60

#: the eighteen families carrying catalogued monotonicity statements
#: (q-Charlier is an alias of q-Meixner but has a statement of its own)
CORE_FAMILIES = (
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
    "q_bessel",
    "little_q_jacobi",
    "little_q_laguerre",
    "q_racah",
    "dual_q_hahn",
)

ALIAS_FAMILIES = ("q_charlier", "al_salam_carlitz_1", "big_q_jacobi_special", "q_laguerre")

FINITE_FAMILIES = (
    "hahn",
    "krawtchouk",
    "racah",
    "dual_hahn",
    "q_hahn",
    "q_krawtchouk",
    "affine_q_krawtchouk",
    "quantum_q_krawtchouk",
    "q_racah",
    "dual_q_hahn",
)


@dataclass(frozen=True)
class Claim:
    """One catalogued monotonicity statement for a single real parameter."""

    param: str
    direction: str  # "increasing" | "decreasing", in the polynomial variable X
    interval: tuple[float, float]  # stated validity interval (may be unbounded)
    window: tuple[float, float]  # finite sweep window inside the interval


def _central(lo: float, hi: float) -> tuple[float, float]:
    """Central 80% of a bounded interval."""
    pad = 0.1 * (hi - lo)
    return (lo + pad, hi - pad)


@dataclass(frozen=True)
class FamilySpec:
    """A validated family instance bound to its lattice."""

    kind: str
    params: Mapping[str, float]
    grid: Grid
    support_start: float
    support_end: float  # math.inf for infinite support
    degree_max: int
    base: "FamilySpec | None" = None
    zero_scale: float = 1.0

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.support_end)

    def resolve_base(self) -> "FamilySpec":
        return self.base if self.base is not None else self

    def eval_poly(self, n: int, X: float) -> float:
        """Value of the degree-n polynomial at the point X."""
        if not 0 <= n <= self.degree_max:
            raise DomainError(
                f"{self.kind}: degree n={n} outside 0..{self.degree_max}"
            )
        if self.base is not None:
            entry = _CATALOG[self.kind]
            pref = entry.prefactor(self.params, n)
            return pref * self.base.eval_poly(n, X / self.zero_scale)
        return _CATALOG[self.kind].series(self.params, n, X)

    def eval_at_s(self, n: int, s: float) -> float:
        """Value at the lattice point x(s); s may sit off the monotone branch."""
        return self.eval_poly(n, self.zero_scale * self.grid.x_raw(s))

    def coeffs_AB(self, s: float) -> tuple[float, float]:
        """The three-point coefficients (A, B) at s in the canonical scaling."""
        base = self.resolve_base()
        return _CATALOG[base.kind].ab(base.params, s)

    def monotonicity_f(self, s: float) -> float:
        """The coefficient ratio f = B/A whose signs steer the zero motion."""
        A, B = self.coeffs_AB(s)
        if A == 0.0:
            raise SingularityError(f"{self.kind}: A(s)=0 at s={s!r}")
        return B / A

    def f_partials(self, s: float, param: str) -> tuple[float, float]:
        """(df/ds, df/dparam) at s; closed forms where tabulated, else central differences."""
        if param not in self.params:
            raise DomainError(f"{self.kind} has no parameter {param!r}")
        h1 = 1e-6 * max(1.0, abs(s))
        f1 = (self.monotonicity_f(s + h1) - self.monotonicity_f(s - h1)) / (2.0 * h1)
        base = self.resolve_base()
        closed = _CATALOG[base.kind].f2_closed
        if self.base is None and param in closed:
            f2 = closed[param](base.params, s)
        else:
            t = float(self.params[param])
            h2 = 1e-6 * max(1.0, abs(t))
            up = self.with_param(param, t + h2).monotonicity_f(s)
            dn = self.with_param(param, t - h2).monotonicity_f(s)
            f2 = (up - dn) / (2.0 * h2)
        return f1, f2

    def k_interval(self) -> tuple[float, float]:
        """Certified sign interval for the hypotheses; contains the zero set."""
        base = self.resolve_base()
        return _CATALOG[base.kind].k_interval(base.params)

    def claims(self) -> tuple[Claim, ...]:
        return _CATALOG[self.kind].claims(self.params)

    def with_param(self, param: str, value: float) -> "FamilySpec":
        return make_family(self.kind, {**self.params, param: value})


@dataclass(frozen=True)
class _Entry:
    param_order: tuple[str, ...]
    domains: Mapping[str, str]
    validate: Callable[[dict], None]
    make_grid: Callable[[dict], Grid]
    support: Callable[[dict], tuple[float, float]]
    series: Callable[[dict, int, float], float] | None
    ab: Callable[[dict, float], tuple[float, float]] | None
    k_interval: Callable[[dict], tuple[float, float]] | None
    claims: Callable[[dict], tuple[Claim, ...]]
    sample: Callable[[random.Random], dict]
    f2_closed: Mapping[str, Callable[[dict, float], float]] = field(default_factory=dict)
    alias_map: Callable[[dict], tuple[str, dict]] | None = None
    zero_scale: Callable[[dict], float] = lambda p: 1.0
    prefactor: Callable[[dict, int], float] = lambda p, n: 1.0
    series_lattice: Callable[[dict, int, int], float] | None = None


def _need(ok: bool, kind: str, msg: str, got) -> None:
    if not ok:
        raise DomainError(f"{kind}: {msg} (got {got!r})")


def _check_N(kind: str, p: dict) -> int:
    N = p["N"]
    _need(float(N).is_integer(), kind, "N must be an integer", N)
    N = int(N)
    _need(2 <= N <= MAX_FINITE_SUPPORT, kind, f"N must satisfy 2 <= N <= {MAX_FINITE_SUPPORT}", N)
    return N


def _check_q(kind: str, p: dict) -> float:
    q = float(p["q"])
    _need(0.0 < q < 1.0, kind, "q must satisfy 0 < q < 1", q)
    return q


def _quadratic_s(X: float) -> float:
    return 0.5 * (-1.0 + math.sqrt(max(0.0, 1.0 + 4.0 * X)))


def _qsym_uv(X: float) -> tuple[float, float]:
    """(q^s, q^-s) both recovered from X = (q^s + q^-s)/2 >= 1.

    The small root goes through the reciprocal of the large one; the direct
    difference X - sqrt(X^2-1) cancels catastrophically for large X.
    """
    v = X + math.sqrt(max(0.0, X * X - 1.0))
    return 1.0 / v, v


# ---------------------------------------------------------------------------
# lattice X = s
# ---------------------------------------------------------------------------


def _hahn_validate(p):
    _need(p["alpha"] > -1.0, "hahn", "alpha must satisfy alpha > -1", p["alpha"])
    _need(p["beta"] > -1.0, "hahn", "beta must satisfy beta > -1", p["beta"])
    _check_N("hahn", p)


def _hahn_series(p, n, X):
    al, be, N = p["alpha"], p["beta"], p["N"]
    return hyper_sum((-n, -X, al + be + n + 1.0), (be + 1.0, 1.0 - N), 1.0, n)


def _hahn_ab(p, s):
    al, be, N = p["alpha"], p["beta"], p["N"]
    return s * (-s + al + N), (s + be + 1.0) * (-s + N - 1.0)


def _hahn_f2_alpha(p, s):
    al, be, N = p["alpha"], p["beta"], p["N"]
    return (s + be + 1.0) * (s - N + 1.0) / (s * (-s + al + N) ** 2)


def _hahn_f2_beta(p, s):
    al, N = p["alpha"], p["N"]
    return (-s + N - 1.0) / (s * (-s + al + N))


_HAHN_WINDOW = _central(-1.0, 3.0)  # representative finite window for (-1, inf)


def _hahn_claims(p):
    return (
        Claim("alpha", "decreasing", (-1.0, math.inf), _HAHN_WINDOW),
        Claim("beta", "increasing", (-1.0, math.inf), _HAHN_WINDOW),
    )


def _charlier_series(p, n, X):
    return hyper_sum((-n, -X), (), -1.0 / p["alpha"], n)


_POSITIVE_WINDOW = _central(0.0, 4.0)  # representative finite window for (0, inf)


def _krawtchouk_series(p, n, X):
    return hyper_sum((-n, -X), (1.0 - p["N"],), 1.0 / p["alpha"], n)


def _meixner_series(p, n, X):
    return hyper_sum((-n, -X), (p["beta"],), 1.0 - 1.0 / p["alpha"], n)


# ---------------------------------------------------------------------------
# lattice X = s(s+1)
# ---------------------------------------------------------------------------


def _racah_validate(p):
    _need(p["a"] > -0.5, "racah", "a must satisfy a > -1/2", p["a"])
    _need(p["alpha"] > -1.0, "racah", "alpha must satisfy alpha > -1", p["alpha"])
    _need(
        -1.0 < p["beta"] < 2.0 * p["a"] + 1.0,
        "racah",
        "beta must satisfy -1 < beta < 2a+1",
        p["beta"],
    )
    _check_N("racah", p)


def _racah_series(p, n, X):
    a, al, be, N = p["a"], p["alpha"], p["beta"], p["N"]
    s = _quadratic_s(X)
    return hyper_sum(
        (-n, al + be + n + 1.0, a - s, s + a + 1.0),
        (2.0 * a + al + N + 1.0, be + 1.0, 1.0 - N),
        1.0,
        n,
    )


def _racah_ab(p, s):
    a, al, be, N = p["a"], p["alpha"], p["beta"], p["N"]
    da = 2.0 * s * (2.0 * s + 1.0)
    db = 2.0 * (s + 1.0) * (2.0 * s + 1.0)
    if da == 0.0:
        if s == 0.0 and a == 0.0:
            # removable 0/0: the (s-a)/(2s) pair cancels at the support start
            A = (s + N) * (s - al - N) * (s - be) / (2.0 * (2.0 * s + 1.0))
        else:
            raise SingularityError(f"racah: coefficient pole at s={s!r}")
    else:
        A = (s - a) * (s + a + N) * (s - a - al - N) * (s + a - be) / da
    if db == 0.0:
        raise SingularityError(f"racah: coefficient pole at s={s!r}")
    B = (s + a + 1.0) * (s - a - N + 1.0) * (s + a + al + N + 1.0) * (s - a + be + 1.0) / db
    return A, B


def _racah_f2_alpha(p, s):
    a, al, be, N = p["a"], p["alpha"], p["beta"], p["N"]
    num = s * (2.0 * s + 1.0) * (s + a + 1.0) * (s - a - N + 1.0) * (s - a + be + 1.0)
    den = (s + 1.0) * (s - a) * (s + a + N) * (s - a - al - N) ** 2 * (s + a - be)
    if den == 0.0:
        raise SingularityError(f"racah: df/dalpha pole at s={s!r}")
    return num / den


def _racah_f2_beta(p, s):
    a, al, be, N = p["a"], p["alpha"], p["beta"], p["N"]
    num = s * (2.0 * s + 1.0) * (s + a + 1.0) * (s - a - N + 1.0) * (s + a + al + N + 1.0)
    den = (s + 1.0) * (s - a) * (s + a + N) * (s - a - al - N) * (s + a - be) ** 2
    if den == 0.0:
        raise SingularityError(f"racah: df/dbeta pole at s={s!r}")
    return num / den


def _racah_k(p):
    a, be, N = p["a"], p["beta"], p["N"]
    return (max(a, be - a), a + N - 1.0)


_RACAH_ALPHA_WINDOW = _central(-1.0, 2.5)


def _racah_claims(p):
    a = p["a"]
    blo = -1.0 if a >= 0.0 else a
    return (
        Claim("alpha", "decreasing", (-1.0, math.inf), _RACAH_ALPHA_WINDOW),
        Claim("beta", "increasing", (blo, 2.0 * a + 1.0), _central(blo, 2.0 * a + 1.0)),
    )


def _dual_hahn_validate(p):
    _need(p["a"] > -0.5, "dual_hahn", "a must satisfy a > -1/2", p["a"])
    _need(
        -1.0 < p["alpha"] < 2.0 * p["a"] + 1.0,
        "dual_hahn",
        "alpha must satisfy -1 < alpha < 2a+1",
        p["alpha"],
    )
    _check_N("dual_hahn", p)


def _dual_hahn_series(p, n, X):
    a, al, N = p["a"], p["alpha"], p["N"]
    s = _quadratic_s(X)
    return hyper_sum((-n, a - s, s + a + 1.0), (al + 1.0, 1.0 - N), 1.0, n)


def _dual_hahn_ab(p, s):
    a, al, N = p["a"], p["alpha"], p["N"]
    da = 2.0 * s * (2.0 * s + 1.0)
    db = 2.0 * (s + 1.0) * (2.0 * s + 1.0)
    if da == 0.0:
        if s == 0.0 and a == 0.0:
            A = (s + N) * (s - al) / (2.0 * (2.0 * s + 1.0))
        else:
            raise SingularityError(f"dual_hahn: coefficient pole at s={s!r}")
    else:
        A = (s - a) * (s + a + N) * (s + a - al) / da
    if db == 0.0:
        raise SingularityError(f"dual_hahn: coefficient pole at s={s!r}")
    B = (s + a + 1.0) * (-s + a + N - 1.0) * (s - a + al + 1.0) / db
    return A, B


def _dual_hahn_k(p):
    a, al, N = p["a"], p["alpha"], p["N"]
    return (max(a, al - a), a + N - 1.0)


def _dual_hahn_claims(p):
    a = p["a"]
    lo = -1.0 if a >= 0.0 else a
    return (
        Claim("alpha", "increasing", (lo, 2.0 * a + 1.0), _central(lo, 2.0 * a + 1.0)),
    )


# ---------------------------------------------------------------------------
# lattice X = q^-s
# ---------------------------------------------------------------------------


def _q_meixner_validate(p):
    q = _check_q("q_meixner", p)
    _need(p["alpha"] > 0.0, "q_meixner", "alpha must satisfy alpha > 0", p["alpha"])
    _need(
        0.0 <= p["beta"] < 1.0 / q,
        "q_meixner",
        "beta must satisfy 0 <= beta < 1/q",
        p["beta"],
    )


def _q_meixner_series(p, n, X):
    al, be, q = p["alpha"], p["beta"], p["q"]
    return qhyper_sum((q ** (-n), X), (be * q,), q, -(q ** (n + 1)) / al, n)


def _q_meixner_ab(p, s):
    al, be, q = p["alpha"], p["beta"], p["q"]
    u = q**s
    return (1.0 - u) * (1.0 + al * be * u), al * u * (1.0 - be * q * u)


def _q_meixner_f2_alpha(p, s):
    al, be, q = p["alpha"], p["beta"], p["q"]
    u = q**s
    return u * (1.0 - be * q * u) / ((1.0 - u) * (1.0 + al * be * u) ** 2)


def _q_meixner_f2_beta(p, s):
    al, be, q = p["alpha"], p["beta"], p["q"]
    u = q**s
    return -al * u * u * (al + q) / ((1.0 - u) * (1.0 + al * be * u) ** 2)


def _q_meixner_claims(p):
    q = p["q"]
    return (
        Claim("alpha", "increasing", (0.0, math.inf), _POSITIVE_WINDOW),
        Claim("beta", "decreasing", (0.0, 1.0 / q), _central(0.0, 1.0 / q)),
    )


def _asc2_validate(p):
    q = _check_q("al_salam_carlitz_2", p)
    _need(
        0.0 < p["alpha"] < 1.0 / q,
        "al_salam_carlitz_2",
        "alpha must satisfy 0 < alpha < 1/q",
        p["alpha"],
    )


def _asc2_series(p, n, X):
    al, q = p["alpha"], p["q"]
    pref = (-al) ** n * q ** (-binom2(n))
    return pref * qhyper_sum((q ** (-n), X), (), q, q**n / al, n)


def _asc2_ab(p, s):
    # the X-polynomial form (1-X)(alpha-X), alpha*q with X = q^-s carries an
    # extra X^2 common factor; the weight recurrence needs the canonical
    # scaling, so both entries are divided by X^2 (the ratio f is unchanged)
    al, q = p["alpha"], p["q"]
    u = q**s
    return (u - 1.0) * (al * u - 1.0), al * q ** (2.0 * s + 1.0)


def _asc2_k(p):
    al, q = p["alpha"], p["q"]
    return (max(0.0, -math.log(al) / math.log(q)), math.inf)


def _asc2_claims(p):
    q = p["q"]
    return (Claim("alpha", "increasing", (0.0, 1.0 / q), _central(0.0, 1.0 / q)),)


def _q_hahn_validate(p):
    q = _check_q("q_hahn", p)
    _need(0.0 < p["alpha"] < 1.0 / q, "q_hahn", "alpha must satisfy 0 < alpha < 1/q", p["alpha"])
    _need(0.0 < p["beta"] < 1.0 / q, "q_hahn", "beta must satisfy 0 < beta < 1/q", p["beta"])
    _check_N("q_hahn", p)


def _q_hahn_series(p, n, X):
    al, be, q, N = p["alpha"], p["beta"], p["q"], p["N"]
    return qhyper_sum(
        (q ** (-n), al * be * q ** (n + 1), X), (al * q, q ** (1 - N)), q, q, n
    )


def _q_hahn_ab(p, s):
    al, be, q, N = p["alpha"], p["beta"], p["q"], p["N"]
    u = q**s
    A = al * q * (1.0 - u) * (be - u * q ** (-N))
    B = (1.0 - u * q ** (1 - N)) * (1.0 - al * q * u)
    return A, B


def _q_hahn_claims(p):
    q = p["q"]
    win = _central(0.0, 1.0 / q)
    return (
        Claim("alpha", "decreasing", (0.0, 1.0 / q), win),
        Claim("beta", "increasing", (0.0, 1.0 / q), win),
    )


def _q_krawtchouk_validate(p):
    _check_q("q_krawtchouk", p)
    _need(p["alpha"] > 0.0, "q_krawtchouk", "alpha must satisfy alpha > 0", p["alpha"])
    _check_N("q_krawtchouk", p)


def _q_krawtchouk_series(p, n, X):
    al, q, N = p["alpha"], p["q"], p["N"]
    return qhyper_sum((q ** (-n), -al * q**n, X), (0.0, q ** (1 - N)), q, q, n)


def _q_krawtchouk_ab(p, s):
    al, q, N = p["alpha"], p["q"], p["N"]
    u = q**s
    return al * (u - 1.0), 1.0 - u * q ** (1 - N)


def _affine_qk_validate(p):
    q = _check_q("affine_q_krawtchouk", p)
    _need(
        0.0 < p["alpha"] < 1.0 / q,
        "affine_q_krawtchouk",
        "alpha must satisfy 0 < alpha < 1/q",
        p["alpha"],
    )
    _check_N("affine_q_krawtchouk", p)


def _affine_qk_series(p, n, X):
    al, q, N = p["alpha"], p["q"], p["N"]
    return qhyper_sum((q ** (-n), 0.0, X), (al * q, q ** (1 - N)), q, q, n)


def _affine_qk_ab(p, s):
    al, q, N = p["alpha"], p["q"], p["N"]
    u = q**s
    A = al * u * q ** (1 - N) * (u - 1.0)
    B = (1.0 - u * q ** (1 - N)) * (1.0 - al * q * u)
    return A, B


def _quantum_qk_validate(p):
    q = _check_q("quantum_q_krawtchouk", p)
    N = _check_N("quantum_q_krawtchouk", p)
    _need(
        p["alpha"] > q ** (1 - N),
        "quantum_q_krawtchouk",
        "alpha must satisfy alpha > q^(1-N)",
        p["alpha"],
    )


def _quantum_qk_series(p, n, X):
    al, q, N = p["alpha"], p["q"], p["N"]
    pref = q_pochhammer(q ** (-N), q, n) / (al**n * q ** (n * n))
    return pref * qhyper_sum((q ** (-n), X), (q ** (1 - N),), q, al * q ** (n + 1), n)


def _quantum_qk_ab(p, s):
    al, q, N = p["alpha"], p["q"], p["N"]
    u = q**s
    return (1.0 - u) * (al - u * q ** (-N)), -u * (1.0 - u * q ** (1 - N))


def _quantum_qk_k(p):
    al, q, N = p["alpha"], p["q"], p["N"]
    return (max(0.0, math.log(al) / math.log(q) + N), N - 1.0)


def _quantum_qk_claims(p):
    q, N = p["q"], p["N"]
    edge = q ** (1 - N)
    return (
        Claim("alpha", "decreasing", (edge, math.inf), _central(edge, 2.5 * edge)),
    )


# ---------------------------------------------------------------------------
# lattice X = q^s
# ---------------------------------------------------------------------------


def _q_bessel_validate(p):
    _check_q("q_bessel", p)
    _need(p["alpha"] > 0.0, "q_bessel", "alpha must satisfy alpha > 0", p["alpha"])


def _q_bessel_series(p, n, X):
    al, q = p["alpha"], p["q"]
    return qhyper_sum((q ** (-n), -al * q**n), (0.0,), q, q * X, n)


def _q_bessel_ab(p, s):
    al, q = p["alpha"], p["q"]
    return q**s - 1.0, al


def _little_qj_validate(p):
    q = _check_q("little_q_jacobi", p)
    _need(
        0.0 < p["alpha"] < 1.0 / q,
        "little_q_jacobi",
        "alpha must satisfy 0 < alpha < 1/q",
        p["alpha"],
    )
    _need(p["beta"] < 1.0 / q, "little_q_jacobi", "beta must satisfy beta < 1/q", p["beta"])


def _little_qj_series(p, n, X):
    al, be, q = p["alpha"], p["beta"], p["q"]
    return qhyper_sum((q ** (-n), al * be * q ** (n + 1)), (al * q,), q, q * X, n)


def _little_qj_ab(p, s):
    al, be, q = p["alpha"], p["beta"], p["q"]
    u = q**s
    return (u - 1.0) / u, al * (be * q * u - 1.0) / u


def _little_qj_claims(p):
    q = p["q"]
    return (
        Claim("alpha", "decreasing", (0.0, 1.0 / q), _central(0.0, 1.0 / q)),
        Claim("beta", "increasing", (-math.inf, 1.0 / q), _central(-2.0, 1.0 / q)),
    )


def _little_ql_validate(p):
    q = _check_q("little_q_laguerre", p)
    _need(
        0.0 < p["alpha"] < 1.0 / q,
        "little_q_laguerre",
        "alpha must satisfy 0 < alpha < 1/q",
        p["alpha"],
    )


def _little_ql_series(p, n, X):
    al, q = p["alpha"], p["q"]
    return qhyper_sum((q ** (-n), 0.0), (al * q,), q, q * X, n)


def _little_ql_ab(p, s):
    al, q = p["alpha"], p["q"]
    u = q**s
    return u - 1.0, al / u


def _little_ql_claims(p):
    q = p["q"]
    return (Claim("alpha", "decreasing", (0.0, 1.0 / q), _central(0.0, 1.0 / q)),)


# ---------------------------------------------------------------------------
# lattice X = (q^s + q^-s)/2
# ---------------------------------------------------------------------------


def _q_racah_validate(p):
    _check_q("q_racah", p)
    _need(p["a"] > 0.0, "q_racah", "a must satisfy a > 0", p["a"])
    _need(p["alpha"] > -1.0, "q_racah", "alpha must satisfy alpha > -1", p["alpha"])
    _need(
        -1.0 < p["beta"] < 2.0 * p["a"],
        "q_racah",
        "beta must satisfy -1 < beta < 2a",
        p["beta"],
    )
    _check_N("q_racah", p)


def _q_racah_series(p, n, X):
    a, al, be, q, N = p["a"], p["alpha"], p["beta"], p["q"], p["N"]
    u, v = _qsym_uv(X)  # u = q^s, v = q^-s
    qa = q**a
    return qhyper_sum(
        (q ** (-n), q ** (al + be + n + 1), qa * v, qa * u),
        (q ** (2 * a + al + N), q ** (be + 1), q ** (1 - N)),
        q,
        q,
        n,
    )


def _q_racah_ab(p, s):
    a, al, be, q, N = p["a"], p["alpha"], p["beta"], p["q"], p["N"]
    u = q**s
    u2 = u * u  # q^(2s)
    da = (q - 1.0) ** 2 * (u2 - 1.0) * (u2 / q - 1.0)
    db = (q - 1.0) ** 2 * (u2 - 1.0) * (u2 * q - 1.0)
    if da == 0.0 or db == 0.0:
        raise SingularityError(f"q_racah: coefficient pole at s={s!r}")
    A = (
        -4.0
        * q ** (al + be + 2.5)
        * (u * q ** (-a) - 1.0)
        * (u * q ** (a + N - 1) - 1.0)
        * (u * q ** (-a - al - N) - 1.0)
        * (u * q ** (a - be - 1) - 1.0)
        / da
    )
    B = (
        -4.0
        * q**1.5
        * (u * q**a - 1.0)
        * (u * q ** (-a - N + 1) - 1.0)
        * (u * q ** (a + al + N) - 1.0)
        * (u * q ** (-a + be + 1) - 1.0)
        / db
    )
    return A, B


def _q_racah_f2_alpha(p, s):
    # d f / d alpha, re-derived from the displayed ratio f = B/A
    a, al, be, q, N = p["a"], p["alpha"], p["beta"], p["q"], p["N"]
    u = q**s
    u2 = u * u
    num = (
        math.log(q)
        * (u2 - 1.0)
        * (u2 / q - 1.0)
        * (u * q**a - 1.0)
        * (u * q ** (1 - a - N) - 1.0)
        * (u * q ** (be + 1 - a) - 1.0)
    )
    den = (
        q ** (al + be + 1)
        * (u2 * q - 1.0)
        * (u * q ** (-a) - 1.0)
        * (u * q ** (a + N - 1) - 1.0)
        * (u * q ** (-a - al - N) - 1.0) ** 2
        * (u * q ** (a - be - 1) - 1.0)
    )
    if den == 0.0:
        raise SingularityError(f"q_racah: df/dalpha pole at s={s!r}")
    return num / den


def _q_racah_f2_beta(p, s):
    a, al, be, q, N = p["a"], p["alpha"], p["beta"], p["q"], p["N"]
    u = q**s
    u2 = u * u
    num = (
        math.log(q)
        * (u2 - 1.0)
        * (u2 / q - 1.0)
        * (u * q**a - 1.0)
        * (u * q ** (1 - a - N) - 1.0)
        * (u * q ** (a + al + N) - 1.0)
    )
    den = (
        q ** (al + be + 1)
        * (u2 * q - 1.0)
        * (u * q ** (-a) - 1.0)
        * (u * q ** (a + N - 1) - 1.0)
        * (u * q ** (-a - al - N) - 1.0)
        * (u * q ** (a - be - 1) - 1.0) ** 2
    )
    if den == 0.0:
        raise SingularityError(f"q_racah: df/dbeta pole at s={s!r}")
    return num / den


def _q_racah_k(p):
    a, be, N = p["a"], p["beta"], p["N"]
    return (max(a, be - a + 1.0), a + N - 1.0)


_Q_RACAH_ALPHA_WINDOW = _central(-1.0, 2.0)


def _q_racah_claims(p):
    a = p["a"]
    blo = -1.0 if a >= 0.5 else a - 0.5
    return (
        Claim("alpha", "decreasing", (-1.0, math.inf), _Q_RACAH_ALPHA_WINDOW),
        Claim("beta", "increasing", (blo, 2.0 * a), _central(blo, 2.0 * a)),
    )


def _dual_q_hahn_validate(p):
    _check_q("dual_q_hahn", p)
    _need(p["a"] > 0.0, "dual_q_hahn", "a must satisfy a > 0", p["a"])
    _need(
        -1.0 < p["alpha"] < 2.0 * p["a"],
        "dual_q_hahn",
        "alpha must satisfy -1 < alpha < 2a",
        p["alpha"],
    )
    _check_N("dual_q_hahn", p)


def _dual_q_hahn_series(p, n, X):
    a, al, q, N = p["a"], p["alpha"], p["q"], p["N"]
    u, v = _qsym_uv(X)
    qa = q**a
    return qhyper_sum(
        (q ** (-n), qa * v, qa * u), (q ** (al + 1), q ** (1 - N)), q, q, n
    )


def _dual_q_hahn_ab(p, s):
    # obtained from the four-factor q-quadratic table by sending its second
    # shape parameter to +inf; the q^s placement here is forced by the
    # three-point identity at the zeros (checked by the eq1 diagnostics)
    a, al, q, N = p["a"], p["alpha"], p["q"], p["N"]
    u = q**s
    u2 = u * u
    da = (q - 1.0) ** 2 * (u2 - 1.0) * (u2 / q - 1.0)
    db = (q - 1.0) ** 2 * (u2 - 1.0) * (u2 * q - 1.0)
    if da == 0.0 or db == 0.0:
        raise SingularityError(f"dual_q_hahn: coefficient pole at s={s!r}")
    A = (
        -4.0
        * u
        * q ** (-a + al - N + 2.5)
        * (u * q ** (-a) - 1.0)
        * (u * q ** (a + N - 1) - 1.0)
        * (u * q ** (a - al - 1) - 1.0)
        / da
    )
    B = (
        4.0
        * q**1.5
        * (u * q**a - 1.0)
        * (u * q ** (-a - N + 1) - 1.0)
        * (u * q ** (-a + al + 1) - 1.0)
        / db
    )
    return A, B


def _dual_q_hahn_k(p):
    a, al, N = p["a"], p["alpha"], p["N"]
    return (max(a, al - a + 1.0), a + N - 1.0)


def _dual_q_hahn_claims(p):
    a = p["a"]
    lo = -1.0 if a >= 0.5 else a - 0.5
    return (Claim("alpha", "increasing", (lo, 2.0 * a), _central(lo, 2.0 * a)),)


# ---------------------------------------------------------------------------
# exact evaluation at lattice points
#
# Near the top of the support the terminating series cancels to values far
# below the size of its terms, and those values are hypersensitive to rounding
# of the lattice coordinates and of the q-power parameters.  Building every
# q-power from shared exact rational atoms (the base and one rounding per real
# exponent) makes each family an exact polynomial model whose orthogonality
# identities hold to within the float weight table alone.
# ---------------------------------------------------------------------------


def _q_meixner_series_lattice(p, n, k):
    al, be, q = p["alpha"], p["beta"], p["q"]
    qf, alf, bef = Fraction(q), Fraction(al), Fraction(be)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, qf**-k), (bef * qf,), q, -(qf ** (n + 1)) / alf, n
        )


def _asc2_series_lattice(p, n, k):
    al, q = p["alpha"], p["q"]
    qf, alf = Fraction(q), Fraction(al)
    pref = (-al) ** n * q ** (-binom2(n))
    with exact_summation():
        return pref * qhyper_sum((qf**-n, qf**-k), (), q, (qf**n) / alf, n)


def _q_hahn_series_lattice(p, n, k):
    al, be, q, N = p["alpha"], p["beta"], p["q"], p["N"]
    qf, alf, bef = Fraction(q), Fraction(al), Fraction(be)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, alf * bef * qf ** (n + 1), qf**-k),
            (alf * qf, qf ** (1 - N)),
            q,
            q,
            n,
        )


def _q_krawtchouk_series_lattice(p, n, k):
    al, q, N = p["alpha"], p["q"], p["N"]
    qf, alf = Fraction(q), Fraction(al)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, -alf * qf**n, qf**-k),
            (Fraction(0), qf ** (1 - N)),
            q,
            q,
            n,
        )


def _affine_qk_series_lattice(p, n, k):
    al, q, N = p["alpha"], p["q"], p["N"]
    qf, alf = Fraction(q), Fraction(al)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, Fraction(0), qf**-k), (alf * qf, qf ** (1 - N)), q, q, n
        )


def _quantum_qk_series_lattice(p, n, k):
    al, q, N = p["alpha"], p["q"], p["N"]
    qf, alf = Fraction(q), Fraction(al)
    pref = q_pochhammer(q ** (-N), q, n) / (al**n * q ** (n * n))
    with exact_summation():
        return pref * qhyper_sum(
            (qf**-n, qf**-k), (qf ** (1 - N),), q, alf * qf ** (n + 1), n
        )


def _q_bessel_series_lattice(p, n, k):
    al, q = p["alpha"], p["q"]
    qf, alf = Fraction(q), Fraction(al)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, -alf * qf**n), (Fraction(0),), q, qf ** (k + 1), n
        )


def _little_qj_series_lattice(p, n, k):
    al, be, q = p["alpha"], p["beta"], p["q"]
    qf, alf, bef = Fraction(q), Fraction(al), Fraction(be)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, alf * bef * qf ** (n + 1)), (alf * qf,), q, qf ** (k + 1), n
        )


def _little_ql_series_lattice(p, n, k):
    al, q = p["alpha"], p["q"]
    qf, alf = Fraction(q), Fraction(al)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, Fraction(0)), (alf * qf,), q, qf ** (k + 1), n
        )


def _q_racah_series_lattice(p, n, k):
    a, al, be, q, N = p["a"], p["alpha"], p["beta"], p["q"], p["N"]
    qf = Fraction(q)
    qa = Fraction(q**a)
    qalpha = Fraction(q**al)
    qbeta = Fraction(q**be)
    w = qf**-k  # q^(a-s) at s = a+k
    u = qa * qa * qf**k  # q^(s+a)
    with exact_summation():
        return qhyper_sum(
            (qf**-n, qalpha * qbeta * qf ** (n + 1), w, u),
            (qa * qa * qalpha * qf**N, qbeta * qf, qf ** (1 - N)),
            q,
            q,
            n,
        )


def _dual_q_hahn_series_lattice(p, n, k):
    a, al, q, N = p["a"], p["alpha"], p["q"], p["N"]
    qf = Fraction(q)
    qa = Fraction(q**a)
    qalpha = Fraction(q**al)
    w = qf**-k
    u = qa * qa * qf**k
    with exact_summation():
        return qhyper_sum(
            (qf**-n, w, u), (qalpha * qf, qf ** (1 - N)), q, q, n
        )


# ---------------------------------------------------------------------------
# alias families
# ---------------------------------------------------------------------------


def _q_charlier_validate(p):
    _check_q("q_charlier", p)
    _need(p["alpha"] > 0.0, "q_charlier", "alpha must satisfy alpha > 0", p["alpha"])


def _big_qj_validate(p):
    q = _check_q("big_q_jacobi_special", p)
    _need(
        0.0 < p["alpha"] < 1.0 / q,
        "big_q_jacobi_special",
        "alpha must satisfy 0 < alpha < 1/q",
        p["alpha"],
    )
    _need(
        0.0 < p["beta"] < 1.0 / q,
        "big_q_jacobi_special",
        "beta must satisfy 0 < beta < 1/q",
        p["beta"],
    )


def _big_qj_prefactor(p, n):
    al, be, q = p["alpha"], p["beta"], p["q"]
    return (
        q_pochhammer(be * q, q, n)
        / q_pochhammer(al * q, q, n)
        * (-1.0) ** n
        * al**n
        * q ** (n + binom2(n))
    )


def _big_qj_claims(p):
    q = p["q"]
    win = _central(0.0, 1.0 / q)
    return (
        Claim("alpha", "increasing", (0.0, 1.0 / q), win),
        Claim("beta", "decreasing", (0.0, 1.0 / q), win),
    )


def _q_laguerre_validate(p):
    _check_q("q_laguerre", p)
    _need(p["alpha"] > -1.0, "q_laguerre", "alpha must satisfy alpha > -1", p["alpha"])


def _q_laguerre_prefactor(p, n):
    al, q = p["alpha"], p["q"]
    return q ** (-al * n) * q_pochhammer(q ** (al + 1), q, n) / q_pochhammer(q, q, n)


def _q_laguerre_claims(p):
    # direction follows from the alpha -> q^alpha substitution into the base
    # family; at degree 1 the zero is 1 - q^(alpha+1), increasing in alpha
    return (Claim("alpha", "increasing", (-1.0, math.inf), _central(-1.0, 2.0)),)


# ---------------------------------------------------------------------------
# random in-domain parameter draws (tests, verification suites)
# ---------------------------------------------------------------------------


def _rand_q(rng):
    return rng.uniform(0.35, 0.8)


def _with_q(rng, build):
    q = _rand_q(rng)
    out = build(q)
    out["q"] = q
    return out


def _rand_branch_value(rng, lo, hi):
    wlo, whi = _central(lo, hi)
    return rng.uniform(wlo, whi)


def _sample_hahn(rng):
    return {"alpha": rng.uniform(-0.8, 2.5), "beta": rng.uniform(-0.8, 2.5), "N": rng.randint(5, 12)}


def _sample_racah(rng):
    a = rng.uniform(-0.45, -0.05) if rng.random() < 0.3 else rng.uniform(0.0, 1.8)
    blo = a if a < 0.0 else -1.0
    return {
        "a": a,
        "alpha": rng.uniform(-0.8, 2.0),
        "beta": _rand_branch_value(rng, blo, 2.0 * a + 1.0),
        "N": rng.randint(5, 10),
    }


def _sample_dual_hahn(rng):
    a = rng.uniform(-0.45, -0.05) if rng.random() < 0.3 else rng.uniform(0.0, 1.8)
    lo = a if a < 0.0 else -1.0
    return {
        "a": a,
        "alpha": _rand_branch_value(rng, lo, 2.0 * a + 1.0),
        "N": rng.randint(5, 10),
    }


def _sample_q_racah(rng):
    q = rng.uniform(0.45, 0.8)
    a = rng.uniform(0.12, 0.45) if rng.random() < 0.3 else rng.uniform(0.5, 1.6)
    blo = a - 0.5 if a < 0.5 else -1.0
    return {
        "a": a,
        "alpha": rng.uniform(-0.8, 1.5),
        "beta": _rand_branch_value(rng, blo, 2.0 * a),
        "q": q,
        "N": rng.randint(5, 9),
    }


def _sample_dual_q_hahn(rng):
    q = rng.uniform(0.45, 0.8)
    a = rng.uniform(0.12, 0.45) if rng.random() < 0.3 else rng.uniform(0.5, 1.6)
    lo = a - 0.5 if a < 0.5 else -1.0
    return {
        "a": a,
        "alpha": _rand_branch_value(rng, lo, 2.0 * a),
        "q": q,
        "N": rng.randint(5, 9),
    }


def _sample_quantum_qk(rng):
    q = _rand_q(rng)
    N = rng.randint(5, 9)
    return {"alpha": q ** (1 - N) * rng.uniform(1.1, 2.5), "q": q, "N": N}


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

_CATALOG: dict[str, _Entry] = {}


def _register(name: str, entry: _Entry) -> None:
    _CATALOG[name] = entry


_register(
    "hahn",
    _Entry(
        param_order=("alpha", "beta", "N"),
        domains={"alpha": "alpha > -1", "beta": "beta > -1", "N": "integer 2..60"},
        validate=_hahn_validate,
        make_grid=lambda p: Grid.linear(),
        support=lambda p: (0.0, float(p["N"])),
        series=_hahn_series,
        ab=_hahn_ab,
        k_interval=lambda p: (0.0, p["N"] - 1.0),
        claims=_hahn_claims,
        f2_closed={"alpha": _hahn_f2_alpha, "beta": _hahn_f2_beta},
        sample=_sample_hahn,
    ),
)

_register(
    "charlier",
    _Entry(
        param_order=("alpha",),
        domains={"alpha": "alpha > 0"},
        validate=lambda p: _need(p["alpha"] > 0.0, "charlier", "alpha must satisfy alpha > 0", p["alpha"]),
        make_grid=lambda p: Grid.linear(),
        support=lambda p: (0.0, math.inf),
        series=_charlier_series,
        ab=lambda p, s: (s, p["alpha"]),
        k_interval=lambda p: (0.0, math.inf),
        claims=lambda p: (Claim("alpha", "increasing", (0.0, math.inf), _POSITIVE_WINDOW),),
        sample=lambda rng: {"alpha": rng.uniform(0.3, 3.5)},
    ),
)

_register(
    "krawtchouk",
    _Entry(
        param_order=("alpha", "N"),
        domains={"alpha": "0 < alpha < 1", "N": "integer 2..60"},
        validate=lambda p: (
            _need(0.0 < p["alpha"] < 1.0, "krawtchouk", "alpha must satisfy 0 < alpha < 1", p["alpha"]),
            _check_N("krawtchouk", p),
        ),
        make_grid=lambda p: Grid.linear(),
        support=lambda p: (0.0, float(p["N"])),
        series=_krawtchouk_series,
        ab=lambda p, s: ((1.0 - p["alpha"]) * s, p["alpha"] * (-s + p["N"] - 1.0)),
        k_interval=lambda p: (0.0, p["N"] - 1.0),
        claims=lambda p: (Claim("alpha", "increasing", (0.0, 1.0), _central(0.0, 1.0)),),
        sample=lambda rng: {"alpha": rng.uniform(0.08, 0.92), "N": rng.randint(5, 12)},
    ),
)

_register(
    "meixner",
    _Entry(
        param_order=("alpha", "beta"),
        domains={"alpha": "0 < alpha < 1", "beta": "beta > 0"},
        validate=lambda p: (
            _need(0.0 < p["alpha"] < 1.0, "meixner", "alpha must satisfy 0 < alpha < 1", p["alpha"]),
            _need(p["beta"] > 0.0, "meixner", "beta must satisfy beta > 0", p["beta"]),
        ),
        make_grid=lambda p: Grid.linear(),
        support=lambda p: (0.0, math.inf),
        series=_meixner_series,
        ab=lambda p, s: (s, p["alpha"] * (s + p["beta"])),
        k_interval=lambda p: (0.0, math.inf),
        claims=lambda p: (
            Claim("alpha", "increasing", (0.0, 1.0), _central(0.0, 1.0)),
            Claim("beta", "increasing", (0.0, math.inf), _POSITIVE_WINDOW),
        ),
        sample=lambda rng: {"alpha": rng.uniform(0.1, 0.85), "beta": rng.uniform(0.2, 3.5)},
    ),
)

_register(
    "racah",
    _Entry(
        param_order=("a", "alpha", "beta", "N"),
        domains={
            "a": "a > -1/2",
            "alpha": "alpha > -1",
            "beta": "-1 < beta < 2a+1",
            "N": "integer 2..60",
        },
        validate=_racah_validate,
        make_grid=lambda p: Grid.quadratic(),
        support=lambda p: (p["a"], p["a"] + p["N"]),
        series=_racah_series,
        ab=_racah_ab,
        k_interval=_racah_k,
        claims=_racah_claims,
        f2_closed={"alpha": _racah_f2_alpha, "beta": _racah_f2_beta},
        sample=_sample_racah,
    ),
)

_register(
    "dual_hahn",
    _Entry(
        param_order=("a", "alpha", "N"),
        domains={"a": "a > -1/2", "alpha": "-1 < alpha < 2a+1", "N": "integer 2..60"},
        validate=_dual_hahn_validate,
        make_grid=lambda p: Grid.quadratic(),
        support=lambda p: (p["a"], p["a"] + p["N"]),
        series=_dual_hahn_series,
        ab=_dual_hahn_ab,
        k_interval=_dual_hahn_k,
        claims=_dual_hahn_claims,
        sample=_sample_dual_hahn,
    ),
)

_register(
    "q_meixner",
    _Entry(
        param_order=("alpha", "beta", "q"),
        domains={"alpha": "alpha > 0", "beta": "0 <= beta < 1/q", "q": "0 < q < 1"},
        validate=_q_meixner_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=_q_meixner_series,
        ab=_q_meixner_ab,
        k_interval=lambda p: (0.0, math.inf),
        claims=_q_meixner_claims,
        f2_closed={"alpha": _q_meixner_f2_alpha, "beta": _q_meixner_f2_beta},
        series_lattice=_q_meixner_series_lattice,
        sample=lambda rng: _with_q(
            rng,
            lambda q: {"alpha": rng.uniform(0.3, 3.0), "beta": rng.uniform(0.05, 0.9) / q},
        ),
    ),
)

_register(
    "al_salam_carlitz_2",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "0 < alpha < 1/q", "q": "0 < q < 1"},
        validate=_asc2_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=_asc2_series,
        ab=_asc2_ab,
        k_interval=_asc2_k,
        claims=_asc2_claims,
        series_lattice=_asc2_series_lattice,
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(0.1, 0.9) / q}),
    ),
)

_register(
    "q_hahn",
    _Entry(
        param_order=("alpha", "beta", "q", "N"),
        domains={
            "alpha": "0 < alpha < 1/q",
            "beta": "0 < beta < 1/q",
            "q": "0 < q < 1",
            "N": "integer 2..60",
        },
        validate=_q_hahn_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, float(p["N"])),
        series=_q_hahn_series,
        ab=_q_hahn_ab,
        k_interval=lambda p: (0.0, p["N"] - 1.0),
        claims=_q_hahn_claims,
        series_lattice=_q_hahn_series_lattice,
        sample=lambda rng: _with_q(
            rng,
            lambda q: {
                "alpha": rng.uniform(0.08, 0.9) / q,
                "beta": rng.uniform(0.08, 0.9) / q,
                "N": rng.randint(5, 10),
            },
        ),
    ),
)

_register(
    "q_krawtchouk",
    _Entry(
        param_order=("alpha", "q", "N"),
        domains={"alpha": "alpha > 0", "q": "0 < q < 1", "N": "integer 2..60"},
        validate=_q_krawtchouk_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, float(p["N"])),
        series=_q_krawtchouk_series,
        ab=_q_krawtchouk_ab,
        k_interval=lambda p: (0.0, p["N"] - 1.0),
        claims=lambda p: (Claim("alpha", "decreasing", (0.0, math.inf), _POSITIVE_WINDOW),),
        series_lattice=_q_krawtchouk_series_lattice,
        sample=lambda rng: _with_q(
            rng, lambda q: {"alpha": rng.uniform(0.2, 3.0), "N": rng.randint(5, 10)}
        ),
    ),
)

_register(
    "affine_q_krawtchouk",
    _Entry(
        param_order=("alpha", "q", "N"),
        domains={"alpha": "0 < alpha < 1/q", "q": "0 < q < 1", "N": "integer 2..60"},
        validate=_affine_qk_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, float(p["N"])),
        series=_affine_qk_series,
        ab=_affine_qk_ab,
        k_interval=lambda p: (0.0, p["N"] - 1.0),
        claims=lambda p: (
            Claim("alpha", "decreasing", (0.0, 1.0 / p["q"]), _central(0.0, 1.0 / p["q"])),
        ),
        series_lattice=_affine_qk_series_lattice,
        sample=lambda rng: _with_q(
            rng,
            lambda q: {"alpha": rng.uniform(0.1, 0.9) / q, "N": rng.randint(5, 10)},
        ),
    ),
)

_register(
    "quantum_q_krawtchouk",
    _Entry(
        param_order=("alpha", "q", "N"),
        domains={"alpha": "alpha > q^(1-N)", "q": "0 < q < 1", "N": "integer 2..60"},
        validate=_quantum_qk_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, float(p["N"])),
        series=_quantum_qk_series,
        ab=_quantum_qk_ab,
        k_interval=_quantum_qk_k,
        claims=_quantum_qk_claims,
        series_lattice=_quantum_qk_series_lattice,
        sample=_sample_quantum_qk,
    ),
)

_register(
    "q_bessel",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "alpha > 0", "q": "0 < q < 1"},
        validate=_q_bessel_validate,
        make_grid=lambda p: Grid.q_exp(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=_q_bessel_series,
        ab=_q_bessel_ab,
        k_interval=lambda p: (0.0, math.inf),
        claims=lambda p: (Claim("alpha", "decreasing", (0.0, math.inf), _POSITIVE_WINDOW),),
        series_lattice=_q_bessel_series_lattice,
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(0.2, 3.0)}),
    ),
)

_register(
    "little_q_jacobi",
    _Entry(
        param_order=("alpha", "beta", "q"),
        domains={"alpha": "0 < alpha < 1/q", "beta": "beta < 1/q", "q": "0 < q < 1"},
        validate=_little_qj_validate,
        make_grid=lambda p: Grid.q_exp(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=_little_qj_series,
        ab=_little_qj_ab,
        k_interval=lambda p: (0.0, math.inf),
        claims=_little_qj_claims,
        series_lattice=_little_qj_series_lattice,
        sample=lambda rng: _with_q(
            rng,
            lambda q: {
                "alpha": rng.uniform(0.1, 0.9) / q,
                "beta": rng.uniform(-1.5, 0.9 / q),
            },
        ),
    ),
)

_register(
    "little_q_laguerre",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "0 < alpha < 1/q", "q": "0 < q < 1"},
        validate=_little_ql_validate,
        make_grid=lambda p: Grid.q_exp(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=_little_ql_series,
        ab=_little_ql_ab,
        k_interval=lambda p: (0.0, math.inf),
        claims=_little_ql_claims,
        series_lattice=_little_ql_series_lattice,
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(0.1, 0.9) / q}),
    ),
)

_register(
    "q_racah",
    _Entry(
        param_order=("a", "alpha", "beta", "q", "N"),
        domains={
            "a": "a > 0",
            "alpha": "alpha > -1",
            "beta": "-1 < beta < 2a",
            "q": "0 < q < 1",
            "N": "integer 2..60",
        },
        validate=_q_racah_validate,
        make_grid=lambda p: Grid.q_symmetric(p["q"]),
        support=lambda p: (p["a"], p["a"] + p["N"]),
        series=_q_racah_series,
        ab=_q_racah_ab,
        k_interval=_q_racah_k,
        claims=_q_racah_claims,
        f2_closed={"alpha": _q_racah_f2_alpha, "beta": _q_racah_f2_beta},
        sample=_sample_q_racah,
        series_lattice=_q_racah_series_lattice,
    ),
)

_register(
    "dual_q_hahn",
    _Entry(
        param_order=("a", "alpha", "q", "N"),
        domains={
            "a": "a > 0",
            "alpha": "-1 < alpha < 2a",
            "q": "0 < q < 1",
            "N": "integer 2..60",
        },
        validate=_dual_q_hahn_validate,
        make_grid=lambda p: Grid.q_symmetric(p["q"]),
        support=lambda p: (p["a"], p["a"] + p["N"]),
        series=_dual_q_hahn_series,
        ab=_dual_q_hahn_ab,
        k_interval=_dual_q_hahn_k,
        claims=_dual_q_hahn_claims,
        sample=_sample_dual_q_hahn,
        series_lattice=_dual_q_hahn_series_lattice,
    ),
)

# alias entries -------------------------------------------------------------

_register(
    "q_charlier",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "alpha > 0", "q": "0 < q < 1"},
        validate=_q_charlier_validate,
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=None,
        ab=None,
        k_interval=None,
        claims=lambda p: (Claim("alpha", "increasing", (0.0, math.inf), _POSITIVE_WINDOW),),
        alias_map=lambda p: ("q_meixner", {"alpha": p["alpha"], "beta": 0.0, "q": p["q"]}),
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(0.3, 3.0)}),
    ),
)

_register(
    "al_salam_carlitz_1",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "0 < alpha < 1/q", "q": "0 < q < 1"},
        validate=lambda p: _asc2_validate({**p}),
        make_grid=lambda p: Grid.q_exp_neg(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=None,
        ab=None,
        k_interval=None,
        claims=_asc2_claims,
        alias_map=lambda p: ("al_salam_carlitz_2", dict(p)),
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(0.1, 0.9) / q}),
    ),
)

_register(
    "big_q_jacobi_special",
    _Entry(
        param_order=("alpha", "beta", "q"),
        domains={"alpha": "0 < alpha < 1/q", "beta": "0 < beta < 1/q", "q": "0 < q < 1"},
        validate=_big_qj_validate,
        make_grid=lambda p: Grid.q_exp(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=None,
        ab=None,
        k_interval=None,
        claims=_big_qj_claims,
        alias_map=lambda p: (
            "little_q_jacobi",
            {"alpha": p["beta"], "beta": p["alpha"], "q": p["q"]},
        ),
        zero_scale=lambda p: p["alpha"] * p["q"],
        prefactor=_big_qj_prefactor,
        sample=lambda rng: _with_q(
            rng,
            lambda q: {
                "alpha": rng.uniform(0.1, 0.9) / q,
                "beta": rng.uniform(0.1, 0.9) / q,
            },
        ),
    ),
)

_register(
    "q_laguerre",
    _Entry(
        param_order=("alpha", "q"),
        domains={"alpha": "alpha > -1", "q": "0 < q < 1"},
        validate=_q_laguerre_validate,
        make_grid=lambda p: Grid.q_exp(p["q"]),
        support=lambda p: (0.0, math.inf),
        series=None,
        ab=None,
        k_interval=None,
        claims=_q_laguerre_claims,
        alias_map=lambda p: (
            "little_q_laguerre",
            {"alpha": p["q"] ** p["alpha"], "q": p["q"]},
        ),
        sample=lambda rng: _with_q(rng, lambda q: {"alpha": rng.uniform(-0.8, 1.5)}),
    ),
)


# ---------------------------------------------------------------------------
# public constructors and catalog access
# ---------------------------------------------------------------------------


def normalize_kind(kind: str) -> str:
    key = kind.strip().lower().replace("-", "_").replace(" ", "_")
    if key not in _CATALOG:
        raise DomainError(f"unknown family {kind!r}; known: {', '.join(sorted(_CATALOG))}")
    return key


def catalog_kinds() -> tuple[str, ...]:
    return tuple(_CATALOG)


def make_family(kind: str, params: Mapping[str, float] | None = None, **kw) -> FamilySpec:
    """Validate parameters and bind a family to its lattice.

    Raises DomainError naming the violated inequality when a parameter lies
    outside its family's domain.
    """
    key = normalize_kind(kind)
    entry = _CATALOG[key]
    p = dict(params or {})
    p.update(kw)
    expected = set(entry.param_order)
    given = set(p)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        parts = []
        if missing:
            parts.append(f"missing {missing}")
        if extra:
            parts.append(f"unexpected {extra}")
        raise DomainError(f"{key}: parameter mismatch ({'; '.join(parts)})")
    p = {k: float(v) for k, v in p.items()}
    entry.validate(p)
    if "N" in p:
        p["N"] = int(p["N"])
    a, b = entry.support(p)
    degree_max = int(p["N"]) - 1 if "N" in p else INFINITE_DEGREE_CAP
    base = None
    zero_scale = 1.0
    if entry.alias_map is not None:
        base_kind, base_params = entry.alias_map(p)
        base = make_family(base_kind, base_params)
        zero_scale = entry.zero_scale(p)
        degree_max = base.degree_max
    return FamilySpec(
        kind=key,
        params=p,
        grid=entry.make_grid(p),
        support_start=a,
        support_end=b,
        degree_max=degree_max,
        base=base,
        zero_scale=zero_scale,
    )


def sample_params(kind: str, rng: random.Random) -> dict:
    """Draw one in-domain parameter set; used by randomized verification."""
    return _CATALOG[normalize_kind(kind)].sample(rng)


def eval_exact_at_support(family: FamilySpec, n: int, k: int) -> float:
    """Value at the k-th support point, summed in exact rational arithmetic.

    q-lattice coordinates are taken as exact rational powers of the base, so
    the terminating series cancels exactly at the lattice points; the float
    coordinate rounding otherwise dominates at degrees whose upper zeros crowd
    the top of the support.
    """
    base = family.resolve_base()
    if not 0 <= n <= base.degree_max:
        raise DomainError(f"{base.kind}: degree n={n} outside 0..{base.degree_max}")
    entry = _CATALOG[base.kind]
    if entry.series_lattice is not None:
        return entry.series_lattice(base.params, n, k)
    g = base.grid
    if g.tag == Q_EXP_NEG:
        X = Fraction(g.q) ** (-k)
    elif g.tag == Q_EXP:
        X = Fraction(g.q) ** k
    else:
        X = g.x_raw(base.support_start + k)
    with exact_summation():
        return entry.series(base.params, n, X)


def family_info(kind: str) -> dict:
    """JSON-friendly catalog record for one family."""
    key = normalize_kind(kind)
    entry = _CATALOG[key]
    rng = random.Random(0)
    p = sample_params(key, rng)
    spec = make_family(key, p)
    return {
        "kind": key,
        "params": list(entry.param_order),
        "domains": dict(entry.domains),
        "grid": spec.grid.tag,
        "finite_support": spec.is_finite,
        "alias_of": entry.alias_map(p)[0] if entry.alias_map else None,
        "claims": [
            {"param": c.param, "direction": c.direction}
            for c in spec.claims()
        ],
    }


@dataclass(frozen=True)
class ZeroProblem:
    """A family instance, a degree, and optionally the parameter to vary."""

    family: FamilySpec
    degree: int
    sweep_param: str | None = None

    def __post_init__(self):
        if not 1 <= self.degree <= self.family.degree_max:
            raise DomainError(
                f"degree {self.degree} outside 1..{self.family.degree_max} for {self.family.kind}"
            )
        if self.sweep_param is not None and self.sweep_param not in self.family.params:
            raise DomainError(
                f"{self.family.kind} has no parameter {self.sweep_param!r}"
            )
