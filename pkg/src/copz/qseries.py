"""Terminating hypergeometric and basic hypergeometric sums plus identity oracles.

The basic series uses the convention

    sum_k  (a1..ai; q)_k / [(b1..bj; q)_k (q; q)_k] * [(-1)^k q^C(k,2)]^(1+j-i) * z^k,

so the correction factor is trivial whenever i = j + 1.  A series is summed
over k = 0..n only; the caller supplies the termination degree n.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UndefinedSeriesError

# when set, the terminating sums run in exact rational arithmetic; float
# inputs are exact binary rationals, so only the final conversion rounds
_EXACT = contextvars.ContextVar("copz_exact_series", default=False)


@contextlib.contextmanager
def exact_summation():
    """Evaluate terminating series exactly (slow path for ill-conditioned sums)."""
    token = _EXACT.set(True)
    try:
        yield
    finally:
        _EXACT.reset(token)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k; the empty product is 1."""
    out = 1.0
    for j in range(k):
        out *= a + j
    return out


def q_pochhammer(a: float, q: float, k: int) -> float:
    """(a; q)_k = prod_{j<k} (1 - a q^j)."""
    out = 1.0
    p = 1.0
    for _ in range(k):
        out *= 1.0 - a * p
        p *= q
    return out


class Neumaier:
    """Compensated accumulator for short alternating sums."""

    __slots__ = ("total", "comp")

    def __init__(self):
        self.total = 0.0
        self.comp = 0.0

    def add(self, v: float) -> None:
        t = self.total + v
        if abs(self.total) >= abs(v):
            self.comp += (self.total - t) + v
        else:
            self.comp += (v - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self.comp


def _hyper_sum_exact(num, den, z: float, n: int) -> float:
    numf = [Fraction(a) for a in num]
    denf = [Fraction(b) for b in den]
    term = Fraction(1)
    total = Fraction(1)
    zf = Fraction(z)
    for k in range(n):
        ratio = zf / (k + 1)
        for a in numf:
            ratio *= a + k
        for b in denf:
            d = b + k
            if d == 0:
                raise UndefinedSeriesError(
                    f"denominator parameter {b!r} vanishes at k={k + 1}"
                )
            ratio /= d
        term *= ratio
        total += term
    return float(total)


def hyper_sum(num, den, z: float, n: int) -> float:
    """Terminating ordinary series iFj(num; den; z), summed over k = 0..n."""
    if _EXACT.get():
        return _hyper_sum_exact(num, den, z, n)
    acc = Neumaier()
    term = 1.0
    acc.add(term)
    for k in range(n):
        ratio = z / (k + 1.0)
        for a in num:
            ratio *= a + k
        for b in den:
            d = b + k
            if d == 0.0:
                raise UndefinedSeriesError(
                    f"denominator parameter {b!r} vanishes at k={k + 1}"
                )
            ratio /= d
        term *= ratio
        acc.add(term)
    return acc.value


def _qhyper_sum_exact(num, den, q: float, z: float, n: int) -> float:
    numf = [Fraction(a) for a in num]
    denf = [Fraction(b) for b in den]
    qf = Fraction(q)
    excess = 1 + len(den) - len(num)
    term = Fraction(1)
    total = Fraction(1)
    zf = Fraction(z)
    qk = Fraction(1)
    for k in range(n):
        ratio = zf
        for a in numf:
            ratio *= 1 - a * qk
        for b in denf:
            d = 1 - b * qk
            if d == 0:
                raise UndefinedSeriesError(
                    f"denominator parameter {b!r} vanishes at k={k + 1}"
                )
            ratio /= d
        ratio /= 1 - qf * qk
        if excess:
            ratio *= (-qk) ** excess
        term *= ratio
        total += term
        qk *= qf
    return float(total)


def qhyper_sum(num, den, q: float, z: float, n: int) -> float:
    """Terminating basic series iφj(num; den; q, z), summed over k = 0..n."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"base q must lie in (0, 1), got {q!r}")
    if _EXACT.get():
        return _qhyper_sum_exact(num, den, q, z, n)
    excess = 1 + len(den) - len(num)
    acc = Neumaier()
    term = 1.0
    acc.add(term)
    qk = 1.0  # q^k
    for k in range(n):
        ratio = z
        for a in num:
            ratio *= 1.0 - a * qk
        for b in den:
            d = 1.0 - b * qk
            if d == 0.0:
                raise UndefinedSeriesError(
                    f"denominator parameter {b!r} vanishes at k={k + 1}"
                )
            ratio /= d
        ratio /= 1.0 - q * qk
        if excess:
            # ratio of consecutive ((-1)^k q^C(k,2))^excess factors
            ratio *= (-qk) ** excess
        term *= ratio
        acc.add(term)
        qk *= q
    return acc.value


@dataclass(frozen=True)
class SeriesSpec:
    """One terminating (q-)hypergeometric sum.

    Exactly one numerator parameter must mark termination at the stated
    degree: -n for ordinary series, q^-n for basic ones.
    """

    numerator: tuple
    denominator: tuple
    argument: float
    degree: int
    q: float | None = None


def eval_terminating_series(spec: SeriesSpec) -> float:
    n = spec.degree
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if spec.q is None:
        marker = -float(n)
        if not any(abs(a - marker) <= 1e-9 * max(1.0, n) for a in spec.numerator):
            raise DomainError(f"no numerator parameter equals -n = {marker}")
        return hyper_sum(spec.numerator, spec.denominator, spec.argument, n)
    marker = spec.q ** (-n)
    if not any(abs(a - marker) <= 1e-9 * marker for a in spec.numerator):
        raise DomainError(f"no numerator parameter equals q^-n = {marker}")
    return qhyper_sum(spec.numerator, spec.denominator, spec.q, spec.argument, n)


# ---------------------------------------------------------------------------
# closed-form identity oracles
# ---------------------------------------------------------------------------


def chu_vandermonde(n: int, b: float, c: float) -> float:
    """2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
    den = pochhammer(c, n)
    if den == 0.0:
        raise DomainError(f"(c)_n vanishes for c={c!r}, n={n}")
    return pochhammer(c - b, n) / den


def sheppard(n: int, a: float, b: float, c: float) -> float:
    """Balanced 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / [(c)_n (c-a-b)_n]."""
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if den == 0.0:
        raise DomainError(f"denominator shifted factorial vanishes for c={c!r}, n={n}")
    return pochhammer(c - a, n) * pochhammer(c - b, n) / den


def q_pfaff_saalschutz(n: int, a: float, b: float, c: float, q: float) -> float:
    """Balanced 3φ2(q^-n, a, b; c, a b q^(1-n)/c; q, q) in closed form."""
    if a == 0.0 or b == 0.0 or c == 0.0:
        raise DomainError("parameters of the balanced 3φ2 must be nonzero")
    den = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n)
    if den == 0.0:
        raise DomainError("denominator q-shifted factorial vanishes")
    return q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / den


def q_chu_vandermonde(n: int, b: float, c: float, q: float) -> float:
    """2φ1(q^-n, b; c; q, q) = b^n (c/b; q)_n / (c; q)_n."""
    if b == 0.0:
        raise DomainError("b must be nonzero")
    den = q_pochhammer(c, q, n)
    if den == 0.0:
        raise DomainError(f"(c; q)_n vanishes for c={c!r}, n={n}")
    return b**n * q_pochhammer(c / b, q, n) / den


_IDENTITIES = {
    "chu_vandermonde": chu_vandermonde,
    "sheppard": sheppard,
    "q_pfaff_saalschutz": q_pfaff_saalschutz,
    "q_chu_vandermonde": q_chu_vandermonde,
}


def identity_value(identity: str, **params) -> float:
    """Dispatch to one of the closed-form identity oracles by name."""
    try:
        fn = _IDENTITIES[identity]
    except KeyError:
        raise DomainError(
            f"unknown identity {identity!r}; known: {sorted(_IDENTITIES)}"
        ) from None
    return fn(**params)


def binom2(k: int) -> int:
    """k choose 2."""
    return k * (k - 1) // 2


def q_binom2_power(q: float, k: int) -> float:
    """q^C(k,2), kept separate so prefactors read like the defining formulas."""
    return q ** binom2(k)


__all__ = [
    "Neumaier",
    "SeriesSpec",
    "binom2",
    "chu_vandermonde",
    "eval_terminating_series",
    "hyper_sum",
    "identity_value",
    "pochhammer",
    "q_binom2_power",
    "q_chu_vandermonde",
    "q_pfaff_saalschutz",
    "q_pochhammer",
    "qhyper_sum",
    "sheppard",
]
