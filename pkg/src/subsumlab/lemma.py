"""Concrete checks of the forbidden-subsum induction bound and of the exponent
arithmetic behind the improved upper bounds on distinct represented sets.

Notation used throughout: ``R(n, a)`` is the number of partitions of ``n`` (in
the chosen class) that do not represent ``a``; ``P = count(n, class)``;
``b = floor(eps*sqrt(n))``.

* hypothesis window: integers ``a`` in ``[ceil(eps*sqrt(n) - 1), floor(2*eps*sqrt(n))]``
  clamped to ``[0, n]``; the hypothesis at ``delta`` is ``R(n, a) <= P**delta``
  on that window.
* conclusion at step ``j``: for ``a`` in ``[ceil(j/2*eps*sqrt(n)), floor((j+1)/2*eps*sqrt(n))]``,
  ``R(n, a) <= (2*p(b))**(j-2) * P**delta`` where ``p`` is the unrestricted
  partition count whatever the class.

The conclusion is only claimed for large ``n``; at desk scale violations are
reported, never treated as errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._exact import Real, as_fraction, ceil_mul_sqrt, floor_mul_sqrt, pow_le, sign_sqrt1, sign_sqrt2
from .census import DEFAULT_CAP, census, census_range, forbid_scan
from .partitions import DISTINCT, UNRESTRICTED, PartitionClass, count

__all__ = [
    "DegenerateCountError",
    "HypothesisViolatedError",
    "JRangeError",
    "JRecord",
    "Lemma1Report",
    "AuxReport",
    "Theorem2ConstantsReport",
    "ExponentRow",
    "hypothesis_window",
    "achieved_delta",
    "hypothesis_holds",
    "max_j",
    "default_j_max",
    "check_conclusion",
    "check_aux_inequalities",
    "theorem2_constants",
    "exponent_table",
    "REFERENCE_EXPONENTS",
]


class DegenerateCountError(ValueError):
    """The class has at most one partition of ``n``; log base is useless."""


class HypothesisViolatedError(ValueError):
    pass


class JRangeError(ValueError):
    pass


# (known lower, improved upper) exponent for distinct/unrestricted classes
REFERENCE_EXPONENTS: dict[PartitionClass, tuple[float, float]] = {
    UNRESTRICTED: (0.361, 0.768),
    DISTINCT: (0.51, 0.955),
}


@dataclass(frozen=True)
class JRecord:
    j: int
    a_lo: int
    a_hi: int
    max_forbid: int | None  # None when the a-range is empty
    bound_ln: float
    holds: bool

    @property
    def max_forbid_ln(self) -> float | None:
        """``ln`` of the worst count; ``-inf`` if nothing avoids, ``None`` if empty."""
        if self.max_forbid is None:
            return None
        return math.log(self.max_forbid) if self.max_forbid else -math.inf


@dataclass(frozen=True)
class AuxReport:
    n: int
    epsilon: Fraction
    j: int
    b: int
    lower_gap: bool  # a - b >= (j-2)/2 eps sqrt(n) at the smallest a
    induction_window: bool  # (j-2)/2 eps sqrt(n) >= eps sqrt(n-b)
    upper_gap: bool  # a - b <= (j-1)/2 eps sqrt(n) + 1 at the largest a
    sqrt_shrink: bool  # j/2 eps sqrt(n-b) >= j/2 eps sqrt(n) - j/2 eps^2
    closing: bool  # (j-1)/2 eps sqrt(n) + 1 <= j/2 eps sqrt(n) - j/2 eps^2
    case1: bool  # -eps sqrt(n)/2 + 1 <= -eps^2 sqrt(n)/2
    case2: bool | None  # -eps sqrt(n)/2 + 1 <= -eps^2 tau / (2 sqrt(n)); None without tau
    tau: int | None = None

    @property
    def chain(self) -> bool:
        return self.lower_gap and self.induction_window and self.upper_gap and self.sqrt_shrink


@dataclass(frozen=True)
class Lemma1Report:
    n: int
    epsilon: float
    cls: PartitionClass
    b: int
    delta: float
    delta_achieved: float | None
    window: tuple[int, int]
    per_j: tuple[JRecord, ...]
    aux: AuxReport

    @property
    def aux_case1_holds(self) -> bool:
        return self.aux.case1

    @property
    def aux_case2_holds(self) -> bool | None:
        return self.aux.case2

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.per_j)


def _check_eps(epsilon: Real) -> Fraction:
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return eps


def hypothesis_window(n: int, epsilon: Real) -> tuple[int, int]:
    """Integer window ``[ceil(eps*sqrt(n) - 1), floor(2*eps*sqrt(n))]`` within ``[0, n]``.

    May be empty (``lo > hi``).
    """
    eps = _check_eps(epsilon)
    lo = max(0, ceil_mul_sqrt(eps, n) - 1)
    hi = min(n, floor_mul_sqrt(2 * eps, n))
    return lo, hi


def _j_range(n: int, eps: Fraction, j: int) -> tuple[int, int]:
    lo = max(0, ceil_mul_sqrt(eps * j / 2, n))
    hi = min(n, floor_mul_sqrt(eps * (j + 1) / 2, n))
    return lo, hi


def _class_total(n: int, cls: PartitionClass) -> int:
    total = count(n, cls)
    if total <= 1:
        raise DegenerateCountError(f"count({n}, {cls}) = {total}; need at least 2 partitions")
    return total


def achieved_delta(
    n: int, epsilon: Real, cls: PartitionClass = UNRESTRICTED, *, cap: int | None = DEFAULT_CAP
) -> float | None:
    """Smallest double ``delta`` with ``R(n, a) <= P**delta`` on the hypothesis window.

    This is ``max_a ln R(n, a) / ln P`` nudged to the nearest double that
    passes the exact comparison. Returns ``None`` when the window is empty or
    every count in it is zero (the hypothesis then holds for all delta).
    """
    total = _class_total(n, cls)
    lo, hi = hypothesis_window(n, epsilon)
    if lo > hi:
        return None
    scan = forbid_scan(n, cls, cap=cap)
    worst = max(scan[a].count for a in range(lo, hi + 1))
    if worst == 0:
        return None
    if worst == 1:
        return 0.0
    d = math.log(worst) / math.log(total)
    while not pow_le(worst, 1, 0, total, d):
        d = math.nextafter(d, math.inf)
    while pow_le(worst, 1, 0, total, below := math.nextafter(d, -math.inf)):
        d = below
    return d


def hypothesis_holds(
    n: int,
    epsilon: Real,
    delta: Real,
    cls: PartitionClass = UNRESTRICTED,
    *,
    cap: int | None = DEFAULT_CAP,
) -> bool:
    total = _class_total(n, cls)
    lo, hi = hypothesis_window(n, epsilon)
    if lo > hi:
        return True
    scan = forbid_scan(n, cls, cap=cap)
    return all(pow_le(scan[a].count, 1, 0, total, delta) for a in range(lo, hi + 1))


def max_j(n: int, epsilon: Real, tau: int | None = None) -> int | None:
    """Largest ``j`` covered: ``2*floor(sqrt(n)/2)`` if eps < 1, else ``tau``.

    With both available the larger applies; ``None`` means unbounded
    (eps >= 1 and no ``tau``).
    """
    eps = _check_eps(epsilon)
    limits = []
    if eps < 1:
        limits.append(2 * (math.isqrt(n) // 2))
    if tau is not None:
        limits.append(tau)
    return max(limits) if limits else None


def default_j_max(n: int, epsilon: Real, tau: int | None = None) -> int:
    """:func:`max_j` when bounded, else the last ``j`` whose a-range starts within ``[0, n]``."""
    limit = max_j(n, epsilon, tau)
    if limit is not None:
        return limit
    # j/2 * eps * sqrt(n) <= n  <=>  j <= (2/eps) * sqrt(n)
    return floor_mul_sqrt(2 / _check_eps(epsilon), n)


def check_conclusion(
    n: int,
    epsilon: Real,
    delta: Real | None,
    j_max: int,
    cls: PartitionClass = UNRESTRICTED,
    *,
    tau: int | None = None,
    cap: int | None = DEFAULT_CAP,
) -> Lemma1Report:
    """Evaluate the induction bound for ``j = 2..j_max`` at one ``(n, eps)``.

    ``delta=None`` uses :func:`achieved_delta`. Raises
    :class:`HypothesisViolatedError` if ``delta`` does not satisfy the
    hypothesis on its window and :class:`JRangeError` if ``j_max`` falls
    outside the covered range.
    """
    eps = _check_eps(epsilon)
    total = _class_total(n, cls)
    achieved = achieved_delta(n, eps, cls, cap=cap)
    if delta is None:
        if achieved is None:
            raise ValueError("hypothesis window has no avoiding partition; pass delta explicitly")
        delta = achieved
    if not 0 <= delta < 1:
        raise ValueError(f"delta must lie in [0, 1), got {delta}")
    limit = max_j(n, eps, tau)
    if j_max < 2 or (limit is not None and j_max > limit):
        raise JRangeError(f"j_max={j_max} outside 2..{limit if limit is not None else 'inf'}")
    if not hypothesis_holds(n, eps, delta, cls, cap=cap):
        raise HypothesisViolatedError(
            f"delta={delta} fails the hypothesis at n={n}, eps={float(eps)}"
        )

    b = floor_mul_sqrt(eps, n)
    base = 2 * count(b, UNRESTRICTED)
    ln_base, ln_total = math.log(base), math.log(total)
    scan = forbid_scan(n, cls, cap=cap)
    rows = []
    for j in range(2, j_max + 1):
        lo, hi = _j_range(n, eps, j)
        worst = max((scan[a].count for a in range(lo, hi + 1)), default=None)
        holds = worst is None or pow_le(worst, base, j - 2, total, delta)
        rows.append(JRecord(j, lo, hi, worst, (j - 2) * ln_base + float(delta) * ln_total, holds))
    aux = check_aux_inequalities(n, eps, max(4, j_max), tau)
    return Lemma1Report(
        n, float(eps), cls, b, float(delta), achieved, hypothesis_window(n, eps), tuple(rows), aux
    )


def check_aux_inequalities(n: int, epsilon: Real, j: int, tau: int | None = None) -> AuxReport:
    """Exact truth values of the inequalities used in the inductive step.

    All comparisons are decided in rational arithmetic with square roots
    handled symbolically, so no rounding is involved.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if j < 4:
        raise ValueError("the inductive step needs j >= 4")
    eps = _check_eps(epsilon)
    b = floor_mul_sqrt(eps, n)
    a_min = ceil_mul_sqrt(eps * j / 2, n)
    a_max = floor_mul_sqrt(eps * (j + 1) / 2, n)
    half_j = Fraction(j, 2)

    lower_gap = sign_sqrt1(a_min - b, -eps * (j - 2) / 2, n) >= 0
    induction_window = sign_sqrt2(0, eps * (j - 2) / 2, n, -eps, n - b) >= 0
    upper_gap = sign_sqrt1(1 - (a_max - b), eps * (j - 1) / 2, n) >= 0
    sqrt_shrink = sign_sqrt2(half_j * eps * eps, half_j * eps, n - b, -half_j * eps, n) >= 0
    closing = sign_sqrt1(-1 - half_j * eps * eps, eps / 2, n) >= 0
    case1 = sign_sqrt1(-1, (eps - eps * eps) / 2, n) >= 0
    case2 = None
    if tau is not None:
        # multiplied through by sqrt(n) > 0
        case2 = sign_sqrt1(eps * n / 2 - eps * eps * tau / 2, -1, n) >= 0
    return AuxReport(
        n, eps, j, b, lower_gap, induction_window, upper_gap, sqrt_shrink, closing, case1, case2, tau
    )


@dataclass(frozen=True)
class Theorem2ConstantsReport:
    side_a: float  # q_exponent * pi / sqrt(3)
    side_b: float  # max(1.732, 1.07 ln 2)
    holds_q: bool
    side_c: float  # p_exponent * pi * sqrt(2/3)
    side_d: float  # max(1.969, 0.81 ln 2)
    holds_p: bool

    @property
    def margin_q(self) -> float:
        return self.side_a - self.side_b

    @property
    def margin_p(self) -> float:
        return self.side_c - self.side_d


def theorem2_constants(
    q_exponent: float = 0.955,
    p_exponent: float = 0.768,
    *,
    q_growth: float = 1.732,
    q_width: float = 1.07,
    p_growth: float = 1.969,
    p_width: float = 0.81,
) -> Theorem2ConstantsReport:
    """Check that the claimed exponents dominate the growth constants.

    For distinct parts ``log q(n) ~ pi*sqrt(n/3)``, so ``q(n)**e`` grows like
    ``exp(e*pi/sqrt(3)*sqrt(n))``, which must beat both
    ``exp(1.732*sqrt(n))`` and ``2**(1.07*sqrt(n))``. Likewise with
    ``pi*sqrt(2/3)`` for unrestricted partitions.
    """
    side_a = q_exponent * math.pi / math.sqrt(3)
    side_b = max(q_growth, q_width * math.log(2))
    side_c = p_exponent * math.pi * math.sqrt(2 / 3)
    side_d = max(p_growth, p_width * math.log(2))
    return Theorem2ConstantsReport(side_a, side_b, side_b <= side_a, side_c, side_d, side_d <= side_c)


@dataclass(frozen=True)
class ExponentRow:
    n: int
    cls: PartitionClass
    partition_count: int
    distinct_set_count: int
    exponent: float
    reference: tuple[float, float] | None


def exponent_table(
    n_max: int,
    classes: list[PartitionClass] | tuple[PartitionClass, ...] = (UNRESTRICTED, DISTINCT),
    *,
    cap: int | None = DEFAULT_CAP,
    threads: int = 1,
) -> list[ExponentRow]:
    """``ln(distinct sets) / ln(partitions)`` for ``n = 2..n_max``, class by class.

    Rows with at most one partition are skipped. With ``threads > 1`` each
    ``n`` is censused separately over that many shards instead of one walk
    for the whole range; the rows are identical either way.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    for cls in classes:
        if threads > 1:
            results = [census(n, cls, cap=cap, shards=threads, workers=threads)
                       for n in range(2, n_max + 1)]
        else:
            results = census_range(n_max, cls, cap=cap)[2:]
        for res in results:
            if res.partition_count <= 1:
                continue
            ratio = math.log(res.distinct_set_count) / math.log(res.partition_count)
            rows.append(ExponentRow(res.n, cls, res.partition_count, res.distinct_set_count,
                                    ratio, REFERENCE_EXPONENTS.get(cls)))
    return rows
