"""Growth, GK dimension estimates, recurrence detection and rational/transcendental verdicts.

The verdicts are evidence-bounded: a RATIONAL verdict carries an exact
certificate, everything else only reports what finitely many coefficients
and the configured search bounds can show.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import DataShortageError
from .powseries import IntPoly, IntSeries, RationalFn, SeriesSpec, generate, normalize_rational

DEFAULT_K = 12
DEFAULT_G = 20
DEFAULT_DELTA = 0.05
DEFAULT_STABILITY = 0.25


def partial_sums(coeffs) -> list:
    out, acc = [], 0
    for c in coeffs:
        acc += c
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Gelfand-Kirillov dimension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GKEstimate:
    estimate: float
    window: tuple  # (N // 2, N)
    g: tuple
    inconclusive: bool = False


def gk_estimate(dims) -> GKEstimate:
    """Dyadic log-slope ``log2(g(N) / g(N // 2))`` of the growth function.

    ``g(n)`` is the dimension of the span of words of degree <= n, i.e. the
    partial sums of the Hilbert series coefficients.
    """
    dims = list(dims)
    if len(dims) < 16:
        raise DataShortageError(f"need at least 16 coefficients, got {len(dims)}")
    if any(c < 0 for c in dims):
        raise ValueError("dimensions must be nonnegative")
    g = partial_sums(dims)
    N = len(dims) - 1
    h = N // 2
    if g[N] < 2 or g[h] == 0:
        return GKEstimate(0.0, (h, N), tuple(g), inconclusive=True)
    est = math.log2(g[N]) - math.log2(g[h])
    # all-zero upper half: the limsup is 0 but the window carries no growth evidence
    return GKEstimate(est, (h, N), tuple(g), inconclusive=g[N] == g[h])


# ---------------------------------------------------------------------------
# Linear recurrences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceCertificate:
    """``sum_i coeffs[i] * a[n - i] == 0`` for every n in ``validated``."""

    order: int
    coeffs: tuple
    rational: RationalFn
    validated: tuple  # (first n, last n)

    def holds(self, seq) -> bool:
        lo, hi = self.validated
        return all(
            sum(c * seq[n - i] for i, c in enumerate(self.coeffs)) == 0
            for n in range(lo, hi + 1)
        )


def _berlekamp_massey(seq, max_order):
    """Shortest linear recurrence over Q; None once its length exceeds max_order."""
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n, s in enumerate(seq):
        disc = Fraction(s)
        for i in range(1, L + 1):
            if i < len(C):
                disc += C[i] * seq[n - i]
        if disc == 0:
            m += 1
            continue
        coef = disc / b
        T = C[:]
        need = len(B) + m
        if len(C) < need:
            C = C + [Fraction(0)] * (need - len(C))
        for i, bi in enumerate(B):
            C[i + m] -= coef * bi
        if 2 * L <= n:
            L = n + 1 - L
            B, b, m = T, disc, 1
            if L > max_order:
                return None
        else:
            m += 1
    return L, C


def detect_recurrence(coeffs, max_order: int = DEFAULT_K, guard: int = DEFAULT_G):
    """Least-order linear recurrence with constant coefficients, or None.

    Needs ``2 * max_order + guard`` terms, so any returned relation of order k
    is pinned down by 2k terms and confirmed on at least ``guard`` more.
    The minimal relation is found by Berlekamp-Massey over Q, which solves
    the same Hankel systems incrementally.
    """
    seq = [int(c) for c in coeffs]
    need = 2 * max_order + guard
    if len(seq) < need:
        raise DataShortageError(
            f"need at least 2*K + G = {need} coefficients, got {len(seq)}"
        )
    found = _berlekamp_massey(seq, max_order)
    if found is None:
        return None
    L, C = found
    C = (C + [Fraction(0)] * (L + 1))[: L + 1]
    lcm = 1
    for c in C:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in C]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    # numerator = (a(t) * c(t)) mod t^L
    num = [sum(ints[i] * seq[n - i] for i in range(min(n, L) + 1)) for n in range(L)]
    rf = normalize_rational(IntPoly(num), IntPoly(ints))
    cert = RecurrenceCertificate(L, tuple(ints), rf, (L, len(seq) - 1))
    if not cert.holds(seq) or list(rf.expand(len(seq) - 1)) != seq:
        return None
    return cert


# ---------------------------------------------------------------------------
# Growth
# ---------------------------------------------------------------------------


class GrowthClass(enum.Enum):
    POLYNOMIAL = "POLYNOMIAL"
    INTERMEDIATE = "INTERMEDIATE"
    EXPONENTIAL = "EXPONENTIAL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class GrowthReport:
    cls: GrowthClass
    estimate: float | None  # degree for POLYNOMIAL, rate for EXPONENTIAL
    window: tuple
    g: tuple
    rate: float | None = None
    slopes: tuple = ()


def _log(x: int) -> float:
    return math.log(x)


def _envelope(coeffs):
    env, best = [], 0
    for c in coeffs:
        best = max(best, abs(c))
        env.append(best)
    return env


def exponential_rate(coeffs) -> float | None:
    """Estimate the exponential growth rate from the tail of the partial sums.

    ``log g(n)`` is fitted on ``[N/4, N]`` by ``alpha*n + beta*sqrt(n) +
    gamma*log(n) + c`` and the rate is ``exp(alpha)``.  The extra terms absorb
    subexponential and polynomial factors that bias a plain ``a_n^(1/n)``
    upward at moderate N; the partial sums smooth out gaps and jumps in
    sparse or erratic coefficient sequences.
    """
    g = partial_sums(abs(c) for c in coeffs)
    N = len(g) - 1
    ns = [n for n in range(max(N // 4, 1), N + 1) if g[n] > 0]
    if len(ns) < 8:
        return None
    x = np.array(ns, dtype=float)
    y = np.array([_log(g[n]) for n in ns])
    A = np.column_stack([x / N, np.sqrt(x / N), np.log(x), np.ones_like(x)])
    sol, *_ = np.linalg.lstsq(A, y, rcond=None)
    return math.exp(sol[0] / N)


def _dyadic_slopes(seq):
    """log-log slopes over [N/4, N/2] and [N/2, N]; None where undefined."""
    N = len(seq) - 1
    pts = [N // 4, N // 2, N]
    out = []
    for lo, hi in zip(pts, pts[1:]):
        if lo < 1 or seq[lo] <= 0 or seq[hi] <= 0:
            out.append(None)
        else:
            out.append((_log(seq[hi]) - _log(seq[lo])) / math.log(hi / lo))
    return tuple(out)


def growth_classify(coeffs, delta: float = DEFAULT_DELTA,
                    stability: float = DEFAULT_STABILITY) -> GrowthReport:
    coeffs = [int(c) for c in coeffs]
    N = len(coeffs) - 1
    g = partial_sums(coeffs)
    window = (N // 4, N)
    if len(coeffs) < 32 or not any(coeffs):
        return GrowthReport(GrowthClass.INCONCLUSIVE, None, window, tuple(g))
    rate = exponential_rate(coeffs)
    env_slopes = _dyadic_slopes(_envelope(coeffs))
    if rate is not None and rate > 1 + delta:
        return GrowthReport(GrowthClass.EXPONENTIAL, rate, window, tuple(g), rate, env_slopes)
    s0, s1 = env_slopes
    if s0 is not None and s1 is not None and abs(s1 - s0) < stability:
        return GrowthReport(GrowthClass.POLYNOMIAL, s1, window, tuple(g), rate, env_slopes)
    g0, g1 = _dyadic_slopes(g)
    if g0 is not None and g1 is not None and g1 - g0 >= stability:
        return GrowthReport(GrowthClass.INTERMEDIATE, None, window, tuple(g), rate, env_slopes)
    return GrowthReport(GrowthClass.INCONCLUSIVE, None, window, tuple(g), rate, env_slopes)


# ---------------------------------------------------------------------------
# Rational / transcendental dichotomy
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    RATIONAL = "RATIONAL"
    CANDIDATE_TRANSCENDENTAL = "CANDIDATE_TRANSCENDENTAL"
    EXPONENTIAL_NO_CLAIM = "EXPONENTIAL_NO_CLAIM"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class DichotomyVerdict:
    tag: Verdict
    explanation: str
    growth: GrowthReport
    certificate: RecurrenceCertificate | None
    bounds: dict

    def to_dict(self) -> dict:
        g = self.growth
        rec = None
        if self.certificate is not None:
            rec = {"order": self.certificate.order, "coeffs": list(self.certificate.coeffs)}
        return {
            "verdict": self.tag.value,
            "growth": {"class": g.cls.value, "estimate": g.estimate},
            "recurrence": rec,
            "bounds": dict(self.bounds),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def fatou_verdict(coeffs, max_order: int = DEFAULT_K, guard: int = DEFAULT_G,
                  delta: float = DEFAULT_DELTA, stability: float = DEFAULT_STABILITY,
                  intermediate_is_transcendental: bool = True) -> DichotomyVerdict:
    """Classify an integer series as rational, candidate transcendental, or neither.

    With polynomially bounded integer coefficients an algebraic series is
    already rational, so failing to find a recurrence points to
    transcendence.  That step is a bounded search, not a proof.
    """
    coeffs = [int(c) for c in coeffs]
    N = len(coeffs) - 1
    bounds = {"K": max_order, "G": guard, "N": N}
    where = f"(recurrence order <= {max_order}, guard {guard}, N = {N})"
    cert = detect_recurrence(coeffs, max_order, guard)
    growth = growth_classify(coeffs, delta, stability)
    if cert is not None:
        text = (f"RATIONAL: order-{cert.order} recurrence reproduces all {N + 1} "
                f"coefficients; series = {cert.rational} {where}")
        return DichotomyVerdict(Verdict.RATIONAL, text, growth, cert, bounds)
    heuristic = "heuristic verdict from a bounded search, not a proof"
    if growth.cls is GrowthClass.POLYNOMIAL:
        text = (f"CANDIDATE_TRANSCENDENTAL: polynomially bounded integer coefficients "
                f"(degree ~ {growth.estimate:.3f}) and no recurrence found {where}; "
                f"such a series is rational or transcendental, never algebraic "
                f"irrational; {heuristic}")
        return DichotomyVerdict(Verdict.CANDIDATE_TRANSCENDENTAL, text, growth, None, bounds)
    if growth.cls is GrowthClass.INTERMEDIATE and intermediate_is_transcendental:
        text = (f"CANDIDATE_TRANSCENDENTAL: growth looks intermediate (super-polynomial, "
                f"subexponential) and no recurrence found {where}; integer series of "
                f"intermediate growth are not algebraic; {heuristic}")
        return DichotomyVerdict(Verdict.CANDIDATE_TRANSCENDENTAL, text, growth, None, bounds)
    if growth.cls is GrowthClass.EXPONENTIAL:
        text = (f"EXPONENTIAL_NO_CLAIM: exponential growth (rate ~ {growth.estimate:.3f}) "
                f"and no recurrence found {where}; algebraic irrational series are "
                f"possible here, so nothing is claimed")
        return DichotomyVerdict(Verdict.EXPONENTIAL_NO_CLAIM, text, growth, None, bounds)
    text = f"INCONCLUSIVE: growth class {growth.cls.value} and no recurrence found {where}"
    return DichotomyVerdict(Verdict.INCONCLUSIVE, text, growth, None, bounds)


# ---------------------------------------------------------------------------
# Partition asymptotics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HRComparison:
    n: int
    exact: int
    asymptotic: mpmath.mpf
    ratio: mpmath.mpf


def hardy_ramanujan(n: int, dps: int = 50) -> mpmath.mpf:
    """``exp(pi * sqrt(2n/3)) / (4 n sqrt(3))``."""
    with mpmath.workdps(dps):
        n = mpmath.mpf(n)
        return mpmath.exp(mpmath.pi * mpmath.sqrt(2 * n / 3)) / (4 * n * mpmath.sqrt(3))


def hr_compare(n: int, dps: int = 50) -> HRComparison:
    if n < 1:
        raise ValueError("n must be >= 1")
    exact = generate(SeriesSpec.partition(), n)[n]
    approx = hardy_ramanujan(n, dps)
    with mpmath.workdps(dps):
        ratio = mpmath.mpf(exact) / approx
    return HRComparison(n, exact, approx, ratio)
