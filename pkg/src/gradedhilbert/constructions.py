"""Hilbert series of the four constructions, computed two or three ways.

``closed_form`` expands the rational-function formulas; ``structured_count``
counts the basis words described by the constructions directly; for the
monomial variants the automaton engine gives a third count.  ``verify``
compares whatever applies.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import engine
from .errors import UnsupportedVariantError
from .monoid import check_capacity
from .powseries import IntPoly, IntSeries, expand_rational, generate, geometric
from .presentations import ConstructionSpec, Variant, construction_presentation

METHODS = ("closed", "structured", "automaton", "bruteforce")


def base_series(spec: ConstructionSpec, N: int) -> IntSeries:
    """a(t) to order N, after the capacity check for the variant."""
    a = generate(spec.series, N)
    check_capacity(a, spec.d, commutative=spec.variant.commutative_A)
    return a


def closed_form(spec: ConstructionSpec, N: int) -> IntSeries:
    a = base_series(spec, N)
    d = spec.d
    v = spec.variant
    t2a = a.shift(2)
    one_minus_dt = IntPoly((1, -d))
    one_minus_t = IntPoly((1, -1))

    if v is Variant.REMARK_13:
        first = expand_rational(IntPoly((1, 2)), one_minus_dt, N)
        minus_t = IntSeries.one(N).shift(1) if N >= 1 else IntSeries.zero(N)
        return first - minus_t + t2a

    if v is Variant.THEOREM_14:
        free = expand_rational(1, one_minus_t**d, N)
        one_y = expand_rational(IntPoly((0, 1)), one_minus_t ** (2 * d), N)
        tail_den = one_minus_t ** (d * spec.p)
    else:
        free = geometric(d, N)
        one_y = expand_rational(IntPoly((0, 1)), one_minus_dt**2, N)
        tail_den = one_minus_dt**spec.p
        if v is Variant.COROLLARY_12:
            tail_den = tail_den * one_minus_t ** (d * spec.q)
    return free + one_y + t2a * expand_rational(1, tail_den, N)


def _side_counts(kind: str, d: int, N: int) -> list:
    if kind == "free":
        return [d**k for k in range(N + 1)]
    if kind == "sym":
        return [math.comb(k + d - 1, d - 1) for k in range(N + 1)]
    if kind == "killed":
        return [1] + [0] * N
    raise ValueError(kind)


def structured_count(spec: ConstructionSpec, N: int) -> list:
    """Dimensions read off the basis: words with zero, one and two y's."""
    a = base_series(spec, N)
    d = spec.d
    v = spec.variant
    dims = [0] * (N + 1)

    # y-free part, and the one-y words u1 y u2
    x_side = "sym" if v is Variant.THEOREM_14 else "free"
    xs = _side_counts(x_side, d, N)
    for n in range(N + 1):
        dims[n] += xs[n]
        if n >= 1:
            if v is Variant.REMARK_13:
                # x_i y x_j kills words with both sides nonempty
                dims[n] += 1 if n == 1 else 2 * d ** (n - 1)
            else:
                dims[n] += sum(xs[i] * xs[n - 1 - i] for i in range(n))

    # two-y words u1 y v y u2 with v in A
    left, right = (_side_counts(k, d, N) for k in spec.side_kinds())
    for n in range(2, N + 1):
        total = 0
        for m in range(n - 1):
            am = a[m]
            if not am:
                continue
            rest = n - 2 - m
            total += am * sum(left[i] * right[rest - i] for i in range(rest + 1))
        dims[n] += total
    return IntSeries(dims)


def automaton_count(spec: ConstructionSpec, N: int) -> IntSeries:
    if not spec.variant.is_monomial:
        raise UnsupportedVariantError(f"{spec.variant.value} has no monomial presentation")
    base_series(spec, N)
    pres = construction_presentation(spec, N)
    return engine.count_automaton(pres, N).dims


def bruteforce_count(spec: ConstructionSpec, N: int) -> IntSeries:
    if not spec.variant.is_monomial:
        raise UnsupportedVariantError(f"{spec.variant.value} has no monomial presentation")
    base_series(spec, N)
    pres = construction_presentation(spec, N)
    return engine.count_bruteforce(pres, N).dims


_RUNNERS = {
    "closed": closed_form,
    "structured": structured_count,
    "automaton": automaton_count,
    "bruteforce": bruteforce_count,
}


@dataclass
class VerificationReport:
    spec: ConstructionSpec
    N: int
    vectors: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    first_mismatch: int | None = None

    @property
    def agree(self) -> bool:
        return self.first_mismatch is None

    def summary(self) -> str:
        lines = [f"{self.spec}  N={self.N}"]
        for name, vec in self.vectors.items():
            lines.append(f"  {name:<11} {','.join(map(str, vec))}")
        if self.agree:
            lines.append(f"agreement through degree {self.N} ({', '.join(self.vectors)})")
        else:
            lines.append(f"MISMATCH at degree {self.first_mismatch}")
        return "\n".join(lines)


def default_methods(spec: ConstructionSpec) -> tuple:
    if spec.variant.is_monomial:
        return ("closed", "structured", "automaton")
    return ("closed", "structured")


def first_mismatch(vectors) -> int | None:
    vecs = list(vectors)
    if not vecs:
        return None
    for n in range(len(vecs[0])):
        if len({tuple(v)[n] for v in vecs}) > 1:
            return n
    return None


def verify(spec: ConstructionSpec, N: int, methods=None, perturb=None) -> VerificationReport:
    """Run the requested counting methods and compare them degree by degree.

    ``perturb`` maps a method name to a degree whose coefficient is bumped by
    one after computing it; it exists to test the comparison itself.
    """
    methods = tuple(methods) if methods else default_methods(spec)
    for m in methods:
        if m not in _RUNNERS:
            raise ValueError(f"unknown method {m!r}; choose from {METHODS}")
    report = VerificationReport(spec, N)
    for m in methods:
        t0 = time.perf_counter()
        vec = list(_RUNNERS[m](spec, N))
        report.timings[m] = time.perf_counter() - t0
        if perturb and m in perturb:
            vec[perturb[m]] += 1
        report.vectors[m] = tuple(vec)
    report.first_mismatch = first_mismatch(report.vectors.values())
    return report
