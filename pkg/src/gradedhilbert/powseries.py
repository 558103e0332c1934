"""Exact truncated power series and integer polynomials.

Everything here works over Python integers (and ``Fraction`` where a field is
needed), so coefficients never lose precision.  The second half of the module
generates the concrete series used as inputs to the constructions: partition
numbers, Euler products, lacunary series, multiplicative-function series and
the binary-tree (Catalan) series.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    NonIntegralError,
    NonInvertibleError,
    OrderMismatchError,
    SeriesSpecError,
)


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntSeries:
    """Coefficients of degrees ``0..N`` (inclusive) of an integer power series."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the degree-0 coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, order: int) -> "IntSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # long-form alias
    truncation_order = order

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries(tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return IntSeries(tuple(-c for c in self.coeffs))

    def shift(self, k: int) -> "IntSeries":
        """Multiply by ``t**k`` keeping the truncation order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        n = len(self.coeffs)
        return IntSeries(((0,) * k + self.coeffs)[:n])

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise OrderMismatchError(
                f"cannot truncate order-{self.order} series to order {order}"
            )
        return IntSeries(self.coeffs[: order + 1])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def tolist(self) -> list:
        return list(self.coeffs)


def _check_orders(a: IntSeries, b: IntSeries):
    if a.order != b.order:
        raise OrderMismatchError(
            f"truncation orders differ: {a.order} vs {b.order}"
        )


def add(a: IntSeries, b: IntSeries) -> IntSeries:
    _check_orders(a, b)
    return IntSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: IntSeries, b: IntSeries) -> IntSeries:
    _check_orders(a, b)
    return IntSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = len(a.coeffs)
    out = [0] * n
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return IntSeries(tuple(out))


def geometric(d: int, order: int) -> IntSeries:
    """Expansion of ``1/(1 - d t)``, i.e. the Hilbert series of a free algebra."""
    return IntSeries(tuple(d**n for n in range(order + 1)))


# ---------------------------------------------------------------------------
# Polynomials and rational functions
# ---------------------------------------------------------------------------


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in ``t``, lowest degree first, no trailing zeros."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        return IntPoly(_poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Divide in Z[t]; raises if the division leaves a remainder."""
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if b[0] in (1, -1):
            # power-series division from the low end stays in Z
            a = self.coeffs
            nq = len(a) - len(b) + 1
            if nq <= 0:
                if a:
                    raise ArithmeticError("polynomial division is not exact")
                return IntPoly()
            b0 = b[0]
            q = []
            for k in range(nq):
                acc = a[k]
                for i in range(1, min(k, len(b) - 1) + 1):
                    acc -= b[i] * q[k - i]
                q.append(acc * b0)
            if _poly_mul(q, b)[: len(a)] != list(a) or len(_strip(_poly_mul(q, b))) != len(a):
                raise ArithmeticError("polynomial division is not exact")
            return IntPoly(q)
        q, r = _poly_divmod([Fraction(c) for c in self.coeffs], other.coeffs)
        if any(r) or any(c.denominator != 1 for c in q):
            raise ArithmeticError("polynomial division is not exact")
        return IntPoly(int(c) for c in q)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_poly(self)


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return IntPoly(tuple(x))


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num, den):
    """Long division over Q; ``den`` must be nonzero.  Returns (quot, rem)."""
    den = list(_strip(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [], list(_strip(rem))
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    return list(_strip(quot)), list(_strip(rem[:dd]))


def _poly_gcd_q(a, b):
    """Monic gcd over Q via the Euclidean algorithm."""
    a = list(_strip(Fraction(c) for c in a))
    b = list(_strip(Fraction(c) for c in b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


@dataclass(frozen=True)
class RationalFn:
    """Reduced ``numerator / denominator`` with denominator constant term 1."""

    numerator: IntPoly
    denominator: IntPoly

    def expand(self, order: int) -> IntSeries:
        return expand_rational(self.numerator, self.denominator, order)

    def __str__(self):
        def wrap(p):
            text = format_poly(p)
            return f"({text})" if sum(1 for c in p.coeffs if c) > 1 else text

        if self.denominator == IntPoly((1,)):
            return format_poly(self.numerator)
        return f"{wrap(self.numerator)} / {wrap(self.denominator)}"


def expand_rational(num, den, order: int) -> IntSeries:
    """First ``order + 1`` coefficients of ``num/den`` by long division."""
    num = _as_poly(num)
    den = _as_poly(den)
    d0 = den[0]
    if d0 not in (1, -1):
        raise NonInvertibleError(
            f"denominator constant term {d0} is not a unit in Z[[t]]"
        )
    dc = den.coeffs
    out = []
    for n in range(order + 1):
        acc = num[n]
        for i in range(1, min(n, len(dc) - 1) + 1):
            acc -= dc[i] * out[n - i]
        out.append(acc * d0)
    return IntSeries(tuple(out))


def normalize_rational(num, den) -> RationalFn:
    """Cancel the gcd over Q and scale so the denominator has constant term 1."""
    num = _as_poly(num)
    den = _as_poly(den)
    if den.is_zero():
        raise NonInvertibleError("zero denominator")
    if den[0] == 0:
        raise NonInvertibleError("denominator has zero constant term")
    if num.is_zero():
        return RationalFn(IntPoly(), IntPoly((1,)))
    g = _poly_gcd_q(num.coeffs, den.coeffs)
    qn, rn = _poly_divmod(num.coeffs, g)
    qd, rd = _poly_divmod(den.coeffs, g)
    assert not rn and not rd
    c0 = qd[0]
    qn = [c / c0 for c in qn]
    qd = [c / c0 for c in qd]
    if any(c.denominator != 1 for c in qn + qd):
        raise NonIntegralError(
            "reduced fraction has non-integral coefficients; "
            "the series is not in Z[[t]]"
        )
    return RationalFn(IntPoly(int(c) for c in qn), IntPoly(int(c) for c in qd))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def format_poly(p: IntPoly, var: str = "t") -> str:
    """``1 - t - t^2`` style; the zero polynomial prints as ``0``."""
    p = _as_poly(p)
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)\*?(t(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse polynomials such as ``1 - t - t^2`` or ``(1+2*t)``."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise SeriesSpecError(f"empty polynomial: {text!r}")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise SeriesSpecError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise SeriesSpecError(f"missing sign in polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = m.end()
    top = max(coeffs)
    return IntPoly(coeffs.get(k, 0) for k in range(top + 1))


def parse_coeff_text(text: str) -> list:
    """One integer per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise SeriesSpecError(f"line {lineno}: not an integer: {line!r}") from None
    return out


def read_coeff_file(path) -> list:
    return parse_coeff_text(Path(path).read_text())


# ---------------------------------------------------------------------------
# Series generators
# ---------------------------------------------------------------------------


class SeriesKind(enum.Enum):
    ZERO = "zero"
    RATIONAL = "rational"
    PARTITION = "partition"
    EULER_PRODUCT = "euler-product"
    LACUNARY_FACTORIAL = "lacunary-factorial"
    LACUNARY_POWERS = "lacunary-powers"
    MULTIPLICATIVE = "multiplicative"
    CATALAN_TREES = "catalan"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SeriesSpec:
    """Description of a base series ``a(t)``; build via the classmethods."""

    kind: SeriesKind
    num: IntPoly | None = None
    den: IntPoly | None = None
    exponents: tuple = ()  # b_n for EULER_PRODUCT, indexed from n = 1
    base: int = 2
    prime_map: tuple | None = None  # ((p, alpha(p)), ...); None means shift
    prime_powers: tuple = ()  # ((p, k, value), ...) overriding alpha(p^k)
    values: tuple | None = None
    path: str | None = None
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        k = self.kind
        if k is SeriesKind.RATIONAL and (self.num is None or self.den is None):
            raise SeriesSpecError("rational series needs numerator and denominator")
        if k is SeriesKind.LACUNARY_POWERS and self.base < 2:
            raise SeriesSpecError(f"lacunary-powers base must be >= 2, got {self.base}")
        if k is SeriesKind.EULER_PRODUCT and any(b < 0 for b in self.exponents):
            raise SeriesSpecError("Euler product exponents must be nonnegative")
        if k is SeriesKind.EXPLICIT and self.values is None and self.path is None:
            raise SeriesSpecError("explicit series needs values or a file path")
        if self.prime_map is not None:
            for p, q in self.prime_map:
                if not _is_prime(p):
                    raise SeriesSpecError(f"prime map key {p} is not prime")
                if q == p:
                    raise SeriesSpecError(f"prime map must move every prime; {p} -> {q}")

    @classmethod
    def zero(cls):
        return cls(SeriesKind.ZERO)

    @classmethod
    def rational(cls, num, den):
        return cls(SeriesKind.RATIONAL, num=_as_poly(num), den=_as_poly(den))

    @classmethod
    def partition(cls):
        return cls(SeriesKind.PARTITION)

    @classmethod
    def euler_product(cls, exponents: Sequence[int]):
        return cls(SeriesKind.EULER_PRODUCT, exponents=tuple(exponents))

    @classmethod
    def lacunary_factorial(cls):
        return cls(SeriesKind.LACUNARY_FACTORIAL)

    @classmethod
    def lacunary_powers(cls, base: int = 2):
        return cls(SeriesKind.LACUNARY_POWERS, base=base)

    @classmethod
    def multiplicative(cls, prime_map: Mapping[int, int] | None = None,
                       prime_powers: Mapping[tuple, int] | None = None):
        """``prime_map=None`` sends the i-th prime to the (i+1)-th prime.

        ``prime_powers`` maps ``(p, k)`` to ``alpha(p**k)``; other prime powers
        follow complete multiplicativity.
        """
        pm = None if prime_map is None else tuple(sorted(prime_map.items()))
        pp = tuple(sorted((p, k, v) for (p, k), v in (prime_powers or {}).items()))
        return cls(SeriesKind.MULTIPLICATIVE, prime_map=pm, prime_powers=pp)

    @classmethod
    def catalan(cls):
        return cls(SeriesKind.CATALAN_TREES)

    @classmethod
    def explicit(cls, values: Iterable[int] | None = None, path=None):
        vals = None if values is None else tuple(int(v) for v in values)
        return cls(SeriesKind.EXPLICIT, values=vals, path=None if path is None else str(path))

    def __str__(self):
        k = self.kind
        if self.label:
            return self.label
        if k is SeriesKind.RATIONAL:
            return f"rational:({format_poly(self.num)})/({format_poly(self.den)})"
        if k is SeriesKind.LACUNARY_POWERS:
            return f"lacunary-powers:{self.base}"
        if k is SeriesKind.EULER_PRODUCT:
            return "euler-product:" + ",".join(map(str, self.exponents))
        if k is SeriesKind.MULTIPLICATIVE:
            return "multiplicative:shift" if self.prime_map is None else "multiplicative:custom"
        if k is SeriesKind.EXPLICIT:
            return f"file:{self.path}" if self.path else "explicit"
        return k.value


def parse_series_spec(text: str) -> SeriesSpec:
    """Parse the command-line series syntax (``partition``, ``rational:1/(1-t)``...)."""
    text = text.strip()
    name, _, arg = text.partition(":")
    try:
        if name == "zero" and not arg:
            return SeriesSpec.zero()
        if name == "partition" and not arg:
            return SeriesSpec.partition()
        if name == "catalan" and not arg:
            return SeriesSpec.catalan()
        if name == "lacunary-factorial" and not arg:
            return SeriesSpec.lacunary_factorial()
        if name == "lacunary-powers":
            return SeriesSpec.lacunary_powers(int(arg) if arg else 2)
        if name == "multiplicative" and arg in ("", "shift"):
            return SeriesSpec.multiplicative()
        if name == "euler-product" and arg:
            return SeriesSpec.euler_product(int(b) for b in arg.split(","))
        if name == "rational" and arg:
            num, den = _split_fraction(arg)
            return SeriesSpec.rational(parse_poly(num), parse_poly(den))
        if name == "file" and arg:
            return SeriesSpec.explicit(path=arg)
    except ValueError as exc:
        if isinstance(exc, SeriesSpecError):
            raise
        raise SeriesSpecError(f"bad series spec {text!r}: {exc}") from None
    raise SeriesSpecError(f"unknown series spec {text!r}")


def _split_fraction(arg: str):
    """Split ``num/den`` at the top-level slash (outside parentheses)."""
    depth = 0
    for i, ch in enumerate(arg):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return arg[:i], arg[i + 1:]
    return arg, "1"


def generate(spec: SeriesSpec, order: int) -> IntSeries:
    """Exact coefficients of degrees ``0..order`` of the described series."""
    if order < 0:
        raise SeriesSpecError("order must be nonnegative")
    k = spec.kind
    N = order
    if k is SeriesKind.ZERO:
        return IntSeries.zero(N)
    if k is SeriesKind.RATIONAL:
        return expand_rational(spec.num, spec.den, N)
    if k is SeriesKind.PARTITION:
        return IntSeries(_euler_product([1] * N, N))
    if k is SeriesKind.EULER_PRODUCT:
        b = list(spec.exponents[:N]) + [0] * max(0, N - len(spec.exponents))
        return IntSeries(_euler_product(b, N))
    if k is SeriesKind.LACUNARY_FACTORIAL:
        out = [0] * (N + 1)
        n, f = 1, 1
        while f <= N:
            out[f] = 1
            n += 1
            f *= n
        return IntSeries(out)
    if k is SeriesKind.LACUNARY_POWERS:
        out = [0] * (N + 1)
        e = 1
        while e <= N:
            out[e] = 1
            e *= spec.base
        return IntSeries(out)
    if k is SeriesKind.MULTIPLICATIVE:
        return IntSeries(_multiplicative(spec, N))
    if k is SeriesKind.CATALAN_TREES:
        return IntSeries(_binary_trees(N))
    if k is SeriesKind.EXPLICIT:
        vals = spec.values if spec.values is not None else read_coeff_file(spec.path)
        if len(vals) < N + 1:
            raise SeriesSpecError(
                f"explicit series has {len(vals)} coefficients, need {N + 1}"
            )
        return IntSeries(vals[: N + 1])
    raise SeriesSpecError(f"unsupported series kind {k}")


def _euler_product(b, N):
    """Coefficients of prod_{n>=1} (1 - t^n)^(-b_n) up to t^N."""
    c = [0] * (N + 1)
    c[0] = 1
    for n in range(1, N + 1):
        bn = b[n - 1]
        if bn == 0:
            continue
        # bn passes of 1/(1-t^n) cost bn*N; the binomial expansion costs N*N/n
        if bn * n <= N:
            for _ in range(bn):
                for k in range(n, N + 1):
                    c[k] += c[k - n]
        else:
            terms = [(j * n, math.comb(bn + j - 1, j)) for j in range(N // n + 1)]
            new = [0] * (N + 1)
            for i, ci in enumerate(c):
                if ci:
                    for e, w in terms:
                        if i + e > N:
                            break
                        new[i + e] += ci * w
            c = new
    return c


def _binary_trees(N):
    """Planar binary trees counted by leaves: T = t + T^2."""
    T = [0] * (N + 1)
    if N >= 1:
        T[1] = 1
    for n in range(2, N + 1):
        T[n] = sum(T[i] * T[n - i] for i in range(1, n))
    return T


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _smallest_prime_factors(limit: int):
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def _multiplicative(spec: SeriesSpec, N):
    out = [0] * (N + 1)
    if N < 1:
        return out
    # Bertrand: the successor of any prime p <= N is below 2N
    spf = _smallest_prime_factors(max(2 * N + 2, 4))
    primes = [p for p in range(2, len(spf)) if spf[p] == p]
    if spec.prime_map is None:
        image = {p: q for p, q in zip(primes, primes[1:])}
    else:
        image = dict(spec.prime_map)
    overrides = {(p, k): v for p, k, v in spec.prime_powers}

    def alpha_prime_power(p, k):
        if (p, k) in overrides:
            return overrides[(p, k)]
        if p not in image:
            raise SeriesSpecError(f"prime map does not cover prime {p}")
        return image[p] ** k

    out[1] = 1
    for n in range(2, N + 1):
        m, val = n, 1
        while m > 1:
            p, k = spf[m], 0
            while m % p == 0:
                m //= p
                k += 1
            val *= alpha_prime_power(p, k)
        out[n] = val
    return out
