"""Words over ``x_1..x_d`` and ``y``, commutative monomials, and the sets A_n.

Letters are small integers: ``x_i`` is ``i`` (1-based) and ``y`` is ``0``.  A
word is a tuple of letters, so y-free words compare lexicographically with
``x_1 < x_2 < ... < x_d`` for free.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import CapacityError, InfeasibleError, PresentationSyntaxError
from .powseries import IntSeries

Y = 0
EMPTY = ()


def format_word(word) -> str:
    """``(1, 0, 2)`` -> ``'x1 y x2'``; the empty word prints as ``1``."""
    if not word:
        return "1"
    return " ".join("y" if c == Y else f"x{c}" for c in word)


def parse_word(text: str, d: int, allow_y: bool = True, line: int | None = None):
    tokens = text.split()
    if tokens == ["1"]:
        return EMPTY
    word = []
    for tok in tokens:
        if tok == "y":
            if not allow_y:
                raise PresentationSyntaxError("letter y not in alphabet", line)
            word.append(Y)
        elif tok.startswith("x") and tok[1:].isdigit():
            i = int(tok[1:])
            if not 1 <= i <= d:
                raise PresentationSyntaxError(
                    f"letter {tok} out of range x1..x{d}", line
                )
            word.append(i)
        else:
            raise PresentationSyntaxError(f"bad letter {tok!r}", line)
    return tuple(word)


def iter_words(d: int, n: int):
    """Lazily yield the y-free words of degree n in lexicographic order."""
    return itertools.product(range(1, d + 1), repeat=n)


def enumerate_words(d: int, n: int) -> list:
    return list(iter_words(d, n))


def iter_comm(d: int, n: int):
    """Exponent vectors of length d summing to n, lexicographically increasing."""
    if d == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in iter_comm(d - 1, n - first):
            yield (first,) + rest


def enumerate_comm(d: int, n: int) -> list:
    return list(iter_comm(d, n))


def comm_image(word, d: int) -> tuple:
    """Exponent vector of a y-free word."""
    exps = [0] * d
    for c in word:
        exps[c - 1] += 1
    return tuple(exps)


def capacity(d: int, n: int, commutative: bool) -> int:
    """Number of y-free monomials of degree n."""
    if commutative:
        return math.comb(n + d - 1, d - 1)
    return d**n


@dataclass(frozen=True)
class ASetRealization:
    """The chosen sets A_n, degrees 0..order.

    Members are words for the noncommutative case and exponent vectors for
    the commutative one.
    """

    d: int
    commutative: bool
    sets: tuple  # per degree: tuple of members in enumeration order
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.sets) - 1

    def degree_set(self, n: int) -> tuple:
        if n > self.order:
            raise ValueError(f"A realized only up to degree {self.order}, asked for {n}")
        return self.sets[n]

    def size(self, n: int) -> int:
        return len(self.degree_set(n))

    @property
    def contains_one(self) -> bool:
        return bool(self.sets) and len(self.sets[0]) == 1

    def __contains__(self, member) -> bool:
        return member in self.members

    def contains_word(self, word) -> bool:
        """Membership of a y-free word (through its exponent vector if commutative)."""
        if self.commutative:
            return comm_image(word, self.d) in self.members
        return word in self.members


def check_capacity(a: IntSeries, d: int, commutative: bool):
    """Raise CapacityError at the first degree where a_n exceeds the capacity."""
    if d < 1:
        raise ValueError("alphabet size d must be >= 1")
    for n, an in enumerate(a):
        if an < 0:
            raise ValueError(f"negative coefficient a_{n} = {an}")
        cap = capacity(d, n, commutative)
        if an > cap:
            raise CapacityError(n, an, cap)


def realize_A(a: IntSeries, d: int, commutative: bool = False) -> ASetRealization:
    """A_n = the lexicographically first a_n monomials of degree n."""
    check_capacity(a, d, commutative)
    gen = iter_comm if commutative else iter_words
    sets = tuple(tuple(itertools.islice(gen(d, n), an)) for n, an in enumerate(a))
    members = frozenset(m for s in sets for m in s)
    return ASetRealization(d, commutative, sets, members)


def minimal_d(a: IntSeries, commutative: bool = False) -> int:
    """Smallest d >= 1 for which every a_n fits in degree n."""
    if any(c < 0 for c in a):
        raise ValueError("series has negative coefficients")
    if a[0] > 1:
        raise InfeasibleError(
            f"a_0 = {a[0]} > 1: degree 0 holds at most one monomial for every d"
        )
    best = 1
    for n in range(1, len(a)):
        an = a[n]
        if an <= capacity(best, n, commutative):
            continue
        if commutative:
            while math.comb(n + best - 1, best - 1) < an:
                best += 1
        else:
            r = int(math.exp(math.log(an) / n))
            r = max(r, best)
            while r**n < an:
                r += 1
            while r > best and (r - 1) ** n >= an:
                r -= 1
            best = r
    return best
