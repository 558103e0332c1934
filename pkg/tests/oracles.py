"""Independent reference computations used to derive expected test values.

Nothing here imports the counting or series code under test.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

Y = 0


def partitions_pentagonal(N):
    """p(0..N) via Euler's pentagonal-number recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


@lru_cache(maxsize=None)
def partitions_bounded(n, k):
    """Partitions of n into parts of size at most k."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return partitions_bounded(n, k - 1) + (partitions_bounded(n - k, k) if n >= k else 0)


def partitions_dp(N):
    """p(0..N) by the coin-change table over part sizes 1..N."""
    p = [1] + [0] * N
    for part in range(1, N + 1):
        for n in range(part, N + 1):
            p[n] += p[n - part]
    return p


def catalan(m):
    return math.comb(2 * m, m) // (m + 1)


def convolve(a, b, N):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]


def series_of_fraction(num, den, N):
    """num/den expanded with Fractions by solving den * s = num term by term."""
    s = []
    for n in range(N + 1):
        acc = Fraction(num[n] if n < len(num) else 0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * s[n - i]
        s.append(acc / den[0])
    return s


def multiplicative_shift(n):
    """alpha(n) with the i-th prime sent to the (i+1)-th, by trial division."""
    def is_prime(m):
        return m > 1 and all(m % q for q in range(2, math.isqrt(m) + 1))

    def next_prime(p):
        q = p + 1
        while not is_prime(q):
            q += 1
        return q

    val, m, q = 1, n, 2
    while m > 1:
        while m % q == 0:
            val *= next_prime(q)
            m //= q
        q += 1
    return val


def contains_factor(word, forbidden):
    n = len(word)
    return any(word[i:j] in forbidden for i in range(n + 1) for j in range(i, n + 1))


def count_avoiding(alphabet, forbidden, N):
    """Scan every word of every length up to N."""
    forbidden = set(forbidden)
    return [
        sum(1 for w in itertools.product(alphabet, repeat=n) if not contains_factor(w, forbidden))
        for n in range(N + 1)
    ]


# ---------------------------------------------------------------------------
# Quotients by monomial + binomial relations, by union-find over all words
# ---------------------------------------------------------------------------


def _y_positions(w):
    return [i for i, c in enumerate(w) if c == Y]


def graded_dims(d, N, killed, moves):
    """dim R_n for R = free algebra / (monomials, binomials).

    ``killed(w)`` says whether w contains a monomial relation as a factor;
    ``moves(w)`` yields words obtained from w by one binomial relation applied
    to one factor.  R_n has one basis element per congruence class of degree-n
    words that contains no killed word.
    """
    letters = range(d + 1)
    dims = []
    for n in range(N + 1):
        words = list(itertools.product(letters, repeat=n))
        index = {w: i for i, w in enumerate(words)}
        parent = list(range(len(words)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, w in enumerate(words):
            for w2 in moves(w):
                a, b = find(i), find(index[w2])
                if a != b:
                    parent[a] = b
        dead = {find(i) for i, w in enumerate(words) if killed(w)}
        live = {find(i) for i in range(len(words))} - dead
        dims.append(len(live))
    return dims


def basis_oracle(d, a, N, left, right, commuting_x=False, sym_left=False, sym_right=False):
    """Dimensions of the algebras behind all four constructions.

    Relations: ``y u1 y u2 y`` for all u1, u2; ``y w y`` for w outside A;
    ``x_i y v y`` (v in A) when ``left == "killed"``; ``y v y x_i`` when
    ``right == "killed"``.  ``sym_left`` / ``sym_right`` add the relations
    permuting the x-letters before / after ``y v y``; ``commuting_x`` makes
    all x's commute (then A is a set of commutative monomials).
    A is the lexicographically first a_n monomials of each degree.
    """
    def key(w):
        return tuple(w.count(i) for i in range(1, d + 1)) if commuting_x else tuple(w)

    A = set()
    for n, an in enumerate(a):
        if commuting_x:
            mons = sorted(
                e for e in itertools.product(range(n + 1), repeat=d) if sum(e) == n
            )
            A.update(mons[:an])
        else:
            A.update(list(itertools.product(range(1, d + 1), repeat=n))[:an])

    def killed(w):
        ys = _y_positions(w)
        if len(ys) >= 3:
            return True
        if len(ys) == 2:
            j, k = ys
            if key(w[j + 1:k]) not in A:
                return True
            if left == "killed" and j > 0:
                return True
            if right == "killed" and k < len(w) - 1:
                return True
        return False

    def moves(w):
        n = len(w)
        ys = _y_positions(w)
        for i in range(n - 1):
            if w[i] == Y or w[i + 1] == Y or w[i] == w[i + 1]:
                continue
            ok = commuting_x
            if not ok and len(ys) >= 2:
                after = [k for k in ys if k > i + 1]
                before = [k for k in ys if k < i]
                if sym_left and len(after) >= 2 and tuple(w[after[0] + 1:after[1]]) in A:
                    ok = True
                if sym_right and len(before) >= 2 and tuple(w[before[-2] + 1:before[-1]]) in A:
                    ok = True
            if ok:
                yield w[:i] + (w[i + 1], w[i]) + w[i + 2:]

    return graded_dims(d, N, killed, moves)


def remark_oracle(d, a, N):
    """Remark variant as a monomial algebra, by full enumeration."""
    A = set()
    for n, an in enumerate(a):
        A.update(list(itertools.product(range(1, d + 1), repeat=n))[:an])
    one = a[0] == 1

    def killed(w):
        ys = _y_positions(w)
        if len(ys) >= 3:
            return True
        if len(ys) == 2 and tuple(w[ys[0] + 1:ys[1]]) not in A:
            return True
        for i in range(len(w) - 2):
            if w[i + 1] == Y and w[i] != Y and w[i + 2] != Y:
                return True
            if one and w[i] != Y and w[i + 1] == Y and w[i + 2] == Y:
                return True
            if one and w[i] == Y and w[i + 1] == Y and w[i + 2] != Y:
                return True
        return False

    return graded_dims(d, N, killed, lambda w: ())
