"""Counting normal words of monomial algebras.

Three independent routes: plain enumeration of normal words, dynamic
programming over an Aho-Corasick factor automaton, and (for finite
presentations) the exact rational Hilbert series from the transfer matrix.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAutomatonError, SizeGuardError, UnsupportedVariantError
from .powseries import IntPoly, IntSeries, RationalFn, normalize_rational
from .presentations import Presentation, PresentationKind

log = logging.getLogger(__name__)

BRUTEFORCE_LIMIT = 10**8
MAX_AUTOMATON_STATES = 5_000_000


@dataclass(frozen=True)
class CountReport:
    dims: IntSeries
    method: str
    forbidden_degree: int


@dataclass(frozen=True)
class FactorAutomaton:
    """Deterministic automaton recognising words free of forbidden factors.

    Live states are numbered ``0..num_live-1`` with the start state 0;
    ``transitions[s][k]`` is the successor of live state ``s`` on
    ``alphabet[k]``, or ``-1`` when that letter completes a forbidden factor.
    Dead states are numbered ``num_live..num_states-1``.
    """

    alphabet: tuple
    transitions: tuple
    num_states: int
    prefixes: tuple  # trie string of each live state

    start: int = 0

    @property
    def num_live(self) -> int:
        return len(self.transitions)

    @property
    def dead(self) -> frozenset:
        return frozenset(range(self.num_live, self.num_states))

    def accepts(self, word) -> bool:
        index = {c: k for k, c in enumerate(self.alphabet)}
        s = self.start
        for c in word:
            s = self.transitions[s][index[c]]
            if s < 0:
                return False
        return True

    def transfer_matrix(self) -> list:
        """``M[i][j]`` = number of letters leading from live state i to j."""
        L = self.num_live
        M = [[0] * L for _ in range(L)]
        for i, row in enumerate(self.transitions):
            for j in row:
                if j >= 0:
                    M[i][j] += 1
        return M


def build_automaton(words, alphabet) -> FactorAutomaton:
    """Aho-Corasick automaton over ``alphabet`` for the forbidden ``words``."""
    alphabet = tuple(alphabet)
    words = [tuple(w) for w in words]
    if any(len(w) == 0 for w in words):
        raise DegenerateAutomatonError("the empty word is forbidden; no word survives")
    letters = set(alphabet)
    for w in words:
        if not set(w) <= letters:
            raise ValueError(f"word {w} uses letters outside the alphabet {alphabet}")

    goto = [{}]
    terminal = [False]
    for w in words:
        node = 0
        for c in w:
            nxt = goto[node].get(c)
            if nxt is None:
                nxt = len(goto)
                goto[node][c] = nxt
                goto.append({})
                terminal.append(False)
            node = nxt
        terminal[node] = True
    total = len(goto)

    dead = [False] * total
    fail = [0] * total
    delta = {}
    order = []  # live nodes in BFS order
    queue = deque([0])
    while queue:
        r = queue.popleft()
        order.append(r)
        f = fail[r]
        children = goto[r]
        if r == 0:
            row = [children.get(c, 0) for c in alphabet]
        else:
            frow = delta[f]
            row = [children.get(c, frow[k]) for k, c in enumerate(alphabet)]
        delta[r] = row
        for k, c in enumerate(alphabet):
            u = children.get(c)
            if u is None:
                continue
            fail[u] = 0 if r == 0 else delta[f][k]
            if terminal[u] or dead[fail[u]]:
                dead[u] = True
                continue  # descendants of a dead node are unreachable
            queue.append(u)

    index = {node: i for i, node in enumerate(order)}
    transitions = tuple(
        tuple(-1 if dead[t] else index[t] for t in delta[node]) for node in order
    )
    # recover trie strings of live nodes
    label = {0: ()}
    for node in order:
        for c, u in goto[node].items():
            if u in index:
                label[u] = label[node] + (c,)
    prefixes = tuple(label[node] for node in order)
    return FactorAutomaton(alphabet, transitions, total, prefixes)


def _check_guard(alphabet_size, N, limit=BRUTEFORCE_LIMIT):
    if alphabet_size**N > limit:
        raise SizeGuardError(
            f"brute force would scan {alphabet_size}^{N} > {limit:.0e} words; "
            "use the automaton method instead"
        )


def count_bruteforce(pres: Presentation, N: int, limit: int = BRUTEFORCE_LIMIT) -> CountReport:
    """Count normal words by extending normal words one letter at a time.

    A word is normal iff its prefix is normal and none of its suffixes is
    forbidden, so each candidate is checked against the forbidden set directly.
    """
    _check_guard(pres.alphabet_size, N, limit)
    forbidden = set(pres.forbidden_upto(N))
    counts = [0] * (N + 1)
    if () in forbidden:
        return CountReport(IntSeries(counts), "bruteforce", N)
    maxlen = max((len(w) for w in forbidden), default=0)
    alphabet = pres.alphabet

    def visit(word):
        n = len(word)
        counts[n] += 1
        if n == N:
            return
        for c in alphabet:
            w = word + (c,)
            m = n + 1
            if any(w[m - k:] in forbidden for k in range(1, min(maxlen, m) + 1)):
                continue
            visit(w)

    visit(())
    return CountReport(IntSeries(counts), "bruteforce", N)


def count_paths(automaton: FactorAutomaton, N: int) -> list:
    """Number of start-anchored live paths of each length 0..N."""
    L = automaton.num_live
    k = len(automaton.alphabet)
    if k**N < 2**62:
        T = np.array(automaton.transitions, dtype=np.int64).reshape(L, k)
        v = np.zeros(L, dtype=np.int64)
        v[automaton.start] = 1
        out = [1]
        cols = []
        for c in range(k):
            mask = T[:, c] >= 0
            cols.append((mask, T[mask, c]))
        for _ in range(N):
            new = np.zeros(L, dtype=np.int64)
            for mask, tgt in cols:
                np.add.at(new, tgt, v[mask])
            v = new
            out.append(int(v.sum()))
        return out
    # arbitrary precision path
    v = [0] * L
    v[automaton.start] = 1
    out = [1]
    for _ in range(N):
        new = [0] * L
        for s, row in enumerate(automaton.transitions):
            x = v[s]
            if x:
                for t in row:
                    if t >= 0:
                        new[t] += x
        v = new
        out.append(sum(v))
    return out


def count_automaton(pres: Presentation, N: int, forbidden_degree: int | None = None,
                    max_states: int = MAX_AUTOMATON_STATES) -> CountReport:
    """Dimensions 0..N via DP over the factor automaton of U truncated at degree D.

    ``forbidden_degree`` defaults to N; larger values only add words that cannot
    occur in words of degree <= N.
    """
    D = N if forbidden_degree is None else forbidden_degree
    if D < N:
        raise ValueError("forbidden words must be enumerated at least to degree N")
    words = pres.forbidden_upto(D)
    if () in words:
        return CountReport(IntSeries.zero(N), "automaton", D)
    size = 1 + sum(len(w) for w in words)
    if size > max_states:
        raise SizeGuardError(
            f"automaton would need up to {size} states (limit {max_states}); "
            "lower the degree or the alphabet size"
        )
    aut = build_automaton(words, pres.alphabet)
    log.debug("automaton: %d states, %d live", aut.num_states, aut.num_live)
    return CountReport(IntSeries(count_paths(aut, N)), "automaton", D)


# ---------------------------------------------------------------------------
# Rationalization
# ---------------------------------------------------------------------------


def bareiss_solve(A, b):
    """Fraction-free solve of ``A x = b`` over Z[t].

    ``A`` is a square matrix of IntPoly whose leading principal minors are
    nonzero.  Returns ``(numerators, det)`` with ``x_i = numerators[i] / det``.
    """
    n = len(A)
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    prev = IntPoly((1,))
    zero = IntPoly()
    for k in range(n - 1):
        piv = M[k][k]
        if piv.is_zero():
            raise ZeroDivisionError(f"zero pivot at step {k}")
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n + 1):
                if mik.is_zero():
                    val = piv * row_i[j]
                else:
                    val = piv * row_i[j] - mik * row_k[j]
                row_i[j] = val.exact_div(prev)
            row_i[k] = zero
        prev = piv
    det = M[n - 1][n - 1]
    if det.is_zero():
        raise ZeroDivisionError("singular system")
    X = [zero] * n
    for i in range(n - 1, -1, -1):
        acc = det * M[i][n]
        for j in range(i + 1, n):
            if not M[i][j].is_zero():
                acc = acc - M[i][j] * X[j]
        X[i] = acc.exact_div(M[i][i])
    return X, det


def rationalize(pres: Presentation) -> RationalFn:
    """Exact Hilbert series of a finite monomial presentation."""
    if pres.kind is not PresentationKind.FINITE:
        raise UnsupportedVariantError("rationalize needs a finite presentation")
    try:
        aut = build_automaton(pres.words, pres.alphabet)
    except DegenerateAutomatonError:
        return RationalFn(IntPoly(), IntPoly((1,)))
    M = aut.transfer_matrix()
    L = aut.num_live
    # (I - t M^T) x = e_start; the series is the sum of x
    A = [
        [IntPoly((1 if i == j else 0, -M[j][i])) for j in range(L)]
        for i in range(L)
    ]
    e = [IntPoly((1,)) if i == aut.start else IntPoly() for i in range(L)]
    X, det = bareiss_solve(A, e)
    num = IntPoly()
    for x in X:
        num = num + x
    return normalize_rational(num, det)
