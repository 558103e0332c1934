import math

import pytest
from hypothesis import given, strategies as st

from gradedhilbert.errors import CapacityError, InfeasibleError, PresentationSyntaxError
from gradedhilbert.monoid import (
    Y,
    comm_image,
    enumerate_comm,
    enumerate_words,
    format_word,
    minimal_d,
    parse_word,
    realize_A,
)
from gradedhilbert.powseries import IntSeries, SeriesSpec, generate


def test_enumerate_words_examples():
    assert enumerate_words(2, 0) == [()]
    assert enumerate_words(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert enumerate_words(3, 2)[:3] == [(1, 1), (1, 2), (1, 3)]


@given(st.integers(1, 4), st.integers(0, 5))
def test_enumerate_words_properties(d, n):
    words = enumerate_words(d, n)
    assert len(words) == d**n
    assert len(set(words)) == len(words)
    assert words == sorted(words)
    assert all(len(w) == n and all(1 <= c <= d for c in w) for w in words)


def test_enumerate_comm_examples():
    assert enumerate_comm(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(enumerate_comm(2, 3)) == 4
    assert len(enumerate_comm(3, 2)) == 6


@given(st.integers(1, 4), st.integers(0, 6))
def test_enumerate_comm_properties(d, n):
    mons = enumerate_comm(d, n)
    assert len(mons) == math.comb(n + d - 1, d - 1)
    assert len(set(mons)) == len(mons)
    assert mons == sorted(mons)
    assert all(sum(m) == n and len(m) == d for m in mons)


def test_word_text_roundtrip():
    w = parse_word("x1 x2 y x1", 2)
    assert w == (1, 2, Y, 1)
    assert format_word(w) == "x1 x2 y x1"
    assert parse_word("1", 2) == ()
    with pytest.raises(PresentationSyntaxError):
        parse_word("x3", 2)
    with pytest.raises(PresentationSyntaxError):
        parse_word("y", 2, allow_y=False)
    with pytest.raises(PresentationSyntaxError):
        parse_word("z", 2)


def test_comm_image():
    assert comm_image((1, 2, 1), 3) == (2, 1, 0)


def test_realize_A_partition():
    a = generate(SeriesSpec.partition(), 6)
    A = realize_A(a, 2)
    assert A.degree_set(2) == ((1, 1), (1, 2))
    assert A.contains_one
    for n in range(7):
        assert A.size(n) == a[n]
        assert set(A.degree_set(n)) <= set(enumerate_words(2, n))
    assert realize_A(a, 2) == A  # deterministic


def test_realize_A_capacity_error():
    with pytest.raises(CapacityError) as err:
        realize_A(IntSeries((0, 3, 0)), 2)
    assert err.value.degree == 1 and err.value.bound == 2


def test_realize_A_zero_and_commutative():
    A = realize_A(IntSeries.zero(5), 3)
    assert all(A.size(n) == 0 for n in range(6))
    C = realize_A(IntSeries((1, 2, 3)), 2, commutative=True)
    assert C.degree_set(2) == ((0, 2), (1, 1), (2, 0))
    assert C.contains_word((2, 1)) and C.contains_word((1, 2))
    with pytest.raises(CapacityError):
        realize_A(IntSeries((1, 2, 4)), 2, commutative=True)


def _scan_min_d(a, commutative):
    d = 1
    while True:
        if commutative:
            ok = all(an <= math.comb(n + d - 1, d - 1) for n, an in enumerate(a))
        else:
            ok = all(an <= d**n for n, an in enumerate(a))
        if ok:
            return d
        d += 1


def test_minimal_d_examples():
    assert minimal_d(generate(SeriesSpec.partition(), 30)) == 2
    cat20 = generate(SeriesSpec.catalan(), 20)
    cat30 = generate(SeriesSpec.catalan(), 30)
    # by scan: Catalan(n-1) <= 3^n holds up to n = 20 and first fails at n = 25
    assert _scan_min_d(cat20, False) == 3
    assert minimal_d(cat20) == 3
    assert minimal_d(cat30) == _scan_min_d(cat30, False) == 4
    assert minimal_d(IntSeries.zero(10)) == 1
    with pytest.raises(InfeasibleError):
        minimal_d(IntSeries((2, 0)))


@given(st.lists(st.integers(0, 500), min_size=2, max_size=10), st.booleans())
def test_minimal_d_matches_scan(tail, commutative):
    a = IntSeries([1] + tail)
    assert minimal_d(a, commutative) == _scan_min_d(a, commutative)
