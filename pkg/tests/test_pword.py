import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_coclass, brute_packed_words, fubini, surjections
from permfaces.errors import NotPacked, OutOfRange, ParseError
from permfaces.pword import (
    EMPTY,
    Coclass,
    coclass_elements,
    compose,
    cross,
    enumerate_rank,
    enumerate_words,
    from_coclass,
    identity,
    inversions,
    longest,
    make,
    max_coclass_element,
    monotone_factorize,
    one_block,
    parse,
    permutations,
    s_map,
    t_map,
    to_coclass,
)

W = make


@st.composite
def packed_words(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(enumerate_words(n)))


def test_make_examples():
    w = W([2, 1, 2])
    assert (w.degree, w.rank) == (3, 2)
    assert W([]) == EMPTY and EMPTY.degree == 0 and EMPTY.rank == 0
    with pytest.raises(NotPacked):
        W([1, 3])


@pytest.mark.parametrize("text", ["[2,1,2]", "[]", "[1, 1]"])
def test_parse_round_trip(text):
    assert str(parse(text)) == text.replace(" ", "")


@pytest.mark.parametrize("text", ["[a]", "[1,,2]", "[0]", "[1,3]"])
def test_parse_rejects(text):
    with pytest.raises((ParseError, NotPacked)):
        parse(text)


def test_compose_examples():
    assert compose(W([1, 1]), W([2, 1, 2])) == W([1, 1, 1])
    assert compose(W([1, 2]), W([2, 1, 2])) == W([2, 1, 2])
    assert compose(W([1]), W([1, 2])) == EMPTY


def test_cross_examples():
    assert cross(W([1, 1]), W([1])) == W([1, 1, 2])
    assert cross(EMPTY, W([2, 1])) == W([2, 1])
    assert cross(W([1]), W([1])) == W([1, 2])


def test_t_s_maps():
    assert t_map(2, 4) == W([1, 2, 2, 3])
    assert t_map(1, 2) == W([1, 1])
    with pytest.raises(OutOfRange):
        t_map(3, 3)
    assert s_map(1, 3) == W([2, 1, 3])
    assert longest(3) == W([3, 2, 1])
    assert one_block(2) == W([1, 1])


def test_monotone_factorize_examples():
    assert monotone_factorize(W([2, 1, 2])) == (W([1, 2, 2]), W([2, 1, 3]))
    assert monotone_factorize(W([1, 2, 3])) == (W([1, 2, 3]), identity(3))
    assert monotone_factorize(W([1, 1])) == (W([1, 1]), identity(2))


@pytest.mark.parametrize("n", range(1, 5))
def test_monotone_factorize_is_shortest(n):
    for g in enumerate_words(n):
        rho, sigma = monotone_factorize(g)
        assert compose(rho, sigma) == g
        best = min(inversions(s) for s in brute_coclass(g))
        assert inversions(sigma) == best


def test_coclass_examples():
    c = to_coclass(W([1, 1, 1]))
    assert c.blocks == (3,) and c.perm == identity(3)
    for sigma in permutations(3):
        assert from_coclass(Coclass((1, 1, 1), sigma)) == sigma
    for g in enumerate_words(3):
        assert from_coclass(to_coclass(g)) == g


def test_coclass_elements_examples():
    assert coclass_elements(W([1, 1])) == {W([1, 2]), W([2, 1])}
    assert coclass_elements(W([2, 1, 3])) == {W([2, 1, 3])}
    assert coclass_elements(W([1, 2, 1])) == {W([1, 3, 2]), W([2, 3, 1])}


@pytest.mark.parametrize("n", range(1, 5))
def test_coclass_elements_match_brute_force(n):
    for g in enumerate_words(n):
        els = coclass_elements(g)
        assert els == brute_coclass(g)
        assert max_coclass_element(g) == max(els, key=inversions)


def test_enumerate_examples():
    assert set(enumerate_words(2)) == {W([1, 2]), W([2, 1]), W([1, 1])}
    assert [len(enumerate_words(n)) for n in range(7)] == [1, 1, 3, 13, 75, 541, 4683]
    assert len(enumerate_rank(3, 2)) == 6


@pytest.mark.parametrize("n", range(0, 6))
def test_enumeration_matches_oracles(n):
    words = enumerate_words(n)
    assert len(words) == fubini(n)
    assert set(words) == brute_packed_words(n)
    assert words == sorted(words)
    for r in range(1, n + 1):
        assert len(enumerate_rank(n, r)) == surjections(n, r)


def test_inversions_examples():
    assert inversions(identity(3)) == 0
    assert inversions(W([3, 2, 1])) == 3
    assert inversions(W([2, 1, 3])) == 1


@given(packed_words(), packed_words(), packed_words())
def test_compose_associative_when_defined(a, b, c):
    if a.degree == b.rank and b.degree == c.rank:
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(packed_words(), packed_words(), packed_words())
def test_cross_associative(a, b, c):
    assert cross(cross(a, b), c) == cross(a, cross(b, c))


@given(packed_words())
def test_identity_is_neutral(g):
    assert compose(identity(g.rank), g) == g
    assert cross(EMPTY, g) == g == cross(g, EMPTY)


@given(packed_words(min_n=1))
def test_word_invariants(g):
    assert set(g.values) == set(range(1, g.rank + 1))
    assert g.degree == len(g.values)
    assert parse(str(g)) == g


def test_s_t_relations():
    # s_i o t_j in terms of t o s, on small ranks
    for n in range(3, 6):
        for i, j in itertools.product(range(1, n - 1), range(1, n)):
            lhs = compose(s_map(i, n - 1), t_map(j, n))
            if i < j - 1:
                assert lhs == compose(t_map(j, n), s_map(i, n))
            elif i > j:
                assert lhs == compose(t_map(j, n), s_map(i + 1, n))
            elif i == j and j + 1 <= n - 1:
                rhs = compose(t_map(j + 1, n), compose(s_map(j, n), s_map(j + 1, n)))
                assert lhs == rhs
