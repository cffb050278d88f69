import pytest
from hypothesis import given, strategies as st

from oracles import brute_gamma, direct_preimage
from permfaces.gamma import direct_fibers, fiber, gamma, max_word, min_word, monotone_check, order_transport_check
from permfaces.order import OrderKind, build_order
from permfaces.pword import enumerate_words, identity, make, one_block
from permfaces.shuffle import wedge, wedge_decompose
from permfaces.tree import LEAF, corolla, enumerate_trees, parse_tree, tree_wedge, vertices

W, T = make, parse_tree
S1 = corolla(1)


def test_gamma_examples():
    for n in range(1, 5):
        assert gamma(one_block(n)) == corolla(n)
    assert gamma(W([1, 2])) == tree_wedge([S1, LEAF])
    assert gamma(W([2, 1])) == tree_wedge([LEAF, S1])
    assert gamma(W([1, 1])) == corolla(2)
    assert gamma(W([2, 1, 2])) == tree_wedge([LEAF, S1, LEAF])


@pytest.mark.parametrize("n", range(0, 6))
def test_gamma_matches_oracle(n):
    for w in enumerate_words(n):
        assert gamma(w) == brute_gamma(w)


def test_min_max_examples():
    for n in range(1, 4):
        assert min_word(corolla(n)) == max_word(corolla(n)) == one_block(n)
    assert min_word(T("(. (. .))")) == max_word(T("(. (. .))")) == W([2, 1])
    assert min_word(T("((. .) .)")) == W([1, 2])


def test_fiber_examples():
    assert fiber(corolla(2)) == [W([1, 1])]
    assert fiber(tree_wedge([S1, LEAF])) == [W([1, 2])]


@pytest.mark.parametrize("n", range(0, 6))
def test_fibers_are_intervals_and_partition(n):
    bruhat = build_order(n)
    seen = []
    for t in enumerate_trees(n):
        words = fiber(t, bruhat)
        assert set(words) == direct_preimage(t)
        assert min_word(t) in words and max_word(t) in words
        seen.extend(words)
    assert sorted(seen) == sorted(enumerate_words(n))


@pytest.mark.parametrize("n", range(0, 6))
def test_direct_fibers_cover_every_tree(n):
    assert set(direct_fibers(n)) == set(enumerate_trees(n))


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(enumerate_words(n))))
def test_gamma_forgets_the_wedge_shuffle(w):
    omega, parts = wedge_decompose(w)
    flat = wedge(identity(omega.degree), parts)
    assert gamma(flat) == gamma(w)
    assert vertices(gamma(w)) >= w.rank


@given(st.integers(0, 5).flatmap(lambda n: st.sampled_from(enumerate_trees(n))))
def test_endpoint_ranks_count_vertices(t):
    assert min_word(t).rank == max_word(t).rank == vertices(t)
    assert gamma(min_word(t)) == t == gamma(max_word(t))


def test_vertex_count_is_not_degree_minus_rank():
    # the corolla and the left comb both break |vertices| = n - rank
    assert vertices(gamma(one_block(3))) == 1 != 3 - 1
    assert vertices(gamma(W([1, 2]))) == 2 != 2 - 2


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("kind", list(OrderKind))
def test_order_transport(n, kind):
    assert monotone_check(n, kind)
    assert order_transport_check(n, kind)
