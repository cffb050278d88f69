import itertools

import pytest

from oracles import (
    classical_weak_order,
    direct_bruhat_generators,
    direct_coclass_containment,
    direct_order_closure,
)
from permfaces.errors import CapExceeded
from permfaces.order import (
    Direction,
    OrderKind,
    bounds_check,
    bruhat_relations,
    build_order,
    c_preserves_rank_check,
    c_within_bruhat_check,
    check_cap,
    coclass_interval_theorem_check,
    default_cap,
    generating_relations,
    inclusion_leq,
    interval,
    leq,
    monotonicity_checks,
    reversal_check,
    shuffle_downset_check,
)
from permfaces.pword import Coclass, enumerate_words, from_coclass, identity, make, permutations
from permfaces.shuffle import compositions_upto

W = make


def test_inclusion_examples():
    assert inclusion_leq(W([1, 2]), W([1, 1]))
    assert not inclusion_leq(W([1, 1]), W([1, 2]))
    assert inclusion_leq(W([2, 1, 2]), W([2, 1, 2]))


@pytest.mark.parametrize("n", range(1, 5))
def test_inclusion_is_coclass_containment(n):
    d = build_order(n, OrderKind.INCLUSION)
    for a, b in itertools.product(enumerate_words(n), repeat=2):
        expected = direct_coclass_containment(a, b)
        assert inclusion_leq(a, b) == expected
        assert d.leq(a, b) == expected


def test_bruhat_relation_examples():
    assert bruhat_relations(W([1, 2])) == [(W([1, 1]), Direction.UP)]
    assert bruhat_relations(W([2, 1])) == [(W([1, 1]), Direction.DOWN)]
    assert bruhat_relations(W([1, 2, 1])) == []


def test_bruhat_chain_on_p2():
    d = build_order(2)
    assert d.lt(W([1, 2]), W([1, 1])) and d.lt(W([1, 1]), W([2, 1]))
    assert interval(d, W([1, 2]), W([2, 1])) == sorted(enumerate_words(2))
    assert interval(d, W([1, 1]), W([1, 1])) == [W([1, 1])]
    assert leq(d, W([1, 1]), W([1, 1]))


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_matches_direct_closure(n):
    words = enumerate_words(n)
    closure = direct_order_closure(words, direct_bruhat_generators(n))
    d = build_order(n)
    for a, b in itertools.product(words, repeat=2):
        assert d.leq(a, b) == ((a, b) in closure)


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_on_permutations_is_weak_order(n):
    d = build_order(n)
    for s, t in itertools.product(permutations(n), repeat=2):
        assert d.leq(s, t) == classical_weak_order(s, t)


def test_s4_incomparable_pair():
    # the coclasses W_{s2,s3} o 1 and W_{s1,s3} o s2 inside S_4
    a = W([1, 2, 2, 2])
    b = from_coclass(Coclass((1, 3), W([2, 1, 3, 4])))
    assert b == W([2, 1, 2, 2])
    d = build_order(4)
    assert not d.leq(a, b) and not d.leq(b, a)


@pytest.mark.parametrize("n", range(1, 6))
def test_bounds_and_reversal(n):
    assert bounds_check(n)
    assert reversal_check(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_c_order_inside_bruhat_and_graded(n):
    assert c_within_bruhat_check(n)
    assert c_preserves_rank_check(n)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("kind", list(OrderKind))
def test_generators_are_strict(n, kind):
    for a, b in generating_relations(n, kind):
        assert a != b and a.degree == b.degree == n


def test_shuffle_downset_examples():
    assert shuffle_downset_check((1, 1))
    assert shuffle_downset_check((3,))
    assert shuffle_downset_check((1, 2))


@pytest.mark.parametrize("c", [c for c in compositions_upto(5, 5) if sum(c)])
def test_shuffle_downset_exhaustive(c):
    assert shuffle_downset_check(c)


@pytest.mark.parametrize("n", range(1, 5))
def test_coclass_interval_theorem(n):
    for g in enumerate_words(n):
        assert coclass_interval_theorem_check(g)


def test_coclass_interval_small_cases():
    d = build_order(2)
    assert set(d.interval(W([1, 2]), W([2, 1]))) == set(enumerate_words(2))
    assert coclass_interval_theorem_check(identity(3))


def test_monotonicity_reports():
    for rep in monotonicity_checks(5):
        assert rep.ok, rep.line()
        assert rep.instances > 0


def test_cap_handling(monkeypatch):
    monkeypatch.setenv("PERMFACES_CAP", "3")
    assert default_cap() == 3
    with pytest.raises(CapExceeded) as err:
        build_order(4, OrderKind.C)
    assert err.value.exit_code == 2
    with pytest.raises(CapExceeded):
        check_cap(2, 9)
    monkeypatch.delenv("PERMFACES_CAP")
    assert default_cap() == 6
