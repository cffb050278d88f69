import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from permfaces.errors import UnitUndefined
from permfaces.gamma import gamma
from permfaces.pword import EMPTY, enumerate_words, make
from permfaces.tree import LEAF, corolla, enumerate_trees, over, parse_tree, tree_wedge, under
from permfaces.trialg import (
    AXIOMS,
    Basis,
    LinComb,
    Op,
    axiom_sides,
    axioms_check,
    bracketing_vectors,
    fiber_embedding_report,
    freeness_span_check,
    gamma_linear_morphism_report,
    gamma_support_report,
    lin_product,
    multiplicity_report,
    over_under_check,
    pword_methods_report,
    pword_product,
    rank_over_q,
    tree_methods_report,
    tree_product,
)

W, T = make, parse_tree
S1 = corolla(1)
LEFT, RIGHT = tree_wedge([S1, LEAF]), tree_wedge([LEAF, S1])


def lc(*elems):
    return LinComb.of(Basis.PWORD if hasattr(elems[0], "values") else Basis.TREE, elems)


def test_lincomb_normalizes():
    a = LinComb(Basis.PWORD, {W([1]): 2, W([1, 2]): 0})
    assert a.terms == {W([1]): 2}
    assert (a - a).terms == {}
    assert a.scale(3).max_coeff() == 6
    assert str(LinComb(Basis.TREE)) == "0"


def test_lincomb_json_schema():
    data = json.loads(pword_product(W([1]), W([1]), Op.STAR).to_json())
    assert data["basis"] == "pword"
    assert [t["elem"] for t in data["terms"]] == ["[1,1]", "[1,2]", "[2,1]"]
    assert all(t["coeff"] == "1" for t in data["terms"])


def test_pword_product_examples():
    x = W([1])
    assert pword_product(x, x, Op.SUCC) == lc(W([1, 2]))
    assert pword_product(x, x, Op.DOT) == lc(W([1, 1]))
    assert pword_product(x, x, Op.PREC) == lc(W([2, 1]))
    assert pword_product(x, x, Op.STAR) == lc(W([1, 2]), W([1, 1]), W([2, 1]))
    g = W([2, 1, 2])
    assert pword_product(EMPTY, g, Op.STAR) == lc(g) == pword_product(g, EMPTY, Op.STAR)


def test_tree_product_examples():
    assert tree_product(S1, S1, Op.SUCC) == lc(LEFT)
    assert tree_product(S1, S1, Op.DOT) == lc(corolla(2))
    assert tree_product(S1, S1, Op.PREC) == lc(RIGHT)
    star = tree_product(S1, S1, Op.STAR)
    assert star == lc(*enumerate_trees(2))
    assert star == tree_product(S1, S1, Op.STAR, "interval")
    t = T("(. (. .) .)")
    assert tree_product(t, LEAF, Op.STAR) == lc(t) == tree_product(LEAF, t, Op.STAR)


@pytest.mark.parametrize("op", [Op.SUCC, Op.DOT, Op.PREC])
def test_unit_undefined(op):
    with pytest.raises(UnitUndefined) as err:
        tree_product(LEAF, S1, op)
    assert err.value.exit_code == 4
    with pytest.raises(UnitUndefined):
        pword_product(W([1]), EMPTY, op)


def test_over_under_examples():
    assert over(S1, S1) == LEFT and under(S1, S1) == RIGHT
    assert over(S1, LEAF) == S1 == under(S1, LEAF)
    for a in range(5):
        for b in range(5 - a):
            for t in enumerate_trees(a):
                for z in enumerate_trees(b):
                    assert over_under_check(t, z)


@pytest.mark.parametrize("basis", list(Basis))
def test_axioms_at_degree_five(basis):
    for rep in axioms_check(basis, 5):
        assert rep.ok, rep.line()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_axioms_random_degree_six_words(data):
    v, w, u = (data.draw(st.sampled_from(enumerate_words(n))) for n in (2, 2, 2))
    i = data.draw(st.integers(0, len(AXIOMS) - 1))
    right, left = axiom_sides(i, v, w, u)
    assert right == left


def test_methods_agree():
    assert pword_methods_report(5).ok
    assert tree_methods_report(5).ok


def test_gamma_carries_support_and_fibers():
    assert gamma_support_report(5).ok
    assert fiber_embedding_report(5).ok


def test_linear_gamma_is_not_a_morphism():
    # [1] succ [2,1] has three terms that all land on one tree
    image = pword_product(W([1]), W([2, 1]), Op.SUCC).map(gamma, Basis.TREE)
    target = tree_product(gamma(W([1])), gamma(W([2, 1])), Op.SUCC)
    assert image == target.scale(3)
    assert not gamma_linear_morphism_report(3).ok


@pytest.mark.parametrize("basis", list(Basis))
def test_multiplicity_free(basis):
    rep = multiplicity_report(basis, 6)
    assert rep.ok, rep.line()


def test_lin_product_is_bilinear():
    a = lc(W([1])) + lc(W([1, 1]))
    b = lc(W([1])).scale(2)
    expected = LinComb(Basis.PWORD)
    for x in (W([1]), W([1, 1])):
        expected = expected + pword_product(x, W([1]), Op.PREC).scale(2)
    assert lin_product(a, b, Op.PREC) == expected


def test_rank_examples():
    assert rank_over_q([]) == 0
    assert rank_over_q([{"a": 1, "b": 1}, {"a": 2, "b": 2}, {"b": Fraction(1, 3)}]) == 2


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 11), (4, 45)])
def test_freeness_span(n, expected):
    assert freeness_span_check(n) == (expected, expected)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank_agrees_with_sympy(n):
    rows = bracketing_vectors(n)
    cols = sorted({k for r in rows for k in r}, key=str)
    m = sympy.Matrix([[r.get(c, 0) for c in cols] for r in rows])
    assert m.rank() == rank_over_q(rows)
