"""Named verification suites shared by the command line and the scripts."""

from __future__ import annotations

import itertools
from typing import Callable

from .gamma import direct_fibers, fiber, gamma, max_word, min_word, order_transport_check
from .order import (
    OrderKind,
    Report,
    bounds_check,
    build_order,
    c_preserves_rank_check,
    c_within_bruhat_check,
    coclass_interval_theorem_check,
    inclusion_matches_direct_check,
    monotonicity_checks,
    reversal_check,
    shuffle_downset_check,
)
from .pword import enumerate_words, identity
from .shuffle import (
    ShuffleSplit,
    compositions_upto,
    enumerate_sh,
    sh_associativity_check,
    sh_split_identities_check,
    varios_identities_check,
    wedge,
    wedge_decompose,
    xi,
)
from .tree import build_tree_order, enumerate_trees, vertices
from .trialg import (
    Basis,
    axioms_check,
    fiber_embedding_report,
    freeness_span_check,
    gamma_linear_morphism_report,
    gamma_support_report,
    multiplicity_report,
    over_under_check,
    pword_methods_report,
    tree_methods_report,
)

SUITES = ("axioms", "orders", "gamma", "shuffles", "freeness")


def _simple(name: str, cases, test: Callable) -> Report:
    rep = Report(name)
    for case in cases:
        rep.instances += 1
        if not test(case):
            rep.fail(str(case))
    return rep


def orders_suite(cap: int) -> list[Report]:
    degrees = range(1, cap + 1)
    out = [
        _simple("partition order generators are acyclic", itertools.product(degrees, OrderKind),
                lambda c: build_order(c[0], c[1], cap=cap) is not None),
        _simple("tree order generators are acyclic", itertools.product(degrees, OrderKind),
                lambda c: build_tree_order(c[0], c[1], cap=cap) is not None),
        _simple("identity and longest word bound every packed word", degrees, lambda n: bounds_check(n, cap)),
        _simple("Bruhat comparisons preserve strict descents and ascents", degrees, lambda n: reversal_check(n, cap)),
        _simple("C order lies inside the Bruhat order", degrees, lambda n: c_within_bruhat_check(n, cap)),
        _simple("C order preserves rank", degrees, lambda n: c_preserves_rank_check(n, cap)),
        _simple("inclusion order equals coarsening by a non-decreasing map", degrees,
                lambda n: inclusion_matches_direct_check(n, cap)),
        _simple("faces contained in a face form a Bruhat interval",
                [w for n in range(1, min(cap, 4) + 1) for w in enumerate_words(n)],
                lambda w: coclass_interval_theorem_check(w, cap)),
        _simple("shuffles are the Bruhat down-set of xi",
                [c for c in compositions_upto(cap, cap) if 0 < sum(c)],
                lambda c: shuffle_downset_check(c, cap)),
    ]
    out.extend(monotonicity_checks(cap))
    return out


def gamma_suite(cap: int, literal: bool = False) -> list[Report]:
    degrees = range(0, cap + 1)
    reps = [
        _simple("gamma is surjective", degrees,
                lambda n: set(direct_fibers(n)) == set(enumerate_trees(n, cap=cap))),
        _simple("fibers are the intervals [Min, Max]",
                [t for n in degrees for t in enumerate_trees(n, cap=cap)],
                lambda t: sorted(fiber(t, cap=cap)) == sorted(direct_fibers(t.degree)[t])),
        _simple("wedge shuffle does not change gamma",
                [w for n in range(1, cap + 1) for w in enumerate_words(n)],
                lambda w: _shuffle_free(w)),
        _simple("Min and Max have rank equal to the vertex count",
                [t for n in degrees for t in enumerate_trees(n, cap=cap)],
                lambda t: min_word(t).rank == max_word(t).rank == vertices(t)),
        _simple("vertex count bounds the rank from above",
                [w for n in degrees for w in enumerate_words(n)],
                lambda w: vertices(gamma(w)) >= w.rank),
    ]
    small = range(1, min(cap, 4) + 1)
    for kind in OrderKind:
        reps.append(_simple(f"gamma transports the {kind.value} order", small,
                            lambda n, kind=kind: order_transport_check(n, kind, cap)))
    if literal:
        reps.append(_simple("gamma of rank r degree n has n - r vertices",
                            [w for n in degrees for w in enumerate_words(n)],
                            lambda w: vertices(gamma(w)) == w.degree - w.rank))
    return reps


def _shuffle_free(w) -> bool:
    _, parts = wedge_decompose(w)
    return gamma(w) == gamma(wedge(identity(sum(p.rank for p in parts)), parts))


def shuffles_suite(cap: int) -> list[Report]:
    small = min(cap, 4)
    triples = [c for c in itertools.product(range(small + 1), repeat=3) if sum(c) <= small]
    pairs = [(n, m) for n in range(1, small + 1) for m in range(1, small + 1 - n)]
    return [
        _simple("binary shuffles split into three disjoint parts", pairs, _partition_ok),
        _simple("shuffle associativity", triples, lambda c: sh_associativity_check(*c)),
        _simple("seven split shuffle identities", triples, lambda c: sh_split_identities_check(*c)),
        _simple("three multi-block shuffle identities", [small], lambda t: varios_identities_check(t)),
        _simple("xi is a shuffle", [c for c in compositions_upto(cap, cap) if sum(c)],
                lambda c: xi(c) in set(enumerate_sh(c))),
        _simple("wedge inverts the decomposition",
                [w for n in range(1, cap + 1) for w in enumerate_words(n)],
                lambda w: wedge(*wedge_decompose(w)) == w),
    ]


def _partition_ok(nm) -> bool:
    n, m = nm
    whole = enumerate_sh((n, m))
    parts = [enumerate_sh((n, m), s) for s in (ShuffleSplit.GREATER, ShuffleSplit.BULLET, ShuffleSplit.LESS)]
    flat = [w for p in parts for w in p]
    return len(flat) == len(set(flat)) == len(whole) and set(flat) == set(whole)


def axioms_suite(cap: int, literal: bool = False) -> list[Report]:
    reps = axioms_check(Basis.PWORD, cap) + axioms_check(Basis.TREE, cap)
    reps += [
        pword_methods_report(cap),
        tree_methods_report(cap),
        gamma_support_report(cap),
        fiber_embedding_report(cap),
        multiplicity_report(Basis.PWORD, cap),
        multiplicity_report(Basis.TREE, cap),
        _simple("Gamma of a cross product is over, of xi o cross is under",
                [(t, z) for a in range(cap + 1) for b in range(cap + 1 - a)
                 for t in enumerate_trees(a, cap=cap) for z in enumerate_trees(b, cap=cap)],
                lambda tz: over_under_check(*tz, cap=cap)),
    ]
    if literal:
        reps.append(gamma_linear_morphism_report(cap))
    return reps


def freeness_suite(cap: int) -> list[Report]:
    rep = Report("bracketings of the generator span each degree")
    for n in range(1, min(cap, 4) + 1):
        rep.instances += 1
        found, expected = freeness_span_check(n)
        rep.notes.append(f"degree {n}: rank {found} of {expected}")
        if found != expected:
            rep.fail(f"degree {n}: rank {found} != {expected}")
    return [rep]


def run_suite(name: str, cap: int, literal: bool = False) -> list[Report]:
    if name == "all":
        out: list[Report] = []
        for s in SUITES:
            out.extend(run_suite(s, cap, literal))
        return out
    if name == "orders":
        return orders_suite(cap)
    if name == "gamma":
        return gamma_suite(cap, literal)
    if name == "shuffles":
        return shuffles_suite(cap)
    if name == "axioms":
        return axioms_suite(cap, literal)
    if name == "freeness":
        return freeness_suite(cap)
    raise ValueError(f"unknown suite {name!r}")
