from __future__ import annotations

from itertools import combinations

import pytest

from skewbrace import (
    EmptyGenerators,
    biquandle_closure,
    enumerate_ideals,
    group_closure,
    ideal_closure,
    is_ideal,
)
from skewbrace.coloring import derived_biquandle

IDEALS = {
    "klein_z4": [(1,), (1, 3), (1, 2, 3, 4)],
    "z4_klein": [(1,), (1, 3), (1, 2, 3, 4)],
    "nab6": [(1,), (1, 2, 3), (1, 2, 3, 4, 5, 6)],
    "cyc6": [(1,), (1, 3, 5), (1, 2, 3, 4, 5, 6)],
    "dih8": [
        (1,),
        (1, 3),
        (1, 2, 3, 4),
        (1, 3, 5, 6),
        (1, 3, 7, 8),
        (1, 2, 3, 4, 5, 6, 7, 8),
    ],
    "inv8": [(1,), (1, 2, 3, 6), (1, 2, 3, 4, 5, 6, 7, 8)],
}


def _all_subsets(n):
    elems = range(1, n + 1)
    for k in range(1, n + 1):
        for combo in combinations(elems, k):
            yield frozenset(combo)


def _group_closed(group, t):
    return all(group.op(a, b) in t for a in t for b in t)


def _biquandle_closed(bq, t):
    return all(
        bq.under.value(a, b) in t and bq.over.value(a, b) in t
        for a in t
        for b in t
    )


def test_group_closure_anchor(braces):
    assert group_closure(braces["cyc6"].circ, {3}) == frozenset({1, 3, 5})


def test_biquandle_closure_anchor(braces):
    bq = derived_biquandle(braces["nab6"])
    assert biquandle_closure(bq, {4}) == frozenset({4, 5, 6})


def test_empty_generators_rejected(braces):
    brace = braces["nab6"]
    with pytest.raises(EmptyGenerators):
        group_closure(brace.circ, set())
    with pytest.raises(EmptyGenerators):
        biquandle_closure(derived_biquandle(brace), frozenset())
    with pytest.raises(EmptyGenerators):
        ideal_closure(brace, [])


def test_group_closure_is_minimal_closed_superset(braces):
    # oracle: intersection of every op-closed subset containing the seed
    for brace in braces.values():
        for group in (brace.circ, brace.star):
            closed = [t for t in _all_subsets(brace.n) if _group_closed(group, t)]
            for seed in _all_subsets(brace.n):
                supersets = [t for t in closed if seed <= t]
                oracle = frozenset.intersection(*supersets)
                assert group_closure(group, seed) == oracle


def test_biquandle_closure_is_minimal_closed_superset(braces):
    for brace in braces.values():
        bq = derived_biquandle(brace)
        closed = [t for t in _all_subsets(brace.n) if _biquandle_closed(bq, t)]
        for seed in _all_subsets(brace.n):
            supersets = [t for t in closed if seed <= t]
            oracle = frozenset.intersection(*supersets)
            assert biquandle_closure(bq, seed) == oracle


def test_ideal_closure_is_minimal_ideal_superset(braces):
    for brace in braces.values():
        closed = [t for t in _all_subsets(brace.n) if is_ideal(brace, t)]
        for seed in _all_subsets(brace.n):
            supersets = [t for t in closed if seed <= t]
            oracle = frozenset.intersection(*supersets)
            assert ideal_closure(brace, seed) == oracle


def test_ideal_closure_contains_identity(braces):
    for brace in braces.values():
        for x in range(1, brace.n + 1):
            assert 1 in ideal_closure(brace, {x})


def test_enumerate_ideals_frozen_lists(braces):
    for name, brace in braces.items():
        got = [tuple(sorted(i)) for i in enumerate_ideals(brace)]
        assert got == IDEALS[name]


def test_enumerate_ideals_methods_agree(braces):
    for brace in braces.values():
        auto = enumerate_ideals(brace)
        assert enumerate_ideals(brace, method="powerset") == auto
        assert enumerate_ideals(brace, method="closure") == auto
        assert all(is_ideal(brace, t) for t in auto)


def test_enumerate_ideals_rejects_unknown_method(braces):
    with pytest.raises(ValueError):
        enumerate_ideals(braces["cyc6"], method="guess")
