#!/usr/bin/env python3
"""
Tests for generators, interval counts, oracles and the desk-scale guard
"""

import pytest

from src.engines.composition import compose_B, decompose_B
from src.engines.enumeration import (
    catalan,
    count_interval_posets,
    ensure_desk_scale,
    ensure_extension_scale,
    gen_binary_trees,
    gen_interval_posets,
    gen_m_binary_trees,
    gen_m_interval_posets,
    oracle_count_pairs,
    oracle_count_pairs_m,
    oracle_greater_m,
    oracle_smaller,
    oracle_smaller_m,
    refined_count,
    refined_count_m,
)
from src.engines.interval_posets import is_valid, lower_tree, tamari_leq, upper_tree
from src.engines.m_tamari import comb, is_m_interval_poset
from src.engines.polynomials import m_tamari_poly, phi_m_series, phi_series
from src.engines.trees_paths import binary_trees
from src.errors import ScaleGuard


def test_catalan():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 68), (5, 399)])
def test_interval_counts(n, expected):
    assert count_interval_posets(n) == expected


def test_threaded_count_agrees():
    assert count_interval_posets(4, workers=3) == 68
    assert count_interval_posets(3, m=2, workers=2) == 58


@pytest.mark.parametrize("n, m, expected", [(1, 2, 1), (2, 2, 6), (3, 2, 58), (2, 3, 10)])
def test_m_interval_counts(n, m, expected):
    assert count_interval_posets(n, m) == expected


def test_generated_posets_are_distinct_and_valid():
    posets = list(gen_interval_posets(4))
    assert len(posets) == 68
    assert len(set(posets)) == 68
    assert all(is_valid(poset.size, poset.relations) for poset in posets)


def test_generated_m_posets_are_m_interval_posets():
    posets = list(gen_m_interval_posets(2, 2))
    assert len(set(posets)) == 6
    assert all(is_m_interval_poset(poset, 2) for poset in posets)


def test_generation_hits_every_comparable_pair():
    bounds = {(lower_tree(poset), upper_tree(poset)) for poset in gen_interval_posets(3)}
    expected = {
        (low, high)
        for low in binary_trees(3)
        for high in binary_trees(3)
        if tamari_leq(low, high)
    }
    assert bounds == expected


def test_every_interval_decomposes():
    for poset in gen_interval_posets(4):
        assert poset in compose_B(*decompose_B(poset))


def test_oracles():
    assert oracle_count_pairs(4) == 68
    assert oracle_count_pairs_m(2, 2) == 6
    assert oracle_count_pairs_m(2, 3) == 10


def test_m_oracles_match_the_polynomials():
    for tree in gen_m_binary_trees(2, 2):
        assert m_tamari_poly(tree, 2).value_at_one() == oracle_smaller_m(tree, 2)
    assert oracle_greater_m(comb(2, 2), 2) == 3


def test_refined_counts_match_the_series():
    assert refined_count(4) == phi_series(4).y_slice(4)
    assert refined_count_m(2, 2) == phi_m_series(2, 2).y_slice(2)


def test_desk_scale_guard():
    with pytest.raises(ScaleGuard) as excinfo:
        ensure_desk_scale(20)
    assert excinfo.value.catalan == catalan(20)
    ensure_desk_scale(20, force=True)
    ensure_desk_scale(4, 2)
    with pytest.raises(ScaleGuard):
        list(gen_binary_trees(20))
    with pytest.raises(ScaleGuard):
        count_interval_posets(12, 2)


def test_extension_scale_guard():
    with pytest.raises(ScaleGuard) as excinfo:
        ensure_extension_scale(9)
    assert excinfo.value.catalan == 362880
    assert "9!" in str(excinfo.value)
    ensure_extension_scale(9, force=True)
    ensure_extension_scale(8)


def test_oracles_are_guarded():
    with pytest.raises(ScaleGuard):
        oracle_count_pairs(8)
    with pytest.raises(ScaleGuard):
        oracle_smaller(next(gen_binary_trees(8)))
    with pytest.raises(ScaleGuard):
        oracle_count_pairs_m(4, 2)
    assert oracle_count_pairs(1, force=True) == 1
    with pytest.raises(ScaleGuard):
        oracle_count_pairs(3, limit=4)
