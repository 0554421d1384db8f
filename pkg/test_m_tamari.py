#!/usr/bin/env python3
"""
Tests for m-ballot paths, m-binary trees and (m+1)-ary trees
"""

import pytest

from src.engines.interval_posets import IntervalPoset, singleton
from src.engines.m_tamari import (
    EMPTY_MARY,
    MAryTree,
    MBallotPath,
    ballot_paths,
    ballot_rotate,
    ballot_to_mary,
    ballot_to_mdyck,
    ballot_validate,
    comb,
    is_m_binary,
    is_m_dyck,
    is_m_interval_poset,
    m_binary_assemble,
    m_binary_components,
    m_binary_to_mary,
    m_binary_trees,
    m_catalan,
    m_tamari_covers,
    mary_to_ballot,
    mary_to_m_binary,
    mdyck_to_ballot,
    touch_points,
)
from src.engines.trees_paths import (
    EMPTY_TREE,
    DyckPath,
    binary_trees,
    dyck_rotate,
    dyck_to_tree,
    dyck_validate,
    left_comb,
    leftmost_branch_length,
    right_comb,
    tree_to_dyck,
)
from src.errors import ArityMismatch, BadStepCounts, NotMBinary, NotMDyck, PrefixViolation


def test_m_catalan():
    assert [m_catalan(n, 2) for n in range(5)] == [1, 1, 3, 12, 55]
    assert [m_catalan(n, 1) for n in range(5)] == [1, 1, 2, 5, 14]


def test_m_binary_trees_of_size_six():
    trees = list(m_binary_trees(3, 2))
    assert len(trees) == 12
    assert len(set(trees)) == 12
    assert all(is_m_binary(tree, 2) for tree in trees)
    assert sum(1 for tree in binary_trees(6) if is_m_binary(tree, 2)) == 12


def test_m_binary_characterisation():
    assert is_m_binary(comb(2, 2), 2)
    assert is_m_binary(right_comb(4), 2)
    assert not is_m_binary(left_comb(4), 2)
    assert not is_m_binary(right_comb(3), 2)


def test_ballot_validation():
    assert ballot_validate("100", 2).n == 1
    with pytest.raises(BadStepCounts):
        ballot_validate("10", 2)
    with pytest.raises(PrefixViolation):
        ballot_validate("0100", 2)


def test_ballot_and_m_dyck_words():
    path = ballot_validate("101000", 2)
    assert ballot_to_mdyck(path).word == "11011000"
    assert mdyck_to_ballot(DyckPath("11011000"), 2) == path
    assert is_m_dyck(DyckPath("11001100"), 2)
    with pytest.raises(NotMDyck):
        mdyck_to_ballot(DyckPath("1010"), 2)


def test_ballot_rotation():
    path = ballot_validate("10100" + "0" + "110100000" + "100", 2)
    rotated = ballot_rotate(path, 5)
    assert rotated.word == "10100" + "110100000" + "0" + "100"
    assert touch_points(path) == 3
    assert touch_points(rotated) == 2


def test_components_round_trip():
    for tree in m_binary_trees(3, 2):
        left, parts = m_binary_components(tree, 2)
        assert m_binary_assemble(left, parts, 2) == tree


def test_assemble_errors():
    with pytest.raises(ArityMismatch):
        m_binary_assemble(EMPTY_TREE, [EMPTY_TREE], 2)
    with pytest.raises(NotMBinary):
        m_binary_assemble(left_comb(2), [EMPTY_TREE, EMPTY_TREE], 2)
    with pytest.raises(NotMBinary):
        m_binary_components(EMPTY_TREE, 2)


def test_mary_word_matches_the_binary_word():
    for tree in m_binary_trees(3, 2):
        mary = m_binary_to_mary(tree, 2)
        assert mary.size == 3
        assert mary_to_ballot(mary, 2) == mdyck_to_ballot(tree_to_dyck(tree), 2)
        assert mary_to_m_binary(mary, 2) == tree


def test_ballot_to_mary():
    for path in ballot_paths(3, 3):
        assert mary_to_ballot(ballot_to_mary(path, 3), 3) == path
    assert ballot_to_mary(MBallotPath("", 2), 2) == EMPTY_MARY


def test_mary_arity_is_checked():
    with pytest.raises(ArityMismatch):
        mary_to_m_binary(MAryTree((EMPTY_MARY, EMPTY_MARY)), 2)


def test_m_tamari_covers_stay_m_binary():
    for tree in m_binary_trees(3, 2):
        for cover in m_tamari_covers(tree, 2):
            assert is_m_binary(cover, 2)
    with pytest.raises(NotMBinary):
        m_tamari_covers(left_comb(2), 2)


def test_m_interval_posets():
    assert is_m_interval_poset(singleton(comb(2, 2)), 2)
    assert not is_m_interval_poset(IntervalPoset(4), 2)
    assert not is_m_interval_poset(IntervalPoset(3, frozenset({(2, 1)})), 2)


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)])
def test_dyck_rotation_keeps_m_dyck_paths(n, m):
    for tree in m_binary_trees(n, m):
        word = tree_to_dyck(tree).word
        for index in range(len(word) - 1):
            if word[index] == "0" and word[index + 1] == "1":
                rotated = dyck_rotate(DyckPath(word), index)
                dyck_validate(rotated.word)
                assert is_m_dyck(rotated, m)


@pytest.mark.parametrize("n", range(1, 4))
def test_touch_points_count_the_left_branch(n):
    for path in ballot_paths(n, 2):
        assert touch_points(path) == leftmost_branch_length(dyck_to_tree(ballot_to_mdyck(path)))
