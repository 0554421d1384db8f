"""
m-ballot paths, m-Dyck paths, m-binary trees and (m+1)-ary trees.

The m-Tamari lattice is handled through its binary form: the m-binary
trees of size n*m form the upper ideal of the (n, m)-comb in the Tamari
lattice of size n*m. The arity m is always passed explicitly.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import comb as binomial
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from src.engines.interval_posets import IntervalPoset
from src.engines.trees_paths import (
    EMPTY_TREE,
    BinaryTree,
    DyckPath,
    check_letters,
    dyck_to_tree,
    final_forest,
    last_touch,
    step_heights,
    switch_with_primitive,
    tamari_covers,
    tree_to_dyck,
)
from src.errors import (
    ArityMismatch,
    BadStepCounts,
    NotMBinary,
    NotMDyck,
    ParseError,
    PrefixViolation,
)


@dataclass(frozen=True)
class MBallotPath:
    word: str
    m: int

    @property
    def n(self) -> int:
        return self.word.count("1")

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class MAryTree:
    children: Optional[Tuple["MAryTree", ...]] = None

    @property
    def is_empty(self) -> bool:
        return self.children is None

    @cached_property
    def size(self) -> int:
        if self.children is None:
            return 0
        return 1 + sum(child.size for child in self.children)


EMPTY_MARY = MAryTree()


# ---------------------------------------------------------------------------
# Paths


def ballot_validate(word: str, m: int) -> MBallotPath:
    word = check_letters(word)
    verticals = word.count("1")
    horizontals = len(word) - verticals
    for position, height in enumerate(step_heights(word, m), start=1):
        if height < 0:
            raise PrefixViolation(position)
    if horizontals != m * verticals:
        raise BadStepCounts(verticals, horizontals, m)
    return MBallotPath(word, m)


def ballot_to_mdyck(path: MBallotPath) -> DyckPath:
    return DyckPath(path.word.replace("1", "1" * path.m))


def _up_runs(word: str) -> List[int]:
    return [len(run) for run in word.split("0") if run]


def is_m_dyck(path: DyckPath, m: int) -> bool:
    return all(run % m == 0 for run in _up_runs(path.word))


def mdyck_to_ballot(path: DyckPath, m: int) -> MBallotPath:
    if not is_m_dyck(path, m):
        raise NotMDyck(path.word, m)
    return MBallotPath(path.word.replace("1" * m, "1"), m)


def touch_points(path: MBallotPath) -> int:
    return sum(1 for height in step_heights(path.word, path.m) if height == 0)


def ballot_rotate(path: MBallotPath, index: int) -> MBallotPath:
    """Switch the horizontal step at index with the primitive factor following it."""
    return MBallotPath(switch_with_primitive(path.word, index, up_weight=path.m), path.m)


# ---------------------------------------------------------------------------
# m-binary trees


def comb(n: int, m: int) -> BinaryTree:
    return dyck_to_tree(DyckPath(("1" * m + "0" * m) * n))


def _root_chains(n: int, m: int) -> Iterator[Tuple[int, int]]:
    for i in range(1, n + 1):
        for t in range(m - 1):
            yield i * m - t, i * m - t - 1


def is_m_binary(tree: BinaryTree, m: int) -> bool:
    if tree.size % m:
        return False
    dec = final_forest(tree)
    return all(pair in dec for pair in _root_chains(tree.size // m, m))


def is_m_interval_poset(poset: IntervalPoset, m: int) -> bool:
    if poset.size % m:
        return False
    return all(pair in poset.relations for pair in _root_chains(poset.size // m, m))


def _graft_leftmost(tree: BinaryTree, graft: BinaryTree) -> BinaryTree:
    if tree.is_empty:
        return graft
    return BinaryTree.node(_graft_leftmost(tree.left, graft), tree.right)


def _detach_leftmost(tree: BinaryTree) -> Tuple[BinaryTree, BinaryTree]:
    """Split off the subtree rooted at the first node in in-order."""
    if tree.left.is_empty:
        return EMPTY_TREE, tree
    rest, detached = _detach_leftmost(tree.left)
    return BinaryTree.node(rest, tree.right), detached


def m_binary_components(tree: BinaryTree, m: int) -> Tuple[BinaryTree, List[BinaryTree]]:
    """(T_L, [T_R1, ..., T_Rm]) of a non-empty m-binary tree."""
    if tree.is_empty or not is_m_binary(tree, m):
        raise NotMBinary(m)
    parts = []
    rest = tree.right
    for _ in range(m - 1):
        part, grafted = _detach_leftmost(rest)
        parts.append(part)
        rest = grafted.right
    parts.append(rest)
    return tree.left, parts


def m_binary_assemble(left: BinaryTree, parts: Sequence[BinaryTree], m: int) -> BinaryTree:
    if len(parts) != m:
        raise ArityMismatch(m, len(parts))
    for part in [left, *parts]:
        if not is_m_binary(part, m):
            raise NotMBinary(m)
    right = parts[-1]
    for part in reversed(parts[:-1]):
        right = _graft_leftmost(part, BinaryTree.node(EMPTY_TREE, right))
    return BinaryTree.node(left, right)


def m_binary_to_mary(tree: BinaryTree, m: int) -> MAryTree:
    if tree.is_empty:
        return EMPTY_MARY
    left, parts = m_binary_components(tree, m)
    return MAryTree(tuple(m_binary_to_mary(child, m) for child in [left, *parts]))


def _check_arity(tree: MAryTree, m: int) -> None:
    if tree.children is not None and len(tree.children) != m + 1:
        raise ArityMismatch(m + 1, len(tree.children))


def mary_to_m_binary(tree: MAryTree, m: int) -> BinaryTree:
    _check_arity(tree, m)
    if tree.is_empty:
        return EMPTY_TREE
    left, *parts = [mary_to_m_binary(child, m) for child in tree.children]
    return m_binary_assemble(left, parts, m)


def _mary_word(tree: MAryTree, m: int) -> str:
    _check_arity(tree, m)
    if tree.is_empty:
        return ""
    left, *parts = [_mary_word(child, m) for child in tree.children]
    return left + "1" + "0".join(reversed(parts)) + "0"


def mary_to_ballot(tree: MAryTree, m: int) -> MBallotPath:
    """W = W_L 1 W_Rm 0 W_R(m-1) 0 ... 0 W_R1 0."""
    return MBallotPath(_mary_word(tree, m), m)


def _word_to_mary(word: str, m: int) -> MAryTree:
    if not word:
        return EMPTY_MARY
    cut = last_touch(word, m)
    left = word[:cut]
    parts = []
    position = cut + 1
    height = m
    for level in range(m, 0, -1):
        start = position
        while not (word[position] == "0" and height == level):
            height += m if word[position] == "1" else -1
            position += 1
        parts.append(word[start:position])
        height -= 1
        position += 1
    children = [_word_to_mary(left, m)] + [_word_to_mary(part, m) for part in reversed(parts)]
    return MAryTree(tuple(children))


def ballot_to_mary(path: MBallotPath, m: int) -> MAryTree:
    if path.m != m:
        raise ParseError(f"path has m={path.m}, expected {m}")
    return _word_to_mary(path.word, m)


def m_tamari_covers(tree: BinaryTree, m: int) -> Set[BinaryTree]:
    """Upper covers inside the m-Tamari lattice (the ideal is closed upward)."""
    if not is_m_binary(tree, m):
        raise NotMBinary(m)
    return tamari_covers(tree)


def m_catalan(n: int, m: int) -> int:
    return binomial((m + 1) * n, n) // (m * n + 1)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of total into `parts` non-negative parts, lexicographic."""
    for head in product(range(total + 1), repeat=parts - 1):
        if sum(head) <= total:
            yield head + (total - sum(head),)


@lru_cache(maxsize=64)
def _m_binary_of_size(n: int, m: int) -> Tuple[BinaryTree, ...]:
    if n == 0:
        return (EMPTY_TREE,)
    trees = []
    for sizes in compositions(n - 1, m + 1):
        pools = [_m_binary_of_size(size, m) for size in sizes]
        for left, *parts in product(*pools):
            trees.append(m_binary_assemble(left, parts, m))
    return tuple(trees)


def m_binary_trees(n: int, m: int) -> Iterator[BinaryTree]:
    """Every m-binary tree with n*m nodes once."""
    return iter(_m_binary_of_size(n, m))


def ballot_paths(n: int, m: int) -> Iterator[MBallotPath]:
    for tree in m_binary_trees(n, m):
        yield mdyck_to_ballot(tree_to_dyck(tree), m)
