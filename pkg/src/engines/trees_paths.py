"""
Binary trees, Dyck paths and the bijection between them.

Trees are immutable values. Nodes carry no labels: the binary search tree
labelling (in-order index 1..n) is recomputed whenever it is needed.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.engines.relations import Relation, RelationSet, to_digraph
from src.errors import (
    EmptyTree,
    InvalidLabel,
    NoFollowingPrimitive,
    NoLeftChild,
    NoRightChild,
    NotADownStep,
    NotAForest,
    ParseError,
    PrefixViolation,
    UnbalancedWord,
)

Permutation = Tuple[int, ...]


class ForestKind(Enum):
    INITIAL = "initial"
    FINAL = "final"


@dataclass(frozen=True)
class BinaryTree:
    children: Optional[Tuple["BinaryTree", "BinaryTree"]] = None

    @classmethod
    def node(cls, left: "BinaryTree", right: "BinaryTree") -> "BinaryTree":
        return cls((left, right))

    @property
    def is_empty(self) -> bool:
        return self.children is None

    @property
    def left(self) -> "BinaryTree":
        if self.children is None:
            raise EmptyTree()
        return self.children[0]

    @property
    def right(self) -> "BinaryTree":
        if self.children is None:
            raise EmptyTree()
        return self.children[1]

    @cached_property
    def size(self) -> int:
        if self.children is None:
            return 0
        return 1 + self.children[0].size + self.children[1].size

    @cached_property
    def root_label(self) -> int:
        return self.left.size + 1

    def __repr__(self) -> str:
        return f"BinaryTree('{tree_to_dyck(self).word}')"


EMPTY_TREE = BinaryTree()
LEAF = BinaryTree.node(EMPTY_TREE, EMPTY_TREE)


@dataclass(frozen=True)
class DyckPath:
    word: str

    @property
    def size(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return self.word


# ---------------------------------------------------------------------------
# Words


def step_heights(word: str, up_weight: int = 1) -> List[int]:
    """Height after each step, up steps weighing up_weight."""
    heights = []
    height = 0
    for step in word:
        height += up_weight if step == "1" else -1
        heights.append(height)
    return heights


def check_letters(word: str) -> str:
    word = "".join(word.split())
    bad = set(word) - {"0", "1"}
    if bad:
        raise ParseError(f"unexpected characters {sorted(bad)} in step word")
    return word


def dyck_validate(word: str) -> DyckPath:
    word = check_letters(word)
    ups = word.count("1")
    downs = len(word) - ups
    for position, height in enumerate(step_heights(word), start=1):
        if height < 0:
            raise PrefixViolation(position)
    if ups != downs:
        raise UnbalancedWord(ups, downs)
    return DyckPath(word)


def last_touch(word: str, up_weight: int = 1) -> int:
    """Index of the last return to height 0 strictly before the end."""
    cut = 0
    for index, height in enumerate(step_heights(word, up_weight)[:-1], start=1):
        if height == 0:
            cut = index
    return cut


@lru_cache(maxsize=4096)
def _word_to_tree(word: str) -> BinaryTree:
    if not word:
        return EMPTY_TREE
    cut = last_touch(word)
    return BinaryTree.node(_word_to_tree(word[:cut]), _word_to_tree(word[cut + 1:-1]))


def dyck_to_tree(path: DyckPath) -> BinaryTree:
    return _word_to_tree(path.word)


def _tree_word(tree: BinaryTree) -> str:
    if tree.is_empty:
        return ""
    return _tree_word(tree.left) + "1" + _tree_word(tree.right) + "0"


def tree_to_dyck(tree: BinaryTree) -> DyckPath:
    return DyckPath(_tree_word(tree))


def switch_with_primitive(word: str, index: int, up_weight: int = 1) -> str:
    """Move the down step at index past the primitive factor that follows it."""
    if not 0 <= index < len(word) or word[index] != "0":
        raise NotADownStep(index)
    start = index + 1
    if start >= len(word) or word[start] != "1":
        raise NoFollowingPrimitive(index)
    height = 0
    end = start
    for end in range(start, len(word)):
        height += up_weight if word[end] == "1" else -1
        if height == 0:
            break
    return word[:index] + word[start:end + 1] + "0" + word[end + 1:]


def dyck_rotate(path: DyckPath, down_step_index: int) -> DyckPath:
    return DyckPath(switch_with_primitive(path.word, down_step_index))


# ---------------------------------------------------------------------------
# Rotations


def _check_label(tree: BinaryTree, label: int) -> None:
    if not 1 <= label <= tree.size:
        raise InvalidLabel(label, tree.size)


def _rewrite_at(tree: BinaryTree, label: int, rewrite) -> BinaryTree:
    here = tree.root_label
    if label < here:
        return BinaryTree.node(_rewrite_at(tree.left, label, rewrite), tree.right)
    if label > here:
        return BinaryTree.node(tree.left, _rewrite_at(tree.right, label - here, rewrite))
    return rewrite(tree)


def tree_right_rotate(tree: BinaryTree, node_label: int) -> BinaryTree:
    """y(x(A, B), C) -> x(A, y(B, C)) at the node labelled node_label."""
    _check_label(tree, node_label)

    def rotate(y: BinaryTree) -> BinaryTree:
        if y.left.is_empty:
            raise NoLeftChild(node_label)
        x = y.left
        return BinaryTree.node(x.left, BinaryTree.node(x.right, y.right))

    return _rewrite_at(tree, node_label, rotate)


def tree_left_rotate(tree: BinaryTree, node_label: int) -> BinaryTree:
    """x(A, y(B, C)) -> y(x(A, B), C) at the node labelled node_label."""
    _check_label(tree, node_label)

    def rotate(x: BinaryTree) -> BinaryTree:
        if x.right.is_empty:
            raise NoRightChild(node_label)
        y = x.right
        return BinaryTree.node(BinaryTree.node(x.left, y.left), y.right)

    return _rewrite_at(tree, node_label, rotate)


def tamari_covers(tree: BinaryTree) -> Set[BinaryTree]:
    return {
        tree_right_rotate(tree, label)
        for label, left, _ in labelled_nodes(tree)
        if left
    }


# ---------------------------------------------------------------------------
# Shapes


def left_comb(n: int) -> BinaryTree:
    tree = EMPTY_TREE
    for _ in range(n):
        tree = BinaryTree.node(tree, EMPTY_TREE)
    return tree


def right_comb(n: int) -> BinaryTree:
    tree = EMPTY_TREE
    for _ in range(n):
        tree = BinaryTree.node(EMPTY_TREE, tree)
    return tree


def mirror(tree: BinaryTree) -> BinaryTree:
    if tree.is_empty:
        return tree
    return BinaryTree.node(mirror(tree.right), mirror(tree.left))


def leftmost_branch_length(tree: BinaryTree) -> int:
    length = 0
    while not tree.is_empty:
        length += 1
        tree = tree.left
    return length


def rightmost_branch_length(tree: BinaryTree) -> int:
    return leftmost_branch_length(mirror(tree))


@lru_cache(maxsize=64)
def _trees_of_size(n: int) -> Tuple[BinaryTree, ...]:
    if n == 0:
        return (EMPTY_TREE,)
    return tuple(
        BinaryTree.node(left, right)
        for k in range(n)
        for left in _trees_of_size(k)
        for right in _trees_of_size(n - 1 - k)
    )


def binary_trees(n: int) -> Iterator[BinaryTree]:
    """Every tree of size n once, ordered by left-subtree size."""
    return iter(_trees_of_size(n))


# ---------------------------------------------------------------------------
# Binary search tree labelling and forests


def labelled_nodes(tree: BinaryTree, offset: int = 0) -> Iterator[Tuple[int, range, range]]:
    """Yield (label, left-subtree labels, right-subtree labels) in in-order."""
    if tree.is_empty:
        return
    label = offset + tree.left.size + 1
    yield from labelled_nodes(tree.left, offset)
    yield label, range(offset + 1, label), range(label + 1, label + tree.right.size + 1)
    yield from labelled_nodes(tree.right, label)


def initial_forest(tree: BinaryTree) -> RelationSet:
    return frozenset((a, c) for c, left, _ in labelled_nodes(tree) for a in left)


def final_forest(tree: BinaryTree) -> RelationSet:
    return frozenset((b, a) for a, _, right in labelled_nodes(tree) for b in right)


def forest_check(relations: RelationSet, kind: ForestKind) -> bool:
    relations = set(relations)
    for a, c in relations:
        if kind is ForestKind.INITIAL:
            if a >= c or any((b, c) not in relations for b in range(a + 1, c)):
                return False
        else:
            # (a, c) reads "a precedes c" with c the smaller label
            if a <= c or any((b, c) not in relations for b in range(c + 1, a)):
                return False
    return True


def forest_to_tree(
    relations: RelationSet, kind: ForestKind, size: Optional[int] = None
) -> BinaryTree:
    relations = frozenset(relations)
    if size is None:
        size = max((max(pair) for pair in relations), default=0)
    if not forest_check(relations, kind):
        raise NotAForest(kind.value)
    parents = {}
    for child, parent in relations:
        parents.setdefault(child, set()).add(parent)

    def build(lo: int, hi: int) -> BinaryTree:
        if lo > hi:
            return EMPTY_TREE
        roots = [
            label
            for label in range(lo, hi + 1)
            if not any(lo <= p <= hi for p in parents.get(label, ()))
        ]
        root = min(roots) if kind is ForestKind.INITIAL else max(roots)
        return BinaryTree.node(build(lo, root - 1), build(root + 1, hi))

    return build(1, size)


# ---------------------------------------------------------------------------
# Linear extensions


def _post_order(tree: BinaryTree, offset: int, right_first: bool) -> List[int]:
    if tree.is_empty:
        return []
    label = offset + tree.left.size + 1
    left = _post_order(tree.left, offset, right_first)
    right = _post_order(tree.right, label, right_first)
    return (right + left if right_first else left + right) + [label]


def min_linear_extension(tree: BinaryTree) -> Permutation:
    if tree.is_empty:
        raise EmptyTree()
    return tuple(_post_order(tree, 0, right_first=False))


def max_linear_extension(tree: BinaryTree) -> Permutation:
    if tree.is_empty:
        raise EmptyTree()
    return tuple(_post_order(tree, 0, right_first=True))


def tree_relations(tree: BinaryTree) -> RelationSet:
    """Descendant-precedes-ancestor relations of the binary search tree."""
    return initial_forest(tree) | final_forest(tree)


def extensions_of(size: int, relations: RelationSet) -> Set[Permutation]:
    graph = to_digraph(size, relations)
    return {tuple(order) for order in nx.all_topological_sorts(graph)}


def sylvester_class(tree: BinaryTree) -> Set[Permutation]:
    if tree.is_empty:
        raise EmptyTree()
    return extensions_of(tree.size, tree_relations(tree))


def coinversions(perm: Permutation) -> Set[Relation]:
    position = {value: index for index, value in enumerate(perm)}
    return {
        (a, b)
        for a in perm
        for b in perm
        if a < b and position[b] < position[a]
    }


def weak_leq(sigma: Permutation, mu: Permutation) -> bool:
    return coinversions(sigma) <= coinversions(mu)
