"""
Interval-posets: labelled posets on 1..n encoding one interval of the
Tamari lattice.

The decreasing relations form the final forest of the lower tree, the
increasing relations the initial forest of the upper tree.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from src.engines import relations as rel
from src.engines.relations import Relation, RelationSet
from src.engines.trees_paths import (
    BinaryTree,
    EMPTY_TREE,
    ForestKind,
    Permutation,
    binary_trees,
    extensions_of,
    final_forest,
    forest_to_tree,
    initial_forest,
)
from src.errors import (
    AxiomViolated,
    CycleDetected,
    DecreasingAxiomViolated,
    EmptyPoset,
    IncreasingAxiomViolated,
    InvalidRelation,
    NotComparable,
    ParseError,
    SizeMismatch,
)


@dataclass(frozen=True)
class IntervalPoset:
    size: int
    relations: RelationSet = frozenset()

    @property
    def increasing(self) -> RelationSet:
        return rel.increasing(self.relations)

    @property
    def decreasing(self) -> RelationSet:
        return rel.decreasing(self.relations)

    def precedes(self, a: int, b: int) -> bool:
        return (a, b) in self.relations

    def sorted_relations(self) -> List[Relation]:
        return sorted(self.relations)

    def to_dict(self) -> Dict:
        return {"size": self.size, "relations": [list(pair) for pair in self.sorted_relations()]}

    @classmethod
    def from_dict(cls, data: Dict) -> "IntervalPoset":
        try:
            size = int(data["size"])
            pairs = [(int(a), int(b)) for a, b in data.get("relations", [])]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed interval-poset: {e}")
        if size < 0:
            raise ParseError(f"size must be non-negative, got {size}")
        return validate(size, pairs)

    def __repr__(self) -> str:
        return f"IntervalPoset({self.size}, {self.sorted_relations()})"


@dataclass(frozen=True)
class IntervalStats:
    size: int
    trees: int
    rises_b: int

    def to_dict(self) -> Dict:
        return {"size": self.size, "trees": self.trees, "rises_b": self.rises_b}


EMPTY_POSET = IntervalPoset(0)
UNIT = IntervalPoset(1)


def closed(size: int, relations: Iterable[Relation]) -> IntervalPoset:
    """Close the relations without checking the interval-poset axioms."""
    return IntervalPoset(size, rel.transitive_closure(size, relations))


def check_axioms(poset: IntervalPoset) -> None:
    relations = poset.relations
    for a, c in sorted(relations):
        if a < c:
            for b in range(a + 1, c):
                if (b, c) not in relations:
                    raise IncreasingAxiomViolated(a, b, c)
        else:
            for b in range(c + 1, a):
                if (b, c) not in relations:
                    raise DecreasingAxiomViolated(c, b, a)


def validate(size: int, relations: Iterable[Relation]) -> IntervalPoset:
    poset = closed(size, relations)
    check_axioms(poset)
    return poset


def is_valid(size: int, relations: Iterable[Relation]) -> bool:
    try:
        validate(size, relations)
    except (CycleDetected, AxiomViolated):
        return False
    return True


def whole_lattice(n: int) -> IntervalPoset:
    return IntervalPoset(n)


def from_tree_pair(lower: BinaryTree, upper: BinaryTree) -> IntervalPoset:
    if lower.size != upper.size:
        raise SizeMismatch(lower.size, upper.size)
    try:
        return validate(lower.size, final_forest(lower) | initial_forest(upper))
    except (CycleDetected, AxiomViolated):
        raise NotComparable()


def singleton(tree: BinaryTree) -> IntervalPoset:
    return from_tree_pair(tree, tree)


def lower_tree(poset: IntervalPoset) -> BinaryTree:
    if poset.size == 0:
        raise EmptyPoset()
    return forest_to_tree(poset.decreasing, ForestKind.FINAL, poset.size)


def upper_tree(poset: IntervalPoset) -> BinaryTree:
    if poset.size == 0:
        raise EmptyPoset()
    return forest_to_tree(poset.increasing, ForestKind.INITIAL, poset.size)


def tamari_leq(smaller: BinaryTree, bigger: BinaryTree) -> bool:
    try:
        from_tree_pair(smaller, bigger)
    except NotComparable:
        return False
    return True


def _same_size(first: IntervalPoset, second: IntervalPoset) -> None:
    if first.size != second.size:
        raise SizeMismatch(first.size, second.size)


def intersect(first: IntervalPoset, second: IntervalPoset) -> Optional[IntervalPoset]:
    """The intersection interval, or None when the intervals are disjoint."""
    _same_size(first, second)
    try:
        return validate(first.size, first.relations | second.relations)
    except (CycleDetected, AxiomViolated):
        return None


def interval_contains(outer: IntervalPoset, inner: IntervalPoset) -> bool:
    _same_size(outer, inner)
    return outer.relations <= inner.relations


def add_decreasing_relation(poset: IntervalPoset, pair: Relation) -> IntervalPoset:
    j, i = pair
    if j <= i:
        raise InvalidRelation(pair, "a decreasing relation needs j > i")
    return validate(poset.size, poset.relations | {pair})


def add_increasing_relation(poset: IntervalPoset, pair: Relation) -> IntervalPoset:
    i, j = pair
    if i >= j:
        raise InvalidRelation(pair, "an increasing relation needs i < j")
    return validate(poset.size, poset.relations | {pair})


def trees_in_interval(poset: IntervalPoset) -> Set[BinaryTree]:
    if poset.size == 0:
        return {EMPTY_TREE}
    lower, upper = lower_tree(poset), upper_tree(poset)
    return {
        tree
        for tree in binary_trees(poset.size)
        if tamari_leq(lower, tree) and tamari_leq(tree, upper)
    }


def linear_extensions(poset: IntervalPoset) -> Set[Permutation]:
    return extensions_of(poset.size, poset.relations)


def stats(poset: IntervalPoset) -> IntervalStats:
    forest = rel.to_digraph(poset.size, poset.decreasing)
    trees = nx.number_weakly_connected_components(forest) if poset.size else 0
    rises = {smaller for bigger, smaller in poset.decreasing}
    return IntervalStats(size=poset.size, trees=trees, rises_b=len(rises))


def decreasing_roots(poset: IntervalPoset) -> List[int]:
    """Labels with no decreasing relation going out, in increasing order."""
    has_parent = {bigger for bigger, _ in poset.decreasing}
    return [label for label in range(1, poset.size + 1) if label not in has_parent]


def shifted(poset: IntervalPoset, offset: int) -> RelationSet:
    return rel.shift(poset.relations, offset)


def restrict(poset: IntervalPoset, lo: int, hi: int) -> IntervalPoset:
    if lo > hi:
        return EMPTY_POSET
    return IntervalPoset(hi - lo + 1, rel.restrict(poset.relations, lo, hi))


def hasse_edges(poset: IntervalPoset) -> Tuple[List[Relation], List[Relation]]:
    """Hasse diagrams of the increasing and of the decreasing subgraph."""
    return (
        rel.hasse_diagram(poset.size, poset.increasing),
        rel.hasse_diagram(poset.size, poset.decreasing),
    )
