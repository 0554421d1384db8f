"""
Relation sets on the labels 1..n.

A relation (a, b) reads "a precedes b". Sets are stored transitively closed
as frozensets of pairs; graph work is delegated to networkx.
"""

from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx

from src.errors import CycleDetected, InvalidRelation

Relation = Tuple[int, int]
RelationSet = FrozenSet[Relation]


def to_digraph(size: int, relations: Iterable[Relation]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, size + 1))
    graph.add_edges_from(relations)
    return graph


def check_pairs(size: int, relations: Iterable[Relation]) -> None:
    for a, b in relations:
        if a == b:
            raise InvalidRelation((a, b), "a label cannot precede itself")
        if not (1 <= a <= size and 1 <= b <= size):
            raise InvalidRelation((a, b), f"labels must lie in 1..{size}")


def transitive_closure(size: int, relations: Iterable[Relation]) -> RelationSet:
    """Closed form of the relations; raises CycleDetected on a cycle."""
    relations = [tuple(pair) for pair in relations]
    check_pairs(size, relations)
    graph = to_digraph(size, relations)
    if not nx.is_directed_acyclic_graph(graph):
        raise CycleDetected()
    closed = nx.transitive_closure_dag(graph)
    return frozenset(closed.edges())


def hasse_diagram(size: int, relations: Iterable[Relation]) -> List[Relation]:
    graph = to_digraph(size, relations)
    return sorted(nx.transitive_reduction(graph).edges())


def increasing(relations: Iterable[Relation]) -> RelationSet:
    return frozenset((a, b) for a, b in relations if a < b)


def decreasing(relations: Iterable[Relation]) -> RelationSet:
    return frozenset((a, b) for a, b in relations if a > b)


def shift(relations: Iterable[Relation], offset: int) -> RelationSet:
    return frozenset((a + offset, b + offset) for a, b in relations)


def restrict(relations: Iterable[Relation], lo: int, hi: int) -> RelationSet:
    """Relations inside [lo, hi], relabelled to start at 1."""
    return frozenset(
        (a - lo + 1, b - lo + 1)
        for a, b in relations
        if lo <= a <= hi and lo <= b <= hi
    )
