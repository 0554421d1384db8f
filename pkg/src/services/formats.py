"""
Parsing and serialisation of lattice objects.

Dyck and ballot words are '1'/'0' strings, trees are JSON nested pairs
(null or [left, right]) or bracket strings ("[[., .], .]"), (m+1)-ary
trees are null or [child_0, ..., child_m], interval-posets are
{"size": n, "relations": [[a, b], ...]}.
"""

import json
from enum import Enum
from typing import Any, Iterable, List, Optional, Tuple

from src.engines.interval_posets import IntervalPoset, hasse_edges
from src.engines.m_tamari import (
    EMPTY_MARY,
    MAryTree,
    ballot_to_mdyck,
    ballot_validate,
    m_binary_to_mary,
    mary_to_m_binary,
    mdyck_to_ballot,
)
from src.engines.trees_paths import (
    EMPTY_TREE,
    BinaryTree,
    dyck_to_tree,
    dyck_validate,
    tree_to_dyck,
)
from src.errors import ParseError


class Format(Enum):
    DYCK = "dyck"
    TREE_JSON = "tree-json"
    BRACKET = "bracket"
    BALLOT = "ballot"
    MARY = "mary"


M_FORMATS = {Format.BALLOT, Format.MARY}
COMPACT = (",", ":")


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")


# ---------------------------------------------------------------------------
# Binary trees


def tree_to_json(tree: BinaryTree) -> Optional[list]:
    if tree.is_empty:
        return None
    return [tree_to_json(tree.left), tree_to_json(tree.right)]


def tree_from_json(data: Any) -> BinaryTree:
    if data is None:
        return EMPTY_TREE
    if isinstance(data, list) and len(data) == 2:
        return BinaryTree.node(tree_from_json(data[0]), tree_from_json(data[1]))
    raise ParseError(f"expected null or [left, right], got {data!r}")


def tree_to_bracket(tree: BinaryTree) -> str:
    if tree.is_empty:
        return "."
    return f"[{tree_to_bracket(tree.left)}, {tree_to_bracket(tree.right)}]"


def tree_from_bracket(text: str) -> BinaryTree:
    compact = "".join(text.split())
    tree, position = _parse_bracket(compact, 0)
    if position != len(compact):
        raise ParseError(f"trailing characters after position {position} in '{text}'")
    return tree


def _parse_bracket(text: str, position: int):
    if position >= len(text):
        raise ParseError("unexpected end of bracket string")
    if text[position] == ".":
        return EMPTY_TREE, position + 1
    if text[position] != "[":
        raise ParseError(f"unexpected '{text[position]}' at position {position}")
    left, position = _parse_bracket(text, position + 1)
    if position >= len(text) or text[position] != ",":
        raise ParseError(f"expected ',' at position {position}")
    right, position = _parse_bracket(text, position + 1)
    if position >= len(text) or text[position] != "]":
        raise ParseError(f"expected ']' at position {position}")
    return BinaryTree.node(left, right), position + 1


# ---------------------------------------------------------------------------
# (m+1)-ary trees


def mary_to_json(tree: MAryTree) -> Optional[list]:
    if tree.is_empty:
        return None
    return [mary_to_json(child) for child in tree.children]


def mary_from_json(data: Any) -> MAryTree:
    if data is None:
        return EMPTY_MARY
    if isinstance(data, list) and data:
        return MAryTree(tuple(mary_from_json(child) for child in data))
    raise ParseError(f"expected null or a list of subtrees, got {data!r}")


# ---------------------------------------------------------------------------
# Conversion between formats


def parse_tree(text: str, source: Format, m: Optional[int] = None) -> BinaryTree:
    """Read any supported format into the binary-tree form."""
    if source in M_FORMATS and m is None:
        raise ParseError(f"format '{source.value}' needs m")
    if source is Format.DYCK:
        return dyck_to_tree(dyck_validate(text))
    if source is Format.TREE_JSON:
        return tree_from_json(_load_json(text))
    if source is Format.BRACKET:
        return tree_from_bracket(text)
    if source is Format.BALLOT:
        return dyck_to_tree(ballot_to_mdyck(ballot_validate(text, m)))
    return mary_to_m_binary(mary_from_json(_load_json(text)), m)


def format_tree(tree: BinaryTree, target: Format, m: Optional[int] = None) -> str:
    if target in M_FORMATS and m is None:
        raise ParseError(f"format '{target.value}' needs m")
    if target is Format.DYCK:
        return tree_to_dyck(tree).word
    if target is Format.TREE_JSON:
        return json.dumps(tree_to_json(tree), separators=COMPACT)
    if target is Format.BRACKET:
        return tree_to_bracket(tree)
    if target is Format.BALLOT:
        return mdyck_to_ballot(tree_to_dyck(tree), m).word
    return json.dumps(mary_to_json(m_binary_to_mary(tree, m)), separators=COMPACT)


def convert(text: str, source: Format, target: Format, m: Optional[int] = None) -> str:
    return format_tree(parse_tree(text, source, m), target, m)


# ---------------------------------------------------------------------------
# Interval-posets


def _label_pairs(data: Any) -> List[Tuple[int, int]]:
    if not isinstance(data, list):
        raise ParseError(f"expected a list of relations, got {data!r}")
    pairs = []
    for item in data:
        if not (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(label, int) and not isinstance(label, bool) for label in item)
        ):
            raise ParseError(f"relation {item!r} is not a pair of integer labels")
        pairs.append((item[0], item[1]))
    return pairs


def poset_from_json(text: str, size: Optional[int] = None) -> IntervalPoset:
    """Accept either {"size", "relations"} or a bare relation list plus size."""
    data = _load_json(text)
    if isinstance(data, list):
        pairs = _label_pairs(data)
        if size is None:
            size = max((max(pair) for pair in pairs), default=0)
        data = {"size": size, "relations": data}
    if not isinstance(data, dict):
        raise ParseError("expected an object or a relation list")
    _label_pairs(data.get("relations", []))
    if size is not None:
        data = {**data, "size": size}
    return IntervalPoset.from_dict(data)


def poset_to_json(poset: IntervalPoset) -> str:
    return json.dumps(poset.to_dict())


# ---------------------------------------------------------------------------
# DOT


DOT_TEMPLATE = """digraph %s {
  rankdir = "BT" ;
  node [fontname="Helvetica", fontsize=10, shape=circle] ;

  // The nodes
  %s

  // The edges
  %s
}
"""

EDGE_COLORS = {"increasing": "blue", "decreasing": "red"}


def interval_to_dot(poset: IntervalPoset) -> str:
    """Hasse edges of both forests; increasing in blue, decreasing in red."""
    nodes = ['%d [label="%d"] ;' % (label, label) for label in range(1, poset.size + 1)]
    increasing, decreasing = hasse_edges(poset)
    edges = []
    for kind, pairs in (("increasing", increasing), ("decreasing", decreasing)):
        edges.extend(
            '%d -> %d [kind="%s", color="%s"] ;' % (a, b, kind, EDGE_COLORS[kind])
            for a, b in pairs
        )
    return DOT_TEMPLATE % ("interval", "\n  ".join(nodes), "\n  ".join(edges))


def lattice_to_dot(words: Iterable[str], covers: Iterable[tuple]) -> str:
    """Cover graph with nodes named by their Dyck (or ballot) words."""
    nodes = ['"%s" ;' % word for word in words]
    edges = ['"%s" -> "%s" ;' % (low, high) for low, high in covers]
    return DOT_TEMPLATE % ("lattice", "\n  ".join(nodes), "\n  ".join(edges))
