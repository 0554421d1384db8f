"""
Generators and counters for trees and interval-posets, plus brute-force
oracles used as ground truth.

Generators refuse inputs with Catalan(n*m) above the desk-scale limit
unless forced.
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import product
from math import comb as binomial
from math import factorial
from typing import Dict, Iterator, List, Tuple

from loguru import logger

from src.config import DEFAULT_MAX_BRUTE_FORCE, DEFAULT_MAX_CATALAN
from src.engines.composition import compose_B, m_compose
from src.engines.interval_posets import EMPTY_POSET, IntervalPoset, stats, tamari_leq
from src.engines.m_tamari import compositions, is_m_binary, m_binary_trees
from src.engines.polynomials import XYPoly
from src.engines.trees_paths import BinaryTree, binary_trees
from src.errors import ScaleGuard


def catalan(n: int) -> int:
    return binomial(2 * n, n) // (n + 1)


def ensure_desk_scale(n: int, m: int = 1, force: bool = False, limit: int = DEFAULT_MAX_CATALAN) -> None:
    size = catalan(n * m)
    if size > limit and not force:
        logger.debug("refusing n={} m={}: Catalan({}) = {}", n, m, n * m, size)
        raise ScaleGuard(n, m, size, limit)


def ensure_extension_scale(n: int, force: bool = False, limit: int = DEFAULT_MAX_CATALAN) -> None:
    """Linear extensions of a poset on n labels number up to n!."""
    size = factorial(n)
    if size > limit and not force:
        logger.debug("refusing linear extensions for n={}: {}! = {}", n, n, size)
        raise ScaleGuard(n, 1, size, limit, what=f"{n}!")


# ---------------------------------------------------------------------------
# Generators


def gen_binary_trees(n: int, force: bool = False) -> Iterator[BinaryTree]:
    ensure_desk_scale(n, force=force)
    return binary_trees(n)


def gen_m_binary_trees(n: int, m: int, force: bool = False) -> Iterator[BinaryTree]:
    ensure_desk_scale(n, m, force=force)
    return m_binary_trees(n, m)


def _posets_for_split(split: Tuple[int, ...], m: int) -> List[IntervalPoset]:
    pools = [_m_interval_posets(size, m) for size in split]
    terms: List[IntervalPoset] = []
    for left, *rights in product(*pools):
        if m == 1:
            terms.extend(compose_B(left, rights[0]))
        else:
            terms.extend(m_compose(left, rights))
    return terms


@lru_cache(maxsize=64)
def _m_interval_posets(n: int, m: int) -> Tuple[IntervalPoset, ...]:
    if n == 0:
        return (EMPTY_POSET,)
    posets: List[IntervalPoset] = []
    for split in compositions(n - 1, m + 1):
        posets.extend(_posets_for_split(split, m))
    logger.debug("generated {} interval-posets for n={} m={}", len(posets), n, m)
    return tuple(posets)


def gen_interval_posets(n: int, force: bool = False) -> Iterator[IntervalPoset]:
    """Recursive compose_B over every split k1 + 1 + k2 = n."""
    ensure_desk_scale(n, force=force)
    return iter(_m_interval_posets(n, 1))


def gen_m_interval_posets(n: int, m: int, force: bool = False) -> Iterator[IntervalPoset]:
    ensure_desk_scale(n, m, force=force)
    return iter(_m_interval_posets(n, m))


def count_interval_posets(n: int, m: int = 1, workers: int = 1, force: bool = False) -> int:
    """Count by size split; splits may run on a thread pool."""
    ensure_desk_scale(n, m, force=force)
    if n == 0:
        return 1
    splits = list(compositions(n - 1, m + 1))
    if workers <= 1:
        counts = [len(_posets_for_split(split, m)) for split in splits]
    else:
        # smaller sizes are cached before the pool starts
        for size in range(n):
            _m_interval_posets(size, m)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda split: len(_posets_for_split(split, m)), splits))
    return sum(counts)


# ---------------------------------------------------------------------------
# Oracles


def _trees(n: int, m: int) -> List[BinaryTree]:
    if m == 1:
        return list(binary_trees(n))
    return [tree for tree in binary_trees(n * m) if is_m_binary(tree, m)]


def _oracle_trees(n: int, m: int, force: bool, limit: int) -> List[BinaryTree]:
    ensure_desk_scale(n, m, force=force, limit=limit)
    return _trees(n, m)


def oracle_count_pairs(n: int, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE) -> int:
    trees = _oracle_trees(n, 1, force, limit)
    return sum(1 for lower in trees for upper in trees if tamari_leq(lower, upper))


def oracle_count_pairs_m(n: int, m: int, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE) -> int:
    trees = _oracle_trees(n, m, force, limit)
    return sum(1 for lower in trees for upper in trees if tamari_leq(lower, upper))


def oracle_smaller(tree: BinaryTree, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE) -> int:
    return sum(1 for other in _oracle_trees(tree.size, 1, force, limit) if tamari_leq(other, tree))


def oracle_greater(tree: BinaryTree, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE) -> int:
    return sum(1 for other in _oracle_trees(tree.size, 1, force, limit) if tamari_leq(tree, other))


def oracle_smaller_m(
    tree: BinaryTree, m: int, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE
) -> int:
    return sum(1 for other in _oracle_trees(tree.size // m, m, force, limit) if tamari_leq(other, tree))


def oracle_greater_m(
    tree: BinaryTree, m: int, force: bool = False, limit: int = DEFAULT_MAX_BRUTE_FORCE
) -> int:
    return sum(1 for other in _oracle_trees(tree.size // m, m, force, limit) if tamari_leq(tree, other))


# ---------------------------------------------------------------------------
# Refined counts


def _refined(posets: Iterator[IntervalPoset]) -> XYPoly:
    counts: Dict[Tuple[int, int, int], int] = {}
    for poset in posets:
        key = (stats(poset).trees, 0, 0)
        counts[key] = counts.get(key, 0) + 1
    return XYPoly.from_terms(counts)


def refined_count(n: int, force: bool = False) -> XYPoly:
    """x^k counts the intervals of size n with k trees."""
    return _refined(gen_interval_posets(n, force))


def refined_count_m(n: int, m: int, force: bool = False) -> XYPoly:
    return _refined(gen_m_interval_posets(n, m, force))
