"""
Products and compositions of interval-posets.

compose_B(I1, I2) = I1 <| u |> I2 builds every interval-poset whose
decomposition is (I1, I2); m_compose is the (m+1)-ary analogue for
m-interval-posets. Both have a unique inverse.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from src.engines.interval_posets import (
    EMPTY_POSET,
    UNIT,
    IntervalPoset,
    closed,
    decreasing_roots,
    restrict,
    shifted,
)
from src.engines.m_tamari import is_m_interval_poset
from src.errors import EmptyOperand, EmptyPoset, NotMIntervalPoset


@dataclass(frozen=True)
class IntervalSum:
    terms: Tuple[IntervalPoset, ...]

    def __post_init__(self):
        assert len(set(self.terms)) == len(self.terms), "duplicate terms in sum"
        assert len({term.size for term in self.terms}) <= 1, "terms of different sizes"

    def __iter__(self) -> Iterator[IntervalPoset]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, index: int) -> IntervalPoset:
        return self.terms[index]


def left_product(first: IntervalPoset, second: IntervalPoset) -> IntervalPoset:
    """Shifted concatenation with every vertex of first preceding the minimum of second."""
    if second.size == 0:
        return first
    pivot = first.size + 1
    relations = set(first.relations) | shifted(second, first.size)
    relations.update((label, pivot) for label in range(1, first.size + 1))
    return closed(first.size + second.size, relations)


def _right_terms(first: IntervalPoset, second: IntervalPoset, start: int) -> IntervalSum:
    omega = first.size
    size = first.size + second.size
    base = set(first.relations) | shifted(second, first.size)
    roots = [root + first.size for root in decreasing_roots(second)]
    terms = []
    for count in range(start, len(roots) + 1):
        extra = {(root, omega) for root in roots[:count]}
        terms.append(closed(size, base | extra))
    return IntervalSum(tuple(terms))


def right_product(first: IntervalPoset, second: IntervalPoset) -> IntervalSum:
    """Sum over i of the concatenation with the first i decreasing roots of second below max(first)."""
    if first.size == 0:
        raise EmptyOperand("left")
    return _right_terms(first, second, start=0)


def right_product_x(first: IntervalPoset, second: IntervalPoset) -> IntervalSum:
    """right_product without the term that adds no relation."""
    if first.size == 0:
        raise EmptyOperand("left")
    if second.size == 0:
        raise EmptyOperand("right")
    return _right_terms(first, second, start=1)


def compose_B(first: IntervalPoset, second: IntervalPoset) -> IntervalSum:
    return right_product(left_product(first, UNIT), second)


def pivot_label(poset: IntervalPoset) -> int:
    """Largest k such that every label below k precedes k."""
    if poset.size == 0:
        raise EmptyPoset()
    return max(
        k
        for k in range(1, poset.size + 1)
        if all((i, k) in poset.relations for i in range(1, k))
    )


def decompose_B(poset: IntervalPoset) -> Tuple[IntervalPoset, IntervalPoset]:
    k = pivot_label(poset)
    return restrict(poset, 1, k - 1), restrict(poset, k + 1, poset.size)


def _check_m_operands(left: IntervalPoset, rights: Sequence[IntervalPoset], m: int) -> None:
    for index, operand in enumerate([left, *rights]):
        if operand.size and not is_m_interval_poset(operand, m):
            raise NotMIntervalPoset(index, m)


def _right_part(rights: Sequence[IntervalPoset]) -> List[IntervalPoset]:
    """Terms of u |>x (... ((u |> IR_m) <| IR_{m-1}) ...) <| IR_1 without the outer u |>x."""
    if len(rights) == 1:
        return list(right_product(UNIT, rights[0]))
    terms = []
    for inner in _right_part(rights[1:]):
        terms.extend(right_product_x(UNIT, left_product(inner, rights[0])))
    return terms


def m_compose(left: IntervalPoset, rights: Sequence[IntervalPoset]) -> IntervalSum:
    """m-composition of left with rights = [IR_1, ..., IR_m], m = len(rights).

    Labels are laid out as left, the m root vertices, IR_m, ..., IR_1.
    Terms come in generation order.
    """
    m = len(rights)
    if m == 0:
        raise EmptyOperand("right")
    _check_m_operands(left, rights, m)
    terms = tuple(left_product(left, term) for term in _right_part(rights))
    logger.debug("m_compose with m={} produced {} terms", m, len(terms))
    return IntervalSum(terms)


def _block_start(poset: IntervalPoset, k: int, j: int, m: int) -> Optional[int]:
    if j == m:
        first = k + m
        if first <= poset.size and (k + m - 1, first) not in poset.relations:
            return first
        return None
    for label in range(k + m, poset.size + 1):
        if (k + j, label) in poset.relations and (k + j - 1, label) not in poset.relations:
            return label
    return None


def m_decompose(poset: IntervalPoset, m: int) -> Tuple[IntervalPoset, List[IntervalPoset]]:
    """Unique (IL, [IR_1, ..., IR_m]) with poset among the terms of m_compose."""
    if poset.size == 0:
        raise EmptyPoset()
    if not is_m_interval_poset(poset, m):
        raise NotMIntervalPoset(None, m)
    k = pivot_label(poset)
    starts = {j: _block_start(poset, k, j, m) for j in range(1, m + 1)}
    rights = []
    for j in range(1, m + 1):
        start = starts[j]
        if start is None:
            rights.append(EMPTY_POSET)
            continue
        later = [starts[i] for i in range(1, j) if starts[i] is not None]
        end = min(later) - 1 if later else poset.size
        rights.append(restrict(poset, start, end))
    return restrict(poset, 1, k - 1), rights
