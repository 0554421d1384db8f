"""
Tamari Engine - Error Hierarchy

Every failure raised by the engines derives from TamariError so that the
service layer can turn it into a {"success": False, ...} result and the
HTTP layer into a 400 response.
"""

from typing import Optional, Tuple


class TamariError(ValueError):
    """Base class for all domain errors."""


# Paths and words
class ParseError(TamariError):
    pass


class UnbalancedWord(TamariError):
    def __init__(self, ups: int, downs: int):
        self.ups = ups
        self.downs = downs
        super().__init__(f"unbalanced word: {ups} up steps for {downs} down steps")


class PrefixViolation(TamariError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"prefix of length {position} dips below the line")


class BadStepCounts(TamariError):
    def __init__(self, verticals: int, horizontals: int, m: int):
        self.verticals = verticals
        self.horizontals = horizontals
        self.m = m
        super().__init__(
            f"{verticals} vertical and {horizontals} horizontal steps do not fit m={m}"
        )


class NotMDyck(TamariError):
    def __init__(self, word: str, m: int):
        self.word = word
        self.m = m
        super().__init__(f"'{word}' is not a {m}-Dyck path")


class NotADownStep(TamariError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"step {index} is not a down step")


class NoFollowingPrimitive(TamariError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"no primitive factor follows the down step at {index}")


# Trees
class EmptyTree(TamariError):
    def __init__(self):
        super().__init__("operation needs a non-empty tree")


class InvalidLabel(TamariError):
    def __init__(self, label: int, size: int):
        self.label = label
        self.size = size
        super().__init__(f"label {label} is outside 1..{size}")


class NoLeftChild(TamariError):
    def __init__(self, label: int):
        self.label = label
        super().__init__(f"node {label} has no left child")


class NoRightChild(TamariError):
    def __init__(self, label: int):
        self.label = label
        super().__init__(f"node {label} has no right child")


class NotAForest(TamariError):
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"relations are not the {kind} forest of a binary tree")


class NotMBinary(TamariError):
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"tree is not {m}-binary")


class ArityMismatch(TamariError):
    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected} subtrees, found {found}")


# Posets
class InvalidRelation(TamariError):
    def __init__(self, pair: Tuple[int, int], reason: str):
        self.pair = pair
        super().__init__(f"invalid relation {pair}: {reason}")


class CycleDetected(TamariError):
    def __init__(self):
        super().__init__("relations contain a cycle")


class AxiomViolated(TamariError):
    kind = "interval-poset"

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"{self.kind} axiom violated on ({a}, {b}, {c})")


class IncreasingAxiomViolated(AxiomViolated):
    kind = "increasing"


class DecreasingAxiomViolated(AxiomViolated):
    kind = "decreasing"


class NotComparable(TamariError):
    def __init__(self):
        super().__init__("trees are not comparable in the Tamari order")


class SizeMismatch(TamariError):
    def __init__(self, left: int, right: int):
        self.sizes = (left, right)
        super().__init__(f"size mismatch: {left} != {right}")


class EmptyPoset(TamariError):
    def __init__(self):
        super().__init__("operation needs a non-empty interval-poset")


class EmptyOperand(TamariError):
    def __init__(self, side: str):
        self.side = side
        super().__init__(f"{side} operand must be non-empty")


class NotMIntervalPoset(TamariError):
    def __init__(self, index: Optional[int], m: int):
        self.index = index
        self.m = m
        where = "" if index is None else f" (operand {index})"
        super().__init__(f"not a {m}-interval-poset{where}")


# Polynomials and enumeration
class EmptyList(TamariError):
    def __init__(self):
        super().__init__("operator needs at least one argument polynomial")


class SizeNotDivisible(TamariError):
    def __init__(self, size: int, m: int):
        self.size = size
        self.m = m
        super().__init__(f"size {size} is not divisible by m={m}")


class ScaleGuard(TamariError):
    def __init__(self, n: int, m: int, catalan: int, limit: int, what: Optional[str] = None):
        self.n = n
        self.m = m
        self.catalan = catalan
        self.limit = limit
        what = what or f"Catalan({n * m})"
        super().__init__(f"{what} = {catalan} exceeds the desk-scale limit {limit}; use force")
