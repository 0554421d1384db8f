"""
Tamari Service - facade shared by the CLI and the HTTP API

Every method returns a plain dictionary: {"success": True, ...} with the
requested data, or {"success": False, "error": ..., "error_type": ...}
when the engines reject the input.
"""

from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from src.config import DEFAULT_MAX_BRUTE_FORCE, DEFAULT_MAX_CATALAN
from src.engines.composition import compose_B, decompose_B, m_compose, m_decompose
from src.engines.enumeration import (
    count_interval_posets,
    ensure_desk_scale,
    ensure_extension_scale,
    gen_binary_trees,
    gen_m_binary_trees,
    oracle_count_pairs,
    oracle_count_pairs_m,
    refined_count,
    refined_count_m,
)
from src.engines.interval_posets import (
    IntervalPoset,
    linear_extensions,
    lower_tree,
    stats,
    trees_in_interval,
    upper_tree,
)
from src.engines.m_tamari import mdyck_to_ballot, m_tamari_covers
from src.engines.polynomials import (
    XYPoly,
    formula_In,
    formula_Inm,
    m_tamari_poly,
    phi_m_series,
    phi_series,
    tamari_poly,
    tamari_poly_b,
    tamari_poly_mirror,
    weight_PI,
    weight_PIm,
)
from src.engines.trees_paths import tamari_covers, tree_to_dyck
from src.errors import ArityMismatch, ParseError, TamariError
from src.services import formats
from src.services.formats import Format

INTERVAL_VIEWS = ("lower", "upper", "contents", "linext", "dot", "stats")


def _failure(error: TamariError) -> Dict[str, Any]:
    logger.debug("{}: {}", type(error).__name__, error)
    return {"success": False, "error": str(error), "error_type": type(error).__name__}


def _check_arguments(n: Optional[int] = None, m: Optional[int] = None) -> None:
    if n is not None and n < 0:
        raise ParseError(f"n must be non-negative, got {n}")
    if m is not None and m < 1:
        raise ParseError(f"m must be at least 1, got {m}")


def _poly_payload(poly: XYPoly, y_first: bool = False) -> Dict[str, Any]:
    return {"text": poly.render(y_first), "terms": poly.to_json()}


class TamariService:
    """
    Entry point for conversions, counts, polynomials and interval-poset
    operations. Holds the desk-scale limits used by the enumerations and the
    brute-force checks.
    """

    def __init__(
        self,
        max_catalan: int = DEFAULT_MAX_CATALAN,
        workers: int = 1,
        max_brute_force: int = DEFAULT_MAX_BRUTE_FORCE,
    ):
        self.max_catalan = max_catalan
        self.max_brute_force = max_brute_force
        self.workers = workers

    # -- conversions -------------------------------------------------------

    def convert(self, value: str, source: str, target: str, m: Optional[int] = None) -> Dict[str, Any]:
        try:
            _check_arguments(m=m)
            names = [fmt.value for fmt in Format]
            if source not in names or target not in names:
                raise ParseError(f"formats must be among {names}")
            result = formats.convert(value, Format(source), Format(target), m)
            return {"success": True, "source": source, "target": target, "value": result}
        except TamariError as e:
            return _failure(e)

    # -- enumeration -------------------------------------------------------

    def count(
        self,
        n: int,
        m: int = 1,
        refined: bool = False,
        oracle: bool = False,
        force: bool = False,
    ) -> Dict[str, Any]:
        """
        Count intervals of size n (m-intervals of size n*m) by generation and
        compare with the closed formula and, on request, the pairwise oracle.
        """
        try:
            _check_arguments(n, m)
            ensure_desk_scale(n, m, force=force, limit=self.max_catalan)
            generated = count_interval_posets(n, m, workers=self.workers, force=True)
            formula = formula_In(n) if m == 1 else formula_Inm(n, m)
            result: Dict[str, Any] = {
                "success": True,
                "n": n,
                "m": m,
                "generated": generated,
                "formula": formula,
            }
            checks = [generated == formula]
            if oracle:
                if m == 1:
                    result["oracle"] = oracle_count_pairs(n, force=force, limit=self.max_brute_force)
                else:
                    result["oracle"] = oracle_count_pairs_m(n, m, force=force, limit=self.max_brute_force)
                checks.append(result["oracle"] == formula)
            if refined:
                poly = refined_count(n, force=True) if m == 1 else refined_count_m(n, m, force=True)
                series = phi_series(n) if m == 1 else phi_m_series(n, m)
                result["refined"] = _poly_payload(poly)
                checks.append(poly == series.y_slice(n))
            result["match"] = all(checks)
            logger.info("count n={} m={}: generated={} formula={}", n, m, generated, formula)
            return result
        except TamariError as e:
            return _failure(e)

    # -- polynomials -------------------------------------------------------

    def poly(
        self,
        tree: str,
        m: Optional[int] = None,
        mirror: bool = False,
        b: bool = False,
        at_one: bool = False,
    ) -> Dict[str, Any]:
        try:
            _check_arguments(m=m)
            binary = formats.parse_tree(tree, Format.DYCK)
            if m is not None:
                poly = m_tamari_poly(binary, m)
                kind = f"m-tamari (m={m})"
            elif mirror:
                poly = tamari_poly_mirror(binary)
                kind = "mirror"
            elif b:
                poly = tamari_poly_b(binary)
                kind = "b-refined"
            else:
                poly = tamari_poly(binary)
                kind = "tamari"
            result = {"success": True, "kind": kind, "polynomial": _poly_payload(poly)}
            if at_one:
                result["value_at_one"] = poly.value_at_one()
            return result
        except TamariError as e:
            return _failure(e)

    # -- interval-posets ---------------------------------------------------

    def interval(
        self,
        relations: str,
        view: str = "contents",
        size: Optional[int] = None,
        force: bool = False,
    ) -> Dict[str, Any]:
        try:
            poset = formats.poset_from_json(relations, size)
            if view == "contents":
                ensure_desk_scale(poset.size, force=force, limit=self.max_brute_force)
            elif view == "linext":
                ensure_extension_scale(poset.size, force=force, limit=self.max_catalan)
            result: Dict[str, Any] = {"success": True, "view": view, "poset": poset.to_dict()}
            if view == "lower":
                result["value"] = tree_to_dyck(lower_tree(poset)).word
            elif view == "upper":
                result["value"] = tree_to_dyck(upper_tree(poset)).word
            elif view == "contents":
                result["value"] = sorted(
                    (tree_to_dyck(tree).word for tree in trees_in_interval(poset)), reverse=True
                )
            elif view == "linext":
                result["value"] = [list(perm) for perm in sorted(linear_extensions(poset))]
            elif view == "dot":
                result["value"] = formats.interval_to_dot(poset)
            elif view == "stats":
                result["value"] = stats(poset).to_dict()
            else:
                raise ParseError(f"unknown view '{view}', expected one of {INTERVAL_VIEWS}")
            return result
        except TamariError as e:
            return _failure(e)

    def compose(self, left: str, rights: Sequence[str], m: Optional[int] = None) -> Dict[str, Any]:
        try:
            _check_arguments(m=m)
            left_poset = formats.poset_from_json(left)
            right_posets = [formats.poset_from_json(text) for text in rights]
            if m is None:
                if len(right_posets) != 1:
                    raise ArityMismatch(1, len(right_posets))
                terms = compose_B(left_poset, right_posets[0])
                weigh = weight_PI
            else:
                if len(right_posets) != m:
                    raise ArityMismatch(m, len(right_posets))
                terms = m_compose(left_poset, right_posets)

                def weigh(item):
                    return weight_PIm(item, m)

            return {
                "success": True,
                "terms": [
                    {"poset": term.to_dict(), "weight": weigh(term).render()} for term in terms
                ],
                "weight": weigh(terms).render(y_first=True),
            }
        except TamariError as e:
            return _failure(e)

    def decompose(self, relations: str, size: Optional[int] = None, m: Optional[int] = None) -> Dict[str, Any]:
        try:
            _check_arguments(m=m)
            poset = formats.poset_from_json(relations, size)
            if m is None:
                left, right = decompose_B(poset)
                rights: List[IntervalPoset] = [right]
            else:
                left, rights = m_decompose(poset, m)
            return {
                "success": True,
                "left": left.to_dict(),
                "rights": [right.to_dict() for right in rights],
            }
        except TamariError as e:
            return _failure(e)

    def lattice(self, n: int, m: int = 1, force: bool = False) -> Dict[str, Any]:
        """DOT text of the (m-)Tamari cover graph."""
        try:
            _check_arguments(n, m)
            ensure_desk_scale(n, m, force=force, limit=self.max_catalan)
            if m == 1:
                trees = list(gen_binary_trees(n, force=True))
                covers = {tree: tamari_covers(tree) for tree in trees}

                def name(tree):
                    return tree_to_dyck(tree).word

            else:
                trees = list(gen_m_binary_trees(n, m, force=True))
                covers = {tree: m_tamari_covers(tree, m) for tree in trees}

                def name(tree):
                    return mdyck_to_ballot(tree_to_dyck(tree), m).word

            edges = [(name(low), name(high)) for low in trees for high in sorted(covers[low], key=name)]
            return {
                "success": True,
                "elements": len(trees),
                "edges": len(edges),
                "dot": formats.lattice_to_dot([name(tree) for tree in trees], edges),
            }
        except TamariError as e:
            return _failure(e)
