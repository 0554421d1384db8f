"""
Exact polynomials in x, y (and b), the Delta operator, the B operators,
interval weights, Tamari polynomials and the interval generating series.

Storage and arithmetic go through sympy.Poly over ZZ; Delta and the
specialisations are computed on the exponent dictionary.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb as binomial
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from loguru import logger
from sympy import ZZ, Poly, symbols

from src.engines.composition import IntervalSum
from src.engines.interval_posets import IntervalPoset, stats
from src.engines.m_tamari import MAryTree, m_binary_components, mary_to_m_binary
from src.engines.trees_paths import BinaryTree, mirror
from src.errors import EmptyList, NotMBinary, ParseError, SizeNotDivisible

X, Y, B = symbols("x y b")
GENS = (X, Y, B)

Exponents = Tuple[int, int, int]


@dataclass(frozen=True)
class XYPoly:
    poly: Poly

    @classmethod
    def from_terms(cls, terms: Mapping[Exponents, int]) -> "XYPoly":
        terms = {exps: coeff for exps, coeff in terms.items() if coeff}
        if not terms:
            return cls(Poly(0, *GENS, domain=ZZ))
        return cls(Poly.from_dict(terms, *GENS, domain=ZZ))

    @classmethod
    def monomial(cls, x: int = 0, y: int = 0, b: int = 0, coeff: int = 1) -> "XYPoly":
        return cls.from_terms({(x, y, b): coeff})

    def terms(self) -> Dict[Exponents, int]:
        return {exps: int(coeff) for exps, coeff in self.poly.as_dict().items() if coeff}

    def __add__(self, other: "XYPoly") -> "XYPoly":
        return XYPoly(self.poly + other.poly)

    def __sub__(self, other: "XYPoly") -> "XYPoly":
        return XYPoly(self.poly - other.poly)

    def __mul__(self, other: Union["XYPoly", int]) -> "XYPoly":
        if isinstance(other, XYPoly):
            return XYPoly(self.poly * other.poly)
        return XYPoly(self.poly * other)

    __rmul__ = __mul__

    @property
    def has_b(self) -> bool:
        return any(b for _, _, b in self.terms())

    def _collapse(self, axis: int) -> "XYPoly":
        out: Dict[Exponents, int] = {}
        for exps, coeff in self.terms().items():
            key = tuple(0 if i == axis else e for i, e in enumerate(exps))
            out[key] = out.get(key, 0) + coeff
        return XYPoly.from_terms(out)

    def at_x_one(self) -> "XYPoly":
        return self._collapse(0)

    def at_y_one(self) -> "XYPoly":
        return self._collapse(1)

    def at_b_one(self) -> "XYPoly":
        return self._collapse(2)

    def value_at_one(self) -> int:
        return sum(self.terms().values())

    def truncate(self, max_y: int) -> "XYPoly":
        return XYPoly.from_terms({e: c for e, c in self.terms().items() if e[1] <= max_y})

    def y_slice(self, degree: int) -> "XYPoly":
        """Coefficient of y^degree, as a polynomial in x and b."""
        return XYPoly.from_terms(
            {(x, 0, b): c for (x, y, b), c in self.terms().items() if y == degree}
        )

    def coefficients(self) -> List[int]:
        """x-coefficients of a polynomial in x alone, lowest degree first."""
        terms = self.terms()
        top = max((x for x, _, _ in terms), default=-1)
        return [terms.get((x, 0, 0), 0) for x in range(top + 1)]

    def render(self, y_first: bool = False) -> str:
        return render(self, y_first)

    def to_json(self) -> List[List[int]]:
        with_b = self.has_b
        rows = []
        for (x, y, b), coeff in sorted(self.terms().items(), key=lambda t: (t[0][1], t[0][0], t[0][2])):
            rows.append([x, y, b, coeff] if with_b else [x, y, coeff])
        return rows

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int]]) -> "XYPoly":
        terms: Dict[Exponents, int] = {}
        for row in rows:
            if len(row) == 3:
                x, y, coeff = row
                b = 0
            elif len(row) == 4:
                x, y, b, coeff = row
            else:
                raise ParseError(f"polynomial term {row} needs 3 or 4 entries")
            terms[(int(x), int(y), int(b))] = terms.get((int(x), int(y), int(b)), 0) + int(coeff)
        return cls.from_terms(terms)

    def __str__(self) -> str:
        return self.render()


ZERO = XYPoly.from_terms({})
ONE = XYPoly.monomial()
X_POLY = XYPoly.monomial(x=1)
XY_POLY = XYPoly.monomial(x=1, y=1)


# ---------------------------------------------------------------------------
# Rendering


def _power(name: str, exp: int) -> str:
    if exp == 0:
        return ""
    return name if exp == 1 else f"{name}^{exp}"


def _term(coeff: int, body: str) -> str:
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}{body}"


def _join(parts: List[str]) -> str:
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return text


def render(poly: XYPoly, y_first: bool = False) -> str:
    """Ascending x (then b) inside ascending y: 1 + xy + (x + 2x^2)y^2."""
    terms = poly.terms()
    if not terms:
        return "0"
    groups: Dict[int, List[Tuple[int, int, int]]] = {}
    for (x, y, b), coeff in terms.items():
        groups.setdefault(y, []).append((x, b, coeff))
    rendered = []
    for y in sorted(groups):
        members = sorted(groups[y])
        y_part = _power("y", y)
        if len(members) == 1:
            x, b, coeff = members[0]
            rendered.append(_term(coeff, _power("x", x) + y_part + _power("b", b)))
            continue
        inner = _join([_term(c, _power("x", x) + _power("b", b)) for x, b, c in members])
        if not y_part:
            rendered.append(inner)
        elif y_first:
            rendered.append(f"{y_part}({inner})")
        else:
            rendered.append(f"({inner}){y_part}")
    return _join(rendered)


# ---------------------------------------------------------------------------
# Operators


def delta(g: XYPoly) -> XYPoly:
    """(x g - g(1)) / (x - 1) as suffix sums of the x-coefficients of each (y, b) slice."""
    slices: Dict[Tuple[int, int], Dict[int, int]] = {}
    for (x, y, b), coeff in g.terms().items():
        slices.setdefault((y, b), {})[x] = coeff
    out: Dict[Exponents, int] = {}
    for (y, b), by_x in slices.items():
        running = 0
        for x in range(max(by_x), -1, -1):
            running += by_x.get(x, 0)
            out[(x, y, b)] = running
    return XYPoly.from_terms(out)


def op_B(f: XYPoly, g: XYPoly) -> XYPoly:
    return XY_POLY * f * delta(g)


def op_Bm(f: XYPoly, gs: Sequence[XYPoly]) -> XYPoly:
    """xy f Delta(g_1 Delta(g_2 ... Delta(g_m)))."""
    if not gs:
        raise EmptyList()
    inner = gs[-1]
    for g in reversed(gs[:-1]):
        inner = g * delta(inner)
    return XY_POLY * f * delta(inner)


def op_B_b(f: XYPoly, g: XYPoly) -> XYPoly:
    """y (x b f Delta(g) - b x f g + x f g)."""
    b = XYPoly.monomial(b=1)
    xf = X_POLY * f
    return XYPoly.monomial(y=1) * (b * xf * delta(g) - b * xf * g + xf * g)


# ---------------------------------------------------------------------------
# Weights


def weight_PI(item: Union[IntervalPoset, IntervalSum], with_b: bool = False) -> XYPoly:
    if isinstance(item, IntervalSum):
        total = ZERO
        for term in item:
            total = total + weight_PI(term, with_b)
        return total
    s = stats(item)
    return XYPoly.monomial(x=s.trees, y=s.size, b=s.rises_b if with_b else 0)


def weight_PIm(item: Union[IntervalPoset, IntervalSum], m: int) -> XYPoly:
    if isinstance(item, IntervalSum):
        total = ZERO
        for term in item:
            total = total + weight_PIm(term, m)
        return total
    if item.size % m:
        raise SizeNotDivisible(item.size, m)
    s = stats(item)
    return XYPoly.monomial(x=s.trees, y=s.size // m)


# ---------------------------------------------------------------------------
# Tamari polynomials


@lru_cache(maxsize=4096)
def tamari_poly(tree: BinaryTree) -> XYPoly:
    """Trees below tree, counted by the length of their leftmost branch."""
    if tree.is_empty:
        return ONE
    return X_POLY * tamari_poly(tree.left) * delta(tamari_poly(tree.right))


def tamari_poly_mirror(tree: BinaryTree) -> XYPoly:
    """Trees above tree, counted by the length of their rightmost branch."""
    return tamari_poly(mirror(tree))


@lru_cache(maxsize=4096)
def tamari_poly_b(tree: BinaryTree) -> XYPoly:
    if tree.is_empty:
        return ONE
    return op_B_b(tamari_poly_b(tree.left), tamari_poly_b(tree.right)).at_y_one()


def m_tamari_poly(tree: Union[BinaryTree, MAryTree], m: int) -> XYPoly:
    if isinstance(tree, MAryTree):
        tree = mary_to_m_binary(tree, m)
    if tree.size % m:
        raise NotMBinary(m)
    return _m_tamari_poly(tree, m)


@lru_cache(maxsize=4096)
def _m_tamari_poly(tree: BinaryTree, m: int) -> XYPoly:
    if tree.is_empty:
        return ONE
    left, parts = m_binary_components(tree, m)
    return op_Bm(
        _m_tamari_poly(left, m), [_m_tamari_poly(part, m) for part in parts]
    ).at_y_one()


# ---------------------------------------------------------------------------
# Series


def _fixed_point(step, max_y: int, label: str) -> XYPoly:
    phi = ONE
    for iteration in range(1, max_y + 3):
        following = (ONE + step(phi)).truncate(max_y)
        if following == phi:
            logger.debug("{} stabilised after {} iterations", label, iteration)
            return phi
        phi = following
    return phi


def phi_series(max_y: int) -> XYPoly:
    return _fixed_point(lambda phi: op_B(phi, phi), max_y, "phi")


def phi_m_series(max_y: int, m: int) -> XYPoly:
    return _fixed_point(lambda phi: op_Bm(phi, [phi] * m), max_y, f"phi^({m})")


def phi_b_series(max_y: int) -> XYPoly:
    return _fixed_point(lambda phi: op_B_b(phi, phi), max_y, "phi_b")


# ---------------------------------------------------------------------------
# Closed formulas


def formula_In(n: int) -> int:
    if n == 0:
        return 1
    numerator = 2 * binomial(4 * n + 1, n - 1)
    denominator = n * (n + 1)
    assert numerator % denominator == 0, "non-exact division"
    return numerator // denominator


def formula_Inm(n: int, m: int) -> int:
    if n == 0:
        return 1
    numerator = (m + 1) * binomial((m + 1) ** 2 * n + m, n - 1)
    denominator = n * (m * n + 1)
    assert numerator % denominator == 0, "non-exact division"
    return numerator // denominator
