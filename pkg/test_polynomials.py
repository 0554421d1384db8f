#!/usr/bin/env python3
"""
Tests for the polynomial engine: Delta, the B operators, Tamari polynomials
and the interval generating series
"""

import pytest

from src.engines.enumeration import oracle_greater, oracle_smaller, oracle_smaller_m
from src.engines.interval_posets import IntervalPoset
from src.engines.m_tamari import comb, m_binary_assemble, m_binary_to_mary
from src.engines.polynomials import (
    ONE,
    X_POLY,
    XYPoly,
    delta,
    formula_In,
    formula_Inm,
    m_tamari_poly,
    op_B_b,
    op_Bm,
    phi_b_series,
    phi_m_series,
    phi_series,
    tamari_poly,
    tamari_poly_b,
    tamari_poly_mirror,
    weight_PIm,
)
from src.engines.trees_paths import DyckPath, binary_trees, dyck_to_tree, left_comb, right_comb
from src.errors import EmptyList, ParseError, SizeNotDivisible


def poly(terms):
    return XYPoly.from_terms(terms)


def x_poly(*coefficients):
    return poly({(x, 0, 0): c for x, c in enumerate(coefficients)})


FIG_TREE = dyck_to_tree(DyckPath("110010110100"))
M_TREE = m_binary_assemble(comb(1, 2), [comb(1, 2), comb(1, 2)], 2)


def test_delta():
    assert delta(x_poly(0, 1, 1)) == x_poly(2, 2, 1)
    assert delta(ONE) == ONE


def test_delta_keeps_y_and_b_slices_apart():
    g = poly({(1, 1, 0): 1, (2, 2, 1): 1})
    assert delta(g) == poly({(0, 1, 0): 1, (1, 1, 0): 1, (0, 2, 1): 1, (1, 2, 1): 1, (2, 2, 1): 1})


def test_delta_times_x_minus_one(rng):
    x_minus_one = X_POLY - ONE
    for _ in range(100):
        g = poly({
            (rng.randrange(6), rng.randrange(3), rng.randrange(2)): rng.randint(-4, 4)
            for _ in range(rng.randint(1, 6))
        })
        assert x_minus_one * delta(g) == X_POLY * g - g.at_x_one()


def test_render():
    p = poly({(0, 0, 0): 1, (1, 1, 0): 1, (1, 2, 0): 1, (2, 2, 0): 2})
    assert p.render() == "1 + xy + (x + 2x^2)y^2"
    assert str(x_poly(0, 0, 0, 1, 2, 2, 1)) == "x^3 + 2x^4 + 2x^5 + x^6"
    assert XYPoly.from_terms({}).render() == "0"
    assert poly({(1, 0, 0): -1, (0, 0, 0): 1}).render() == "1 - x"


def test_op_B_b():
    f = XYPoly.monomial(x=2, y=3, b=1)
    g = XYPoly.monomial(x=3, y=4, b=1)
    expected = poly({(6, 8, 2): 1, (5, 8, 3): 1, (4, 8, 3): 1, (3, 8, 3): 1})
    result = op_B_b(f, g)
    assert result == expected
    assert result.render(y_first=True) == "y^8(x^3b^3 + x^4b^3 + x^5b^3 + x^6b^2)"


def test_op_Bm():
    xy = XYPoly.monomial(x=1, y=1)
    result = op_Bm(xy, [XYPoly.monomial(x=2, y=2), xy])
    assert result == poly({(2, 5, 0): 2, (3, 5, 0): 2, (4, 5, 0): 2, (5, 5, 0): 1})
    with pytest.raises(EmptyList):
        op_Bm(xy, [])


def test_tamari_poly_of_a_seven_tree_interval():
    p = tamari_poly(FIG_TREE)
    assert p.coefficients() == [0, 0, 0, 1, 2, 2, 1]
    assert p.value_at_one() == oracle_smaller(FIG_TREE)


def test_tamari_poly_of_combs():
    assert tamari_poly(left_comb(4)) == XYPoly.monomial(x=4)
    assert tamari_poly(right_comb(4)).value_at_one() == 14
    assert tamari_poly_mirror(right_comb(4)) == XYPoly.monomial(x=4)


def test_tamari_polys_match_the_oracles():
    for tree in binary_trees(4):
        assert tamari_poly(tree).value_at_one() == oracle_smaller(tree)
        assert tamari_poly_mirror(tree).value_at_one() == oracle_greater(tree)
        assert tamari_poly_b(tree).at_b_one() == tamari_poly(tree)


def test_tamari_polys_sum_to_the_series_slice():
    total = XYPoly.from_terms({})
    for tree in binary_trees(4):
        total = total + tamari_poly(tree)
    assert total == phi_series(4).y_slice(4)


def test_m_tamari_poly():
    p = m_tamari_poly(M_TREE, 2)
    assert p.coefficients() == [0, 0, 2, 2, 1]
    assert p.value_at_one() == oracle_smaller_m(M_TREE, 2)
    assert m_tamari_poly(m_binary_to_mary(M_TREE, 2), 2) == p


def test_series_low_orders():
    assert phi_series(2).render() == "1 + xy + (x + 2x^2)y^2"


def test_interval_numbers_from_the_series():
    phi = phi_series(6)
    counts = [phi.y_slice(n).value_at_one() for n in range(7)]
    assert counts == [1, 1, 3, 13, 68, 399, 2530]
    assert [formula_In(n) for n in range(1, 7)] == counts[1:]


def test_m_interval_numbers_from_the_series():
    phi = phi_m_series(3, 2)
    assert [phi.y_slice(n).value_at_one() for n in range(4)] == [1, 1, 6, 58]
    assert formula_Inm(2, 2) == 6
    assert formula_Inm(3, 2) == 58
    assert formula_Inm(2, 3) == 10


def test_b_series_specialises():
    assert phi_b_series(4).at_b_one() == phi_series(4)


def test_weight_needs_divisible_size():
    with pytest.raises(SizeNotDivisible):
        weight_PIm(IntervalPoset(3), 2)


def test_json_rows():
    p = poly({(1, 1, 0): 1, (2, 2, 0): 3})
    assert p.to_json() == [[1, 1, 1], [2, 2, 3]]
    assert XYPoly.from_json(p.to_json()) == p
    with pytest.raises(ParseError):
        XYPoly.from_json([[1, 2]])


def test_tree_keyed_caches_are_bounded():
    assert tamari_poly.cache_info().maxsize == 4096
    assert tamari_poly_b.cache_info().maxsize == 4096
