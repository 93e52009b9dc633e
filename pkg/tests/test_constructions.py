from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from berge_turan.berge import is_berge_path_free, longest_berge_path_order
from berge_turan.constructions import (
    FormulaQuery,
    construct_G2,
    construct_G3,
    construct_H,
    construct_W,
    formula,
    formula_detail,
    formula_equivalence_17,
    h_info,
    monochrome,
    w_parts,
)
from berge_turan.core import BLUE, RED, is_connected_hypergraph, is_two_connected, longest_cycle_order, longest_path_order
from berge_turan.reduction import g_r


def count_h_directly(n, k, r):
    """Count the defining r-sets of H(n,k,r) without building it."""
    ell = k // 2 - 1
    L = set(range(ell))
    u = {ell, ell + 1} if k % 2 else set()
    total = 0
    for e in combinations(range(n), r):
        inside = len(L & set(e))
        if inside >= r - 1 or (u and u <= set(e) and inside == r - 2):
            total += 1
    return total


@pytest.mark.parametrize("n,k,r,want", [(20, 8, 3, 52), (20, 9, 3, 55), (10, 6, 3, 8)])
def test_h_examples(n, k, r, want):
    assert construct_H(n, k, r).m == want


def test_h_10_6_3_structure():
    h = construct_H(10, 6, 3)
    assert all(e[:2] == (0, 1) for e in h.edges)


@pytest.mark.parametrize("r", [3, 4])
@pytest.mark.parametrize("k", range(6, 13))
def test_h_matches_direct_count_and_formula(k, r):
    for n in (k, k + 3, 2 * k):
        h = construct_H(n, k, r)
        assert h.m == count_h_directly(n, k, r)
        if k >= 2 * r + 2:
            assert h.m == formula(FormulaQuery("conn-berge-path", n, k, r))


def test_h_rejects_small_n_and_flags_degenerate():
    with pytest.raises(ValueError):
        construct_H(7, 8, 3)
    info = h_info(10, 4, 4)
    assert info.degenerate
    assert construct_H(10, 4, 4).m == 0


@pytest.mark.parametrize("n,k", [(9, 6), (10, 7), (11, 8), (12, 9)])
def test_h_is_connected_and_free(n, k):
    h = construct_H(n, k, 3)
    assert is_connected_hypergraph(h)
    assert is_berge_path_free(h, k)


def test_sharpness_orders():
    # even k = 2r: r+1 defining vertices; odd k = 2r+1: r+3 (not r+2)
    assert longest_berge_path_order(construct_H(10, 6, 3)) == 4
    assert longest_berge_path_order(construct_H(12, 7, 3)) == 6
    assert longest_berge_path_order(construct_H(12, 8, 4)) == 5


def test_w_examples():
    assert construct_W(10, 7, 2).m == 20
    assert construct_W(20, 7, 3).m == 54
    for n, k, s in [(10, 7, 2), (12, 6, 3), (9, 9, 1)]:
        X, Y, Z = w_parts(n, k, s)
        assert len(X) + len(Y) + len(Z) == n
        assert len(X) == s and len(Y) == k - 2 * s
    with pytest.raises(ValueError):
        construct_W(10, 3, 2)


@pytest.mark.parametrize("n,k,s", [(9, 6, 1), (9, 6, 2), (10, 7, 2), (10, 8, 3)])
def test_w_freeness(n, k, s):
    path_shape = construct_W(n, k - 1, s)
    assert longest_path_order(path_shape) < k
    cyc_shape = construct_W(n, k, s)
    assert longest_cycle_order(cyc_shape) < k
    if s >= 2:
        assert is_two_connected(cyc_shape)


def test_g2_and_g3():
    g2 = construct_G2(28)
    assert g2.m == 2 * 28 - 3
    assert longest_cycle_order(construct_G2(12)) <= 6
    g3 = construct_G3(14, [2, 2, 3])
    assert g3.m <= Fraction(5 * 14, 2) + 1
    assert longest_cycle_order(g3) <= 6
    with pytest.raises(ValueError):
        construct_G3(14, [3])
    with pytest.raises(ValueError):
        construct_G3(14, [1, 3])
    with pytest.raises(ValueError):
        construct_G3(7, [3, 2])


def test_monochrome_values():
    from berge_turan.core import Graph

    k3 = Graph.complete(3)
    assert g_r(monochrome(k3, RED), 3) == 1
    assert g_r(monochrome(k3, BLUE), 3) == 3
    assert g_r(monochrome(construct_W(20, 7, 3), RED), 3) == 52
    with pytest.raises(ValueError):
        monochrome(k3, "G")


@pytest.mark.parametrize(
    "family,n,k,r,want",
    [
        ("conn-berge-path", 20, 8, 3, 52),
        ("2conn-berge-cycle", 20, 8, 3, 55),
        ("berge-path", 5, 5, 3, 4),
        ("berge-path", 6, 5, 3, 4),
        ("berge-p3", 7, 3, 3, 2),
        ("berge-path-small", 7, 4, 3, 3),
        ("eg-path", 7, 4, 2, 7),
        ("kopylov", 7, 5, 2, 11),
    ],
)
def test_formula_values(family, n, k, r, want):
    assert formula(FormulaQuery(family, n, k, r)) == want


def test_formula_exactness_and_tags():
    fv = formula_detail(FormulaQuery("eg-cycle", 6, 4))
    assert fv.exact == Fraction(15, 2) and fv.value == 7 and not fv.is_integral
    outside = formula_detail(FormulaQuery("conn-berge-path", 10, 5, 3))
    assert not outside.in_hypothesis
    assert outside.to_dict()["in_hypothesis"] is False
    with pytest.raises(ValueError):
        formula(FormulaQuery("no-such-family", 5, 5))


def test_theorem_18_closed_form_directly():
    for n, k, r in [(20, 8, 3), (31, 11, 4), (40, 12, 5)]:
        want = comb(k // 2 - 1, r - 1) * (n - (k + 1) // 2) + comb((k + 1) // 2, r)
        if k % 2 == 0:
            assert formula(FormulaQuery("conn-berge-path", n, k, r)) == count_h_directly(n, k, r)
        assert formula_equivalence_17(n, k, r)
        assert want >= 0


def test_formula_equivalence_grid():
    assert formula_equivalence_17(40, 9, 3)
    assert formula_equivalence_17(40, 8, 3)
    for k in range(8, 17):
        for r in range(3, 6):
            for n in range(4 * k, 4 * k + 9):
                assert formula_equivalence_17(n, k, r)
