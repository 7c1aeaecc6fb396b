import pytest

from planar_linsys import parse_literal, system
from planar_linsys.cremona import shgh_dim
from planar_linsys.families import (
    ClassificationError,
    ce_bound,
    classify_mm,
    family_2b4,
    family_label,
    min_c2,
    odd_excess,
)
from planar_linsys.lattice import genus, self_intersection


@pytest.mark.parametrize("g", range(2, 9))
def test_classify_pencil_of_lines(g):
    case = classify_mm(system(g + 2, g, (1, 6)))
    assert (case.case_id, case.m, case.alpha) == ("iii", 1, g - 1)


@pytest.mark.parametrize("n", [1, 10, 20])
def test_classify_quintics(n):
    case = classify_mm(system(5, (1, n)))
    assert (case.case_id, case.m, case.alpha) == ("v", 1, 5)


@pytest.mark.parametrize("m, n", [(2, 8), (2, 4), (3, 8), (3, 2)])
def test_classify_multiple_of_point(m, n):
    case = classify_mm(system(3 * m, (m, n)))
    assert (case.case_id, case.alpha) == ("i", 0)
    assert case.m == m


def test_classify_every_reference_row(rows):
    for row in rows:
        case = classify_mm(parse_literal(row.literal))
        assert case.case_id in {"i", "ii", "iii", "iv", "v", "vi", "vii"}


def test_classify_params():
    case = classify_mm(parse_literal("9;3^8,2^2"))
    assert case.params == {"m": 3, "alpha": 0, "e": None, "tail": [3] * 8 + [2, 2]}


def test_ce_bound():
    assert ce_bound(1).bound == 9
    assert ce_bound(0).bound == 5
    assert ce_bound(3).bound == 14
    assert ce_bound(3, rho=15).satisfied is False
    with pytest.raises(ValueError):
        ce_bound(-1)


def test_family_2b4_values():
    C, inv = family_2b4(1, 0, 9)
    assert C == system(6, 2, (1, 9))
    assert (inv.n, shgh_dim(C), inv.self_int) == (10, 15, 23)
    C, inv = family_2b4(2, 4, 12)
    assert C == system(8, 4, (2, 4), (1, 12))
    assert (inv.n, shgh_dim(C), inv.genus, inv.self_int) == (17, 10, 11, 20)
    assert genus(system(C.degree - 3, *(b - 1 for b in C.mults))) == 3
    with pytest.raises(ValueError):
        family_2b4(1, 4, 22)


def test_family_2b4_all_small_b():
    checked = 0
    for b in range(1, 6):
        for m in range(5):
            for k in range(9 - m, 10 * b - 3 * m + 15):
                family_2b4(b, m, k)
                checked += 1
    assert checked > 400


def test_min_c2_examples():
    rep = min_c2(10, 2)
    assert rep.overall_min == 3
    assert [str(L) for L in rep.achievers] == ["4;2,1^9"]
    rep = min_c2(11, 0)
    assert rep.overall_min == 1 and parse_literal("6;2^8,1^3") in rep.achievers
    rep = min_c2(20, 0)
    assert rep.even_min == 5
    assert set(rep.achievers) == {system(5, (1, 20)), system(6, 3, 2, (1, 18))}


def test_min_c2_precondition():
    with pytest.raises(ValueError):
        min_c2(9, 3)


def test_odd_excess():
    assert [odd_excess(h) for h in range(6, 18)] == [1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2]


def test_achievers_have_the_minimum():
    for n in range(10, 16):
        for r in range(0, 6):
            rep = min_c2(n, r)
            assert rep.achievers
            for L in rep.achievers:
                assert self_intersection(L) == rep.overall_min
                assert shgh_dim(L) == r and L.n == n


def test_family_label():
    assert family_label(parse_literal("5;1^20")) == "even-a"
    assert family_label(parse_literal("9;3^8,2^2")) == "hyp-iii"
    assert family_label(parse_literal("12;4^8,3,1^2")) == ""
