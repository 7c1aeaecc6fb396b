import pytest

from planar_linsys import parse_literal
from planar_linsys.adjoint import adjoint_profile
from planar_linsys.cremona import shgh_dim
from planar_linsys.enumerate import CatalogRow
from planar_linsys.lattice import self_intersection
from planar_linsys.negcurves import is_ample_bruteforce
from planar_linsys.oracle import oracle_dim
from planar_linsys.tables import (
    CORRECTIONS,
    LOW_C2_ROWS,
    MINIMAL_ROWS,
    compare,
    reference_low_c2,
    reference_minimal,
    verify_tables,
)


def consistent(literal, hyp, n, r, c2, g, gp):
    L = parse_literal(literal)
    ok = L.n == n and g == c2 - r + 1
    if not hyp:
        ok = ok and 2 * c2 == 3 * r + n - 10 + gp
    return ok


def test_corrections_are_exactly_the_inconsistent_rows():
    broken = {row[0] for row in MINIMAL_ROWS + LOW_C2_ROWS if not consistent(*row)}
    assert broken == set(CORRECTIONS)


def test_corrected_rows_are_consistent(rows):
    for row in rows:
        assert consistent(row.literal, row.hyperelliptic, row.n, row.r, row.c2, row.g, row.g_prime)
        L = parse_literal(row.literal)
        assert (self_intersection(L), shgh_dim(L)) == (row.c2, row.r)


def test_reference_sizes():
    assert len(reference_minimal()) == 32
    assert len(reference_low_c2()) == 18 and len(reference_low_c2(r_min=2)) == 9


@pytest.fixture(scope="module")
def report():
    return verify_tables()


def test_minimal_table_regenerates(report):
    assert report.minimal.ok, report.minimal.lines()


def test_low_c2_difference_is_one_genuine_system(report):
    assert not report.low_c2.missing
    assert [row.literal for row in report.low_c2.extra] == ["12;4^8,3,1^2"]
    L = parse_literal("12;4^8,3,1^2")
    assert oracle_dim(L).dim == 2 and is_ample_bruteforce(L)
    prof = adjoint_profile(L)
    assert not prof.hyperelliptic and (prof.m, prof.alpha, prof.g_prime) == (4, 0, 3)


@pytest.mark.xfail(strict=True, reason="|12;4^8,3,1^2| has n=11, r=2, C^2=5 and is not in the reference list")
def test_low_c2_list_regenerates(report):
    assert report.low_c2.ok


def test_small_r_rows_are_all_found(report):
    assert not report.low_c2_small_r.missing
    extra = {row.literal for row in report.low_c2_small_r.extra}
    assert extra == {"10;4,3^9,1", "12;4^8,3,2,1"}


def test_summary_wording(report):
    assert report.summary() == "minimal table OK, low-C2 table MISMATCH"


def test_compare():
    a = CatalogRow("4;1^12", 12, 2, 4, 3, 0, False)
    b = CatalogRow("4;1^11", 11, 3, 5, 3, 0, False)
    diff = compare("x", [a], [b])
    assert diff.missing == (a,) and diff.extra == (b,) and not diff.ok
    assert diff.lines()[0].startswith("- x: |4;1^12|")
