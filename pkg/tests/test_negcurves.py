from itertools import combinations_with_replacement, permutations

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from planar_linsys import LinearSystem, parse_literal, system
from planar_linsys.cremona import shgh_dim
from planar_linsys.lattice import exceptional_class, pair, self_intersection
from planar_linsys.negcurves import (
    MinusOneClass,
    UnsupportedError,
    ZariskiError,
    count_minus_one_classes,
    enumerate_minus_one_classes,
    is_ample,
    is_ample_bruteforce,
    is_minus_one_class,
    is_nef,
    is_nef_bruteforce,
    _violation_bound,
    min_pairings,
    permutation_count,
    zariski_decompose,
)


def diophantine_shapes(n, d_max):
    """Sorted solutions of d^2 + 1 = sum m^2, 3d - 1 = sum m, d >= 0."""
    out = set()
    for d in range(d_max + 1):
        for combo in combinations_with_replacement(range(d, -2, -1), n):
            if sum(combo) == 3 * d - 1 and sum(m * m for m in combo) == d * d + 1:
                out.add((d, combo))
    return out


def multinomial(combo):
    return len(set(permutations(combo)))


@pytest.mark.parametrize("n", range(1, 8))
def test_orbit_matches_diophantine_scan(n):
    ours = {(E.degree, E.system.mults) for E in enumerate_minus_one_classes(n, 6)}
    assert ours == diophantine_shapes(n, 6)


@pytest.mark.parametrize("n, d_max, total", [(3, 1, 6), (6, 3, 27), (7, 4, 56), (8, 6, 240)])
def test_classical_counts(n, d_max, total):
    assert count_minus_one_classes(n, d_max) == total
    weighted = sum(multinomial(b) for _, b in diophantine_shapes(n, d_max))
    assert weighted == total


def test_n3_shapes():
    shapes = {str(E) for E in enumerate_minus_one_classes(3, 1)}
    assert shapes == {"0;0^2,-1", "1;1^2"}


def test_counts_grow_past_eight_points():
    assert count_minus_one_classes(9, 6) > count_minus_one_classes(9, 3) > 240


def test_permutation_count():
    assert permutation_count(system(2, (1, 5), 0)) == 6
    assert permutation_count(system(6, 3, (2, 7))) == 8


def test_minus_one_class_predicates():
    for n in range(2, 9):
        assert is_minus_one_class(system(1, 1, 1, (0, n - 2)))
    for n in range(8, 12):
        assert is_minus_one_class(system(6, 3, (2, 7), (0, n - 8)))
    assert not is_minus_one_class(system(3, (1, 10)))
    with pytest.raises(ValueError):
        MinusOneClass(system(2, 1, 1))


@pytest.mark.parametrize(
    "lit, nef",
    [("3;1^10", False), ("4;2,1^9", True), ("3;2^2", False), ("7;3,2^9", True), ("0;0", True)],
)
def test_is_nef_values(lit, nef):
    assert is_nef(parse_literal(lit)) is nef


def test_is_nef_bruteforce_values():
    assert is_nef_bruteforce(parse_literal("4;2,1^9"))
    assert _violation_bound(parse_literal("4;2,1^9")) == 2
    assert is_nef_bruteforce(parse_literal("7;3,2^9"))
    L = system(3, 2, 2)
    assert not is_nef_bruteforce(L)
    degrees, mins = min_pairings(L, 1)
    assert mins[degrees == 1].min() == -1
    with pytest.raises(UnsupportedError):
        is_nef_bruteforce(system(3, (1, 9)))


def test_is_ample_values():
    assert is_ample(parse_literal("4;2,1^9"))
    for d in range(1, 6):
        assert not is_ample(system(d, d, (0, 4)))
    assert not is_ample(system(3, (1, 9)))


positive = st.builds(
    LinearSystem,
    st.integers(1, 14),
    st.lists(st.integers(0, 6), min_size=1, max_size=9).map(tuple),
).filter(lambda L: self_intersection(L) > 0)


@settings(max_examples=150, deadline=None)
@given(positive)
def test_nef_and_ample_agree_with_bruteforce(L):
    assert is_nef(L) == is_nef_bruteforce(L)
    assert is_ample(L) == is_ample_bruteforce(L)


@given(
    st.builds(
        LinearSystem,
        st.integers(0, 9),
        st.lists(st.integers(-1, 5), min_size=1, max_size=6).map(tuple),
    )
)
def test_min_pairings_is_rearrangement_minimum(L):
    degrees, mins = min_pairings(L, 3)
    for (d, shape), m in zip([(E.degree, E.system.mults) for E in enumerate_minus_one_classes(L.n, 3)], mins):
        brute = min(L.degree * d - sum(b * e for b, e in zip(L.mults, p)) for p in set(permutations(shape)))
        assert m == brute


# -- Zariski -----------------------------------------------------------------


def assert_good(D, z):
    z.check(D)
    assert shgh_dim(z.P) == shgh_dim(D)
    assert is_nef(z.P)


def test_zariski_values():
    D = parse_literal("6;2^8,1,-1")
    z = zariski_decompose(D)
    assert z.P == parse_literal("6;2^8,1,0")
    assert [(c, E.system) for c, E in z.A] == [(1, exceptional_class(9, 10))]
    nef = parse_literal("4;2,1^9")
    assert zariski_decompose(nef).A == () and zariski_decompose(nef).P == nef
    D = system(2, 2, 1, 0)
    z = zariski_decompose(D)
    assert z.P == system(1, 1, 0, 0)
    assert [(c, E.system) for c, E in z.A] == [(1, system(1, 1, 1, 0))]
    assert_good(D, z)


def test_zariski_rejects_empty():
    with pytest.raises(ValueError):
        zariski_decompose(system(3, (1, 10)))


def test_zariski_repeated_component():
    # twice the line through the two points plus a conic through them
    D = system(4, 3, 3, 0)
    z = zariski_decompose(D)
    assert [(c, E.system) for c, E in z.A] == [(2, system(1, 1, 1, 0))]
    assert z.P == system(2, 1, 1, 0)
    assert_good(D, z)


effective = st.builds(
    LinearSystem,
    st.integers(0, 12),
    st.lists(st.integers(-1, 6), min_size=1, max_size=9).map(tuple),
).filter(lambda L: shgh_dim(L) >= 0)


@settings(max_examples=150, deadline=None)
@given(effective)
def test_zariski_invariants(D):
    assert_good(D, zariski_decompose(D))


def test_zariski_check_catches_bad_input():
    z = zariski_decompose(system(2, 2, 1, 0))
    with pytest.raises(ZariskiError):
        z.check(system(2, 2, 0, 0))
