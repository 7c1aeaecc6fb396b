import numpy as np
import pytest
from hypothesis import given, strategies as st

from planar_linsys import LinearSystem, format_literal, parse_literal, system
from planar_linsys.lattice import (
    InvariantBundle,
    LatticeOverflowError,
    LiteralError,
    adjoint,
    canonical_class,
    canonical_pairing,
    exceptional_class,
    genus,
    invariants,
    pair,
    self_intersection,
    virtual_dim,
)

systems = st.builds(
    LinearSystem,
    st.integers(-20, 40),
    st.lists(st.integers(-5, 15), min_size=0, max_size=14).map(tuple),
)


def gram(n):
    return np.diag([1] + [-1] * n)


def test_pair_values():
    line = system(1, 1, 1, 0)
    assert pair(line, line) == -1
    assert pair(system(3, (1, 10)), canonical_class(10)) == 1
    assert pair(parse_literal("6;2^8,1^2"), parse_literal("6;2^8,1^2")) == 2


@pytest.mark.parametrize(
    "lit, c2",
    [("9;3^8,2^2", 1), ("0;0^7", 0), ("4;1^12", 4)],
)
def test_self_intersection(lit, c2):
    assert self_intersection(parse_literal(lit)) == c2


def test_genus_values():
    for g in range(2, 9):
        for n in range(1, 12):
            assert genus(system(g + 2, g, (1, n - 1))) == g
    assert genus(system(1, (0, 5))) == 0
    assert genus(parse_literal("7;2^11")) == 4


def test_virtual_dim_values():
    for n in range(8, 12):
        assert virtual_dim(system(6, (2, 8), (1, n - 8))) == 11 - n
    assert virtual_dim(system(0, (0, 4))) == 0
    assert virtual_dim(system(3, (1, 10))) == -1


def test_adjoint_values():
    C = parse_literal("6;2^8,1^2")
    assert adjoint(C, 1) == system(3, (1, 8), (0, 2))
    assert adjoint(C, 0) == C
    # H - E_1: multiplicity 1 at the former double point
    assert adjoint(parse_literal("4;2,1^9"), 1) == system(1, 1, (0, 9))
    with pytest.raises(ValueError):
        adjoint(C, -1)


def test_canonical_and_exceptional():
    K = canonical_class(3)
    assert K == system(-3, (-1, 3))
    E = exceptional_class(2, 4)
    assert pair(E, E) == -1 and canonical_pairing(E) == -1
    assert pair(K, K) == 6


@given(systems, systems)
def test_pair_matches_gram_matrix(L1, L2):
    n = max(L1.n, L2.n)
    v1 = np.array([L1.degree, *L1.padded(n).mults])
    v2 = np.array([L2.degree, *L2.padded(n).mults])
    assert pair(L1, L2) == int(v1 @ gram(n) @ v2)


@given(systems)
def test_adjunction(L):
    K = canonical_class(L.n)
    assert 2 * genus(L) - 2 == pair(L, L) + pair(L, K)
    assert virtual_dim(L) == self_intersection(L) - genus(L) + 1


@given(systems)
def test_literal_roundtrip(L):
    assert parse_literal(format_literal(L)) == L.normalize()


def test_literal_grammar():
    assert parse_literal("6;2^8,1^3") == system(6, (2, 8), (1, 3))
    assert parse_literal(" 3 ; -1 , 2^2 ").mults == (-1, 2, 2)
    assert parse_literal("0;").mults == ()
    assert format_literal(system(9, 2, 3, 3, 2)) == "9;3^2,2^2"
    for bad in ["", "6", "6;2^", "6;2,,1", "a;1", "6;1;2", "6;2^x"]:
        with pytest.raises(LiteralError):
            parse_literal(bad)


def test_invariant_bundle():
    inv = invariants(parse_literal("4;1^12"))
    assert (inv.n, inv.self_int, inv.genus, inv.virt_dim) == (12, 4, 3, 2)
    with pytest.raises(ValueError):
        InvariantBundle(1, 4, 3, 5)


def test_overflow_guard():
    with pytest.raises(LatticeOverflowError):
        LinearSystem(2**63, ())
    big = LinearSystem(2**31, (2**31,) * 3)
    with pytest.raises(LatticeOverflowError):
        self_intersection(LinearSystem(2**32, (2**32,) * 4))
    assert self_intersection(big) == 2**62 - 3 * 2**62
