"""Quadratic transformations, Cremona reduction and the SHGH dimension count."""
from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (
    LinearSystem,
    canonical_class,
    canonical_pairing,
    genus,
    self_intersection,
    virtual_dim,
)

ITERATION_CAP = 10**6


class ReductionError(RuntimeError):
    """The reduction loop ran past its cap; indicates a bug."""


class CohomologyError(RuntimeError):
    """h^1 came out negative, so the dimension oracle is inconsistent."""


def quadratic_transform(L: LinearSystem, i: int, j: int, k: int) -> LinearSystem:
    """Standard quadratic map based at points i, j, k (0-based).

    Systems on fewer than three points are zero padded first.
    """
    if len({i, j, k}) != 3:
        raise IndexError("quadratic transform needs three distinct indices")
    L = L.padded(3)
    for idx in (i, j, k):
        if not 0 <= idx < L.n:
            raise IndexError(f"index {idx} out of range for n={L.n}")
    a, b = L.degree, list(L.mults)
    bi, bj, bk = b[i], b[j], b[k]
    b[i], b[j], b[k] = a - bj - bk, a - bi - bk, a - bi - bj
    return LinearSystem(2 * a - bi - bj - bk, tuple(b))


@dataclass(frozen=True)
class ReductionStep:
    # permutation[new_pos] = old_pos, applied before the optional transform at (0, 1, 2)
    permutation: tuple[int, ...]
    quadratic: bool


@dataclass(frozen=True)
class ReductionTrace:
    initial: LinearSystem
    final: LinearSystem
    steps: tuple[ReductionStep, ...] = field(default=())

    @property
    def empty(self) -> bool:
        return self.final.degree < 0

    def intermediates(self) -> list[LinearSystem]:
        """Every class visited, starting from the padded input."""
        out = [self.initial.padded(3)]
        for step in self.steps:
            cur = apply_step(out[-1], step)
            out.append(cur)
        return out

    def pull_back(self, L: LinearSystem) -> LinearSystem:
        """Express a class given in final coordinates in the initial coordinates."""
        for step in reversed(self.steps):
            L = undo_step(L, step)
        return L


def apply_step(L: LinearSystem, step: ReductionStep) -> LinearSystem:
    L = LinearSystem(L.degree, tuple(L.mults[p] for p in step.permutation))
    return quadratic_transform(L, 0, 1, 2) if step.quadratic else L


def undo_step(L: LinearSystem, step: ReductionStep) -> LinearSystem:
    if step.quadratic:
        L = quadratic_transform(L, 0, 1, 2)
    mults = [0] * len(step.permutation)
    for new_pos, old_pos in enumerate(step.permutation):
        mults[old_pos] = L.mults[new_pos]
    return LinearSystem(L.degree, tuple(mults))


def _sort_perm(mults: tuple[int, ...]) -> tuple[int, ...]:
    # stable: equal multiplicities keep their relative order
    return tuple(sorted(range(len(mults)), key=lambda i: -mults[i]))


def is_reduced(L: LinearSystem) -> bool:
    """a >= b1 + b2 + b3 for the three largest multiplicities."""
    top = sorted(L.padded(3).mults, reverse=True)[:3]
    return L.degree >= sum(top)


def cremona_reduce(L: LinearSystem) -> ReductionTrace:
    """Sort, test a >= b1+b2+b3, otherwise transform at the three largest; repeat.

    Negative multiplicities are kept.  The loop also stops once the degree
    drops below zero, which marks a non-effective class.
    """
    cur = L.padded(3)
    steps: list[ReductionStep] = []
    for _ in range(ITERATION_CAP):
        perm = _sort_perm(cur.mults)
        cur = LinearSystem(cur.degree, tuple(cur.mults[p] for p in perm))
        b = cur.mults
        if cur.degree < 0 or cur.degree >= b[0] + b[1] + b[2]:
            if perm != tuple(range(len(perm))):
                steps.append(ReductionStep(perm, False))
            return ReductionTrace(L, cur, tuple(steps))
        steps.append(ReductionStep(perm, True))
        cur = quadratic_transform(cur, 0, 1, 2)
    raise ReductionError(f"reduction of {L} exceeded {ITERATION_CAP} steps")


def canonical_form(L: LinearSystem) -> LinearSystem:
    """Reduced, sorted, trailing zeros trimmed; no clamping."""
    return cremona_reduce(L).final.normalize()


def cremona_equivalent(l1: LinearSystem, l2: LinearSystem) -> bool:
    n = max(l1.n, l2.n)
    return canonical_form(l1.padded(n)) == canonical_form(l2.padded(n))


def shgh_dim(L: LinearSystem) -> int:
    """dim |L| (or -1 when empty) for general points, assuming SHGH.

    Negative multiplicities are fixed exceptional curves and are dropped;
    the remaining class is reduced until it is standard, where it is
    non-special by the conjecture.
    """
    return dim_from_numbers(L.degree, L.mults)


def dim_from_numbers(a: int, mults) -> int:
    """:func:`shgh_dim` on a bare degree and multiplicity sequence."""
    b = [m if m > 0 else 0 for m in mults]
    b.extend([0] * (3 - len(b)))
    for _ in range(ITERATION_CAP):
        if a < 0:
            return -1
        b.sort(reverse=True)
        b0, b1, b2 = b[0], b[1], b[2]
        s = b0 + b1 + b2
        if a >= s:
            vdim = (a + 1) * (a + 2) // 2 - 1 - sum(m * (m + 1) for m in b) // 2
            return vdim if vdim > -1 else -1
        b[0], b[1], b[2] = max(a - b1 - b2, 0), max(a - b0 - b2, 0), max(a - b0 - b1, 0)
        a = 2 * a - s
    raise ReductionError(f"dimension count for |{a};...| exceeded {ITERATION_CAP} steps")


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int

    @property
    def dim(self) -> int:
        return self.h0 - 1


def cohomology(L: LinearSystem) -> CohomologyTriple:
    """h^0, h^1, h^2 via the SHGH count and Serre duality."""
    h0 = shgh_dim(L) + 1
    K = canonical_class(L.n)
    h2 = shgh_dim(K - L) + 1
    h1 = h0 + h2 - (virtual_dim(L) + 1)
    if h1 < 0:
        raise CohomologyError(f"negative h1 for {L}: h0={h0} h2={h2}")
    return CohomologyTriple(h0, h1, h2)


def cremona_invariants(L: LinearSystem) -> tuple[int, int, int]:
    """(L^2, g, L.K): the quantities every quadratic transform preserves."""
    return self_intersection(L), genus(L), canonical_pairing(L)


__all__ = [
    "CohomologyError",
    "CohomologyTriple",
    "ReductionError",
    "ReductionStep",
    "ReductionTrace",
    "apply_step",
    "canonical_form",
    "cohomology",
    "cremona_equivalent",
    "cremona_invariants",
    "cremona_reduce",
    "dim_from_numbers",
    "is_reduced",
    "quadratic_transform",
    "shgh_dim",
    "undo_step",
]
