"""(-1)-classes, nefness, ampleness and Zariski decomposition.

Classes are handled in *sorted form* (multiplicities non-increasing) whenever
only the permutation orbit matters.  A sorted (-1)-class is either the
exceptional shape ``(0; 0, ..., 0, -1)`` or has all multiplicities >= 0.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, isqrt

import numpy as np

from .cremona import cremona_reduce, shgh_dim
from .lattice import (
    LinearSystem,
    canonical_class,
    canonical_pairing,
    exceptional_class,
    pair,
    self_intersection,
)


class UnsupportedError(ValueError):
    """Input outside the range where a procedure is defined."""


class ZariskiError(RuntimeError):
    """The computed decomposition failed one of its own invariants."""


@dataclass(frozen=True)
class MinusOneClass:
    system: LinearSystem

    def __post_init__(self) -> None:
        L = self.system
        if self_intersection(L) != -1 or canonical_pairing(L) != -1:
            raise ValueError(f"{L} is not a (-1)-class")
        if L.degree < 0:
            raise ValueError(f"{L} has negative degree")

    @property
    def degree(self) -> int:
        return self.system.degree

    def __str__(self) -> str:
        return str(self.system)


def is_minus_one_class(L: LinearSystem) -> bool:
    return (
        self_intersection(L) == -1
        and canonical_pairing(L) == -1
        and L.degree >= 0
        and shgh_dim(L) == 0
    )


# -- orbit enumeration -------------------------------------------------------


def _triples(mults: tuple[int, ...]):
    """Index triples that give distinct transforms of a sorted vector."""
    first: dict[int, int] = {}
    counts = Counter(mults)
    for i, v in enumerate(mults):
        first.setdefault(v, i)
    values = sorted(counts, reverse=True)
    for combo in combinations_with_replacement(values, 3):
        need = Counter(combo)
        if any(counts[v] < k for v, k in need.items()):
            continue
        idx = []
        for v, k in need.items():
            idx.extend(range(first[v], first[v] + k))
        yield tuple(idx)


def _transform_sorted(a: int, b: tuple[int, ...], i: int, j: int, k: int):
    m = list(b)
    bi, bj, bk = m[i], m[j], m[k]
    m[i], m[j], m[k] = a - bj - bk, a - bi - bk, a - bi - bj
    return 2 * a - bi - bj - bk, tuple(sorted(m, reverse=True))


@lru_cache(maxsize=None)
def _orbit_shapes(n: int, d_max: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    if n == 0:
        return ()
    seeds = {(0, (0,) * (n - 1) + (-1,))}
    if n >= 2 and d_max >= 1:
        seeds.add((1, (1, 1) + (0,) * (n - 2)))
    seen = set(seeds)
    frontier = list(seeds)
    while frontier and n >= 3:
        nxt = []
        for a, b in frontier:
            for i, j, k in _triples(b):
                shape = _transform_sorted(a, b, i, j, k)
                if 0 <= shape[0] <= d_max and shape not in seen:
                    seen.add(shape)
                    nxt.append(shape)
        frontier = nxt
    return tuple(sorted(seen))


def enumerate_minus_one_classes(n: int, d_max: int) -> list[MinusOneClass]:
    """Sorted-form (-1)-classes on n points with degree <= d_max."""
    if n < 0 or d_max < 0:
        raise ValueError("n and d_max must be non-negative")
    return [MinusOneClass(LinearSystem(a, b)) for a, b in _orbit_shapes(n, d_max)]


def permutation_count(L: LinearSystem) -> int:
    """Number of distinct classes obtained by permuting the points."""
    total = factorial(L.n)
    for k in Counter(L.mults).values():
        total //= factorial(k)
    return total


def count_minus_one_classes(n: int, d_max: int) -> int:
    return sum(permutation_count(E.system) for E in enumerate_minus_one_classes(n, d_max))


@lru_cache(maxsize=None)
def _shape_arrays(n: int, d_max: int) -> tuple[np.ndarray, np.ndarray]:
    shapes = _orbit_shapes(n, d_max)
    degrees = np.array([a for a, _ in shapes], dtype=np.int64)
    mults = np.array([b for _, b in shapes], dtype=np.int64).reshape(len(shapes), n)
    return degrees, mults


def _violation_bound(L: LinearSystem) -> int:
    """Cauchy-Schwarz cap on the degree of any E with L.E <= 0 (needs L^2 > 0)."""
    sq = sum(b * b for b in L.mults)
    return isqrt(sq // self_intersection(L))


def min_pairings(L: LinearSystem, d_max: int) -> tuple[np.ndarray, np.ndarray]:
    """For every sorted (-1)-shape up to d_max, the least L.E over its permutations.

    Rearrangement: the minimum pairs the largest multiplicities of L with the
    largest of E.
    """
    degrees, mults = _shape_arrays(L.n, d_max)
    b = np.array(sorted(L.mults, reverse=True), dtype=np.int64)
    return degrees, L.degree * degrees - mults @ b


# -- nef / ample -------------------------------------------------------------


def _pairs_nonneg_with_all(L: LinearSystem) -> bool:
    """L.E >= 0 for every (-1)-class E, decided by clamp-free reduction."""
    final = cremona_reduce(L).final
    return final.degree >= 0 and all(b >= 0 for b in final.mults)


def is_nef(L: LinearSystem) -> bool:
    return self_intersection(L) >= 0 and _pairs_nonneg_with_all(L)


def is_nef_bruteforce(L: LinearSystem) -> bool:
    sq = self_intersection(L)
    if sq <= 0:
        if L.degree == 0 and not any(L.mults):
            return True
        raise UnsupportedError(f"brute-force nef check needs L^2 > 0, got {sq} for {L}")
    if L.degree < 0 or L.n == 0:
        return L.degree >= 0
    _, mins = min_pairings(L, _violation_bound(L))
    return bool((mins >= 0).all())


def is_ample(L: LinearSystem) -> bool:
    """Nef, positive square, and L.E >= 1 for every (-1)-class.

    L.E >= 1 is the same as (L + K).E >= 0, which reduction decides exactly.
    """
    if self_intersection(L) <= 0 or not is_nef(L):
        return False
    if L.n <= 1:
        # P^2 and F_1: padding would turn the ruling into a fake (-1)-class
        return L.degree > (L.mults[0] if L.n else 0) >= (1 if L.n else 0)
    return _pairs_nonneg_with_all(L + canonical_class(L.n))


def is_ample_bruteforce(L: LinearSystem) -> bool:
    if self_intersection(L) <= 0 or not is_nef_bruteforce(L):
        return False
    if L.n == 0:
        return True
    _, mins = min_pairings(L, _violation_bound(L))
    return bool((mins >= 1).all())


# -- Zariski decomposition ---------------------------------------------------


@dataclass(frozen=True)
class ZariskiDecomposition:
    P: LinearSystem
    A: tuple[tuple[int, MinusOneClass], ...] = ()

    def total(self) -> LinearSystem:
        out = self.P
        for c, E in self.A:
            out = out + c * E.system
        return out

    def check(self, D: LinearSystem) -> None:
        classes = [E.system for _, E in self.A]
        for c, E in self.A:
            if c <= 0:
                raise ZariskiError(f"non-positive coefficient {c} on {E}")
            if pair(self.P, E.system) != 0:
                raise ZariskiError(f"P.E = {pair(self.P, E.system)} for {E}")
        for x in range(len(classes)):
            for y in range(x + 1, len(classes)):
                if pair(classes[x], classes[y]) != 0:
                    raise ZariskiError(f"{classes[x]} and {classes[y]} meet")
        if self.total().padded(D.n) != D.padded(self.total().n):
            raise ZariskiError("P + A does not add up to the input class")
        if not is_nef(self.P):
            raise ZariskiError(f"nef part {self.P} is not nef")


def _placements(D: LinearSystem, a_e: int, shape: tuple[int, ...]):
    """Positional versions of a non-negative shape that pair negatively with D."""
    order = sorted(range(D.n), key=lambda i: -D.mults[i])
    bs = [D.mults[i] for i in order]
    target = D.degree * a_e  # need sum(b * e) > target
    values = sorted((v for v in shape if v > 0), reverse=True)
    out = []

    def best(pos: int, remaining: Counter) -> int:
        rem = sorted(remaining.elements(), reverse=True)
        rem += [0] * (len(bs) - pos - len(rem))
        return sum(b * e for b, e in zip(bs[pos:], rem))

    def walk(pos: int, remaining: Counter, acc: int, chosen: list[int]) -> None:
        if acc + best(pos, remaining) <= target:
            return
        if pos == len(bs):
            if not remaining:
                out.append(tuple(chosen))
            return
        if len(bs) - pos > sum(remaining.values()):
            chosen.append(0)
            walk(pos + 1, remaining, acc, chosen)
            chosen.pop()
        for v in list(remaining):
            remaining[v] -= 1
            if remaining[v] == 0:
                del remaining[v]
            chosen.append(v)
            walk(pos + 1, remaining, acc + bs[pos] * v, chosen)
            chosen.pop()
            remaining[v] += 1

    walk(0, Counter(values), 0, [])
    result = []
    for assignment in out:
        mults = [0] * D.n
        for slot, v in zip(order, assignment):
            mults[slot] = v
        result.append(LinearSystem(a_e, tuple(mults)))
    return result


def _violators_by_search(D: LinearSystem) -> list[LinearSystem]:
    found = [exceptional_class(i, D.n) for i, b in enumerate(D.mults) if b < 0]
    if D.n == 0:
        return found
    bound = _violation_bound(D)
    degrees, mins = min_pairings(D, bound)
    shapes = _orbit_shapes(D.n, bound)
    for idx in np.nonzero(mins < 0)[0]:
        a_e, shape = shapes[idx]
        if a_e == 0:
            continue
        found.extend(_placements(D, int(a_e), shape))
    return found


def _violators_by_reduction(D: LinearSystem) -> list[tuple[int, LinearSystem]]:
    """Peel off negative multiplicities of the reduced form, pulled back, until nef."""
    acc: dict[LinearSystem, int] = {}
    cur = D
    for _ in range(10 * (D.n + 1) + 100):
        trace = cremona_reduce(cur)
        final = trace.final
        if final.degree < 0:
            raise ZariskiError(f"{D} reduces to a non-effective class")
        neg = [(j, -b) for j, b in enumerate(final.mults) if b < 0]
        if not neg:
            return [(c, E) for E, c in acc.items()]
        for j, c in neg:
            E = trace.pull_back(exceptional_class(j, final.n))
            E = LinearSystem(E.degree, E.mults[: D.n] if E.n > D.n else E.mults)
            acc[E] = acc.get(E, 0) + c
            cur = cur - c * E
    raise ZariskiError(f"reduction route did not settle for {D}")


def zariski_decompose(D: LinearSystem) -> ZariskiDecomposition:
    if shgh_dim(D) < 0:
        raise ValueError(f"{D} is not effective")
    if is_nef(D):
        return ZariskiDecomposition(D, ())
    if self_intersection(D) > 0:
        terms = [(-pair(D, E), E) for E in _violators_by_search(D)]
    else:
        terms = _violators_by_reduction(D)
    terms.sort(key=lambda t: (t[1].degree, t[1].mults))
    P = D
    for c, E in terms:
        P = P - c * E
    result = ZariskiDecomposition(P, tuple((c, MinusOneClass(E)) for c, E in terms))
    result.check(D)
    return result


__all__ = [
    "MinusOneClass",
    "UnsupportedError",
    "ZariskiDecomposition",
    "ZariskiError",
    "count_minus_one_classes",
    "enumerate_minus_one_classes",
    "is_ample",
    "is_ample_bruteforce",
    "is_minus_one_class",
    "is_nef",
    "is_nef_bruteforce",
    "min_pairings",
    "permutation_count",
    "zariski_decompose",
]
