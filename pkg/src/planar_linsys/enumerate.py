"""Exhaustive searches for n-Cremona-minimal systems.

A system counts as n-Cremona-minimal when it is reduced, every multiplicity
is at least one and it is ample.  For such a system dim = L^2 - g + 1, which
turns (n, r, C^2, a) into the two constraints

    sum(b)   = 3a + C^2 - 2r
    sum(b^2) = a^2 - C^2

and the search runs over non-increasing sequences meeting both.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil

from .adjoint import adjoint_profile, phi
from .cremona import dim_from_numbers
from .families import family_label, min_c2
from .lattice import LinearSystem, format_literal, genus, self_intersection
from .negcurves import is_ample

DEFAULT_DEG_MAX = 30


def _sq_range(k: int, v: int, T: int) -> tuple[int, int]:
    """Least and largest sum of squares of k integers in [1, v] summing to T."""
    q, rem = divmod(T, k)
    lo = rem * (q + 1) ** 2 + (k - rem) * q * q
    if v == 1:
        return lo, lo
    full, extra = divmod(T - k, v - 1)
    if full >= k:
        return lo, k * v * v
    hi = full * v * v + (extra + 1) ** 2 + (k - full - 1)
    return lo, hi


def _sequences(n: int, total: int, squares: int, vmax: int, top3: int):
    """Non-increasing n-tuples in [1, vmax] with given sum and sum of squares.

    ``top3`` bounds b1 + b2 + b3 (the reducedness condition).
    """
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def feasible(k: int, v: int, T: int, Q: int) -> bool:
        if k == 0:
            return T == 0 and Q == 0
        if v < 1 or not k <= T <= k * v:
            return False
        lo, hi = _sq_range(k, v, T)
        return lo <= Q <= hi

    def walk(k: int, v: int, T: int, Q: int) -> None:
        if k == 0:
            if T == 0 and Q == 0:
                out.append(tuple(seq))
            return
        if v == 1:
            if T == k and Q == k and sum((seq + [1] * 3)[:3]) <= top3:
                out.append(tuple(seq) + (1,) * k)
            return
        # how many copies of v to take, largest first
        max_c = min(k, T // v, Q // (v * v))
        for c in range(max_c, -1, -1):
            # remaining entries are at least 1, so pad the head with ones
            if c and sum((seq + [v] * min(c, 3) + [1] * 3)[:3]) > top3:
                continue
            k2, T2, Q2 = k - c, T - c * v, Q - c * v * v
            if not feasible(k2, v - 1, T2, Q2):
                continue
            seq.extend([v] * c)
            walk(k2, v - 1, T2, Q2)
            del seq[len(seq) - c :]

    if feasible(n, vmax, total, squares):
        walk(n, vmax, total, squares)
    return out


def _is_candidate(a: int, mults: tuple[int, ...], r: int) -> bool:
    return dim_from_numbers(a, mults) == r


@lru_cache(maxsize=4096)
def _systems_at(n: int, r: int, c2: int, a: int) -> tuple[LinearSystem, ...]:
    total = 3 * a + c2 - 2 * r
    squares = a * a - c2
    if total < n or squares < n:
        return ()
    found = []
    for mults in _sequences(n, total, squares, a - 1, a):
        if not _is_candidate(a, mults, r):
            continue
        L = LinearSystem(a, mults)
        if genus(L) >= 2 and is_ample(L):
            found.append(L)
    return tuple(found)


@dataclass(frozen=True)
class Catalog:
    systems: tuple[LinearSystem, ...]
    deg_max: int
    complete: bool
    note: str = ""

    def __iter__(self):
        return iter(self.systems)

    def __len__(self) -> int:
        return len(self.systems)


def enumerate_systems(
    n: int, r: int, c2_max: int, deg_max: int = DEFAULT_DEG_MAX, c2_min: int | None = None
) -> Catalog:
    """All n-Cremona-minimal systems with g >= 2, dim r, C^2 <= c2_max, degree <= deg_max."""
    if deg_max < 1:
        raise ValueError("deg_max must be at least 1")
    lo = max(r + 1, 1 if c2_min is None else c2_min)  # g >= 2 forces C^2 >= r + 1
    found = []
    for c2 in range(lo, c2_max + 1):
        for a in range(1, deg_max + 1):
            found.extend(_systems_at(n, r, c2, a))
    found.sort(key=lambda L: (self_intersection(L), L.degree, L.mults))
    return Catalog(
        tuple(found),
        deg_max,
        complete=False,
        note=f"searched degrees 1..{deg_max}; systems of higher degree are not covered",
    )


# -- fixed genus -------------------------------------------------------------


def _genus_parts(target: int, budget: int, vmax: int, top: int):
    """Non-increasing parts >= 2 with sum b(b-1) == target and sum b <= budget."""
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def walk(T: int, B: int, v: int) -> None:
        if T == 0:
            out.append(tuple(seq))
            return
        if v < 2 or T > (v - 1) * B:
            return
        for b in range(min(v, B), 1, -1):
            w = b * (b - 1)
            if w > T:
                continue
            if (b - 1) * B < T:
                return
            if len(seq) < 3 and sum(seq) + b > top:
                continue
            seq.append(b)
            walk(T - w, B - b, b)
            seq.pop()

    walk(target, budget, vmax)
    return out


def genus_degree_cap(g: int) -> int:
    """Degree bound from m <= phi(g) and alpha <= (m+2)(g-1)+9m: a <= 3m + alpha + m."""
    m = ceil(phi(g))
    alpha = (m + 2) * (g - 1) + 9 * m
    return 4 * m + alpha


def enumerate_genus(g: int, deg_max: int = DEFAULT_DEG_MAX) -> Catalog:
    """n-Cremona-minimal effective systems of genus g (any n) with degree <= deg_max."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    found = []
    for a in range(1, deg_max + 1):
        target = (a - 1) * (a - 2) - 2 * g
        if target < 0:
            continue
        budget = 3 * a + g - 1  # effectivity: sum(b) <= 3a + g - 1
        for parts in _genus_parts(target, budget, a - 1, a):
            ones_max = budget - sum(parts)
            for k in range(ones_max + 1):
                mults = parts + (1,) * k
                if sum(mults[:3]) > a or not mults:
                    continue
                if dim_from_numbers(a, mults) < 0:
                    continue
                L = LinearSystem(a, mults)
                if is_ample(L):
                    found.append(L)
    found.sort(key=lambda L: (L.degree, L.n, L.mults))
    cap = genus_degree_cap(g)
    return Catalog(
        tuple(found),
        deg_max,
        complete=deg_max >= cap,
        note=f"theoretical degree cap {cap}",
    )


# -- catalog rows ------------------------------------------------------------


@dataclass(frozen=True)
class CatalogRow:
    literal: str
    n: int
    r: int
    c2: int
    g: int
    g_prime: int | None  # None when the adjoint is composed with a pencil of dim >= 2
    hyperelliptic: bool
    family: str = ""

    def key(self) -> tuple:
        return (self.literal, self.n, self.r, self.c2, self.g, self.g_prime, self.hyperelliptic)

    def as_dict(self) -> dict:
        return {
            "literal": self.literal,
            "n": self.n,
            "r": self.r,
            "c2": self.c2,
            "g": self.g,
            "g_prime": self.g_prime,
            "hyperelliptic": self.hyperelliptic,
            "family": self.family,
        }


CSV_HEADER = ("literal", "n", "r", "c2", "g", "g_prime", "hyperelliptic", "family")


def catalog_row(L: LinearSystem) -> CatalogRow:
    prof = adjoint_profile(L)
    shown_gp = None if prof.hyperelliptic and prof.chain[1].dim >= 2 else prof.g_prime
    return CatalogRow(
        literal=format_literal(L),
        n=L.n,
        r=prof.chain[0].dim,
        c2=self_intersection(L),
        g=genus(L),
        g_prime=shown_gp,
        hyperelliptic=prof.hyperelliptic,
        family=family_label(L),
    )


# -- gaps above the minimum --------------------------------------------------


@dataclass(frozen=True)
class GapReport:
    n: int
    r: int
    minimum: int
    target: int
    attained: bool
    witnesses: tuple[LinearSystem, ...]
    expected: str | None  # "gap" / "attained" where a general statement applies
    deg_max: int

    @property
    def verdict(self) -> str:
        return "attained" if self.attained else "gap"

    @property
    def consistent(self) -> bool:
        return self.expected is None or self.expected == self.verdict


def expected_gap_verdict(n: int, r: int) -> str | None:
    s = n + r
    if s % 2 == 0:
        return "gap" if s >= 32 else None
    h = s // 2
    if h >= 8:
        return "attained"
    if s <= 15:
        return "gap"
    return None


def gap_analysis(n: int, r: int, deg_max: int = DEFAULT_DEG_MAX, all_witnesses: bool = True) -> GapReport:
    """Is C^2 = (non-hyperelliptic minimum) + 1 realised by a non-hyperelliptic system?"""
    if n < 10 or r < 2:
        raise ValueError(f"gap analysis needs n >= 10 and r >= 2, got ({n}, {r})")
    report = min_c2(n, r)
    minimum = report.nonhyp_min
    target = minimum + 1
    witnesses = []
    for a in range(1, deg_max + 1):
        for L in _systems_at(n, r, target, a):
            if not adjoint_profile(L).hyperelliptic:
                witnesses.append(L)
        if witnesses and not all_witnesses:
            break
    return GapReport(
        n=n,
        r=r,
        minimum=minimum,
        target=target,
        attained=bool(witnesses),
        witnesses=tuple(witnesses),
        expected=expected_gap_verdict(n, r),
        deg_max=deg_max,
    )


__all__ = [
    "CSV_HEADER",
    "Catalog",
    "CatalogRow",
    "DEFAULT_DEG_MAX",
    "GapReport",
    "catalog_row",
    "enumerate_genus",
    "enumerate_systems",
    "expected_gap_verdict",
    "gap_analysis",
    "genus_degree_cap",
]
