"""Normal forms, explicit families and minimal self-intersection formulas."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

from .adjoint import AdjointProfile, adjoint_profile
from .cremona import canonical_form, shgh_dim
from .lattice import (
    InvariantBundle,
    LinearSystem,
    adjoint,
    genus,
    invariants,
    parse_literal,
    self_intersection,
    system,
)
from .negcurves import is_ample


class ClassificationError(RuntimeError):
    """No normal-form template (or more than one) fits the reduced system."""


# -- normal forms for the last adjoint --------------------------------------

MM_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii")


@dataclass(frozen=True)
class MMCase:
    case_id: str
    m: int
    alpha: int
    e: int | None
    tail: tuple[int, ...]
    normal_form: LinearSystem

    @property
    def params(self) -> dict:
        return {"m": self.m, "alpha": self.alpha, "e": self.e, "tail": list(self.tail)}


def _tail_ok(tail, upper: int) -> bool:
    return all(1 <= b <= upper for b in tail)


def _match(case: str, a: int, b: tuple[int, ...], m: int, alpha: int):
    """Return (e, tail) if the sorted form fits the template, else None."""
    if case == "i":
        if alpha == 0 and a == 3 * m and _tail_ok(b, m):
            return None, b
    elif case == "ii":
        e = a - 3 * m
        if alpha == 0 and m > e > 0 and len(b) >= 2 and b[0] == b[1] == m + e:
            if _tail_ok(b[2:], m - e):
                return e, b[2:]
    elif case == "iii":
        if alpha >= 1 and a == 3 * m + alpha and b and b[0] == m + alpha and _tail_ok(b[1:], m):
            return None, b[1:]
    elif case == "iv":
        e = a - 3 * m - alpha
        if alpha >= 1 and m > e > 0 and len(b) >= 2 and b[0] == m + alpha + e and b[1] == m + e:
            if _tail_ok(b[2:], m - e):
                return e, b[2:]
    elif case == "v":
        if alpha in (2, 5) and a == 3 * m + alpha // 2 and _tail_ok(b, m):
            return None, b
    elif case == "vi":
        if alpha >= 4 and alpha % 2 == 0 and a == 3 * m + alpha // 2:
            if b and b[0] == m - 1 + alpha // 2 and _tail_ok(b[1:], m):
                return None, b[1:]
    elif case == "vii":
        e = a - 3 * m - (alpha + 1) // 2
        if alpha >= 3 and alpha % 2 == 1 and m > e >= 0 and len(b) >= 2:
            if b[0] == m + (alpha - 1) // 2 + e and b[1] == m + e + 1 and _tail_ok(b[2:], m - e):
                return e, b[2:]
    return None


def classify_mm(C: LinearSystem, profile: AdjointProfile | None = None) -> MMCase:
    profile = profile or adjoint_profile(C)
    N = canonical_form(C)
    m, alpha = profile.m, profile.alpha
    hits = []
    for case in MM_CASES:
        res = _match(case, N.degree, N.mults, m, alpha)
        if res is not None:
            e, tail = res
            hits.append(MMCase(case, m, alpha, e, tuple(tail), N))
    if len(hits) != 1:
        found = ", ".join(h.case_id for h in hits) or "none"
        raise ClassificationError(f"{N} (m={m}, alpha={alpha}) matches {found}")
    return hits[0]


# -- Castelnuovo-Enriques bound ---------------------------------------------


@dataclass(frozen=True)
class CEBound:
    gamma: int
    eta: int
    bound: int
    rho: int | None = None

    @property
    def satisfied(self) -> bool | None:
        return None if self.rho is None else self.rho <= self.bound


def ce_bound(gamma: int, rho: int | None = None) -> CEBound:
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    eta = 1 if gamma == 1 else 0
    return CEBound(gamma=gamma, eta=eta, bound=3 * gamma + 5 + eta, rho=rho)


# -- the |2b+4; 2b, 2^m, 1^k| family ----------------------------------------


def family_2b4(b: int, m: int, k: int) -> tuple[LinearSystem, InvariantBundle]:
    if b < 1 or not 0 <= m <= 4 or not 9 - m <= k <= 10 * b - 3 * m + 14:
        raise ValueError(f"(b, m, k) = ({b}, {m}, {k}) outside the family range")
    C = system(2 * b + 4, 2 * b, (2, m), (1, k))
    inv = invariants(C)
    expected = {
        "n": m + k + 1,
        "r": 10 * b - 3 * m - k + 14,
        "g": 6 * b - m + 3,
        "g_prime": 2 * b - 1,
        "c2": 16 * b - 4 * m - k + 16,
    }
    actual = {
        "n": C.n,
        "r": shgh_dim(C),
        "g": inv.genus,
        "g_prime": genus(adjoint(C, 1)),
        "c2": inv.self_int,
    }
    if actual != expected:
        raise AssertionError(f"{C}: expected {expected}, computed {actual}")
    return C, inv


# -- minimal self-intersection ----------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    family: str
    system: LinearSystem

    @property
    def c2(self) -> int:
        return self_intersection(self.system)


def hyperelliptic_members(n: int, r: int) -> list[FamilyMember]:
    out = []
    if n + r == 11 and 8 <= n <= 11:
        out.append(FamilyMember("hyp-i", system(6, (2, 8), (1, n - 8))))
    if (n + r) % 3 == 0 and (n + r) // 3 - 2 >= 2:
        g = (n + r) // 3 - 2
        out.append(FamilyMember("hyp-ii", system(g + 2, g, (1, n - 1))))
    if (n, r) == (10, 0):
        out.append(FamilyMember("hyp-iii", parse_literal("9;3^8,2^2")))
    return out


def even_members(n: int, r: int) -> list[FamilyMember]:
    out = []
    if (n + r) % 2 or n + r < 14:
        return out
    if r == 20 - n:
        out.append(FamilyMember("even-a", system(5, (1, n))))
    if (n + r - 10) % 4 == 0 and (t := (n + r - 10) // 4) >= 1:
        out.append(FamilyMember("even-b", system(t + 3, t, (1, n - 1))))
    if (n + r - 8) % 4 == 0 and (t := (n + r - 8) // 4) >= 2:
        out.append(FamilyMember("even-c", system(t + 3, t, 2, (1, n - 2))))
    return out


def odd_members(n: int, r: int) -> list[FamilyMember]:
    out = []
    if (n + r) % 2 == 0 or n + r < 13:
        return out
    for ell in range(8):
        if ell <= n and r == 27 - 2 * ell - n:
            out.append(FamilyMember("odd-a", system(6, (2, ell), (1, n - ell))))
    if n >= 2 and r == 25 - n:
        out.append(FamilyMember("odd-b", system(7, (3, 2), (1, n - 2))))
    for ell in range(5):
        k = n - ell
        if k >= 0 and r == 35 - 3 * ell - k:
            out.append(FamilyMember("odd-c", system(7, (2, ell), (1, k))))
    for ell in range(2):
        k = n - ell - 1
        if k >= 0 and r == 38 - 3 * ell - k:
            out.append(FamilyMember("odd-d", system(8, 3, (2, ell), (1, k))))
    for m in range(5):
        k = n - m - 1
        if (n + r + 2 * m - 15) % 10 == 0 and (b := (n + r + 2 * m - 15) // 10) >= 1:
            if 9 - m <= k <= 10 * b - 3 * m + 14:
                out.append(FamilyMember("odd-e", family_2b4(b, m, k)[0]))
    return out


# Non-hyperelliptic minima below the range of the general formulas.
SMALL_NONHYP: dict[tuple[int, int], tuple[int, tuple[str, ...]]] = {
    (10, 0): (2, ("15;5^7,4^3", "18;6^8,5,3")),
    (12, 0): (2, ("7;3,2^9,1^2", "9;3^8,2,1^3")),
    (11, 1): (3, ("7;3,2^9,1", "9;3^8,2,1^2")),
    (10, 2): (4, ("7;3,2^9", "9;3^8,2,1")),
    (10, 1): (3, ("10;4,3^9", "12;4^8,3,2")),
    (11, 0): (2, ("9;3^7,2^4",)),
}


def small_members(n: int, r: int) -> list[FamilyMember]:
    if (n, r) not in SMALL_NONHYP:
        return []
    return [FamilyMember("small", parse_literal(s)) for s in SMALL_NONHYP[(n, r)][1]]


def odd_excess(h: int) -> int:
    """C^2 above h + r - 5 at the odd minimum: g' = 1 gives 1, otherwise ceil((h-7)/5)."""
    return max(1, ceil((h - 7) / 5))


@dataclass(frozen=True)
class MinC2Report:
    n: int
    r: int
    h: int
    epsilon: int
    b_param: int | None
    hyper_min: int | None
    even_min: int | None
    odd_min: int | None
    overall_min: int
    achievers: tuple[LinearSystem, ...] = field(default=())
    achiever_families: tuple[str, ...] = field(default=())

    @property
    def nonhyp_min(self) -> int | None:
        return self.even_min if self.epsilon == 0 else self.odd_min

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "h": self.h,
            "epsilon": self.epsilon,
            "b_param": self.b_param,
            "hyper_min": self.hyper_min,
            "even_min": self.even_min,
            "odd_min": self.odd_min,
            "overall_min": self.overall_min,
            "achievers": [str(L) for L in self.achievers],
            "achiever_families": list(self.achiever_families),
        }


def family_members(n: int, r: int) -> list[FamilyMember]:
    return hyperelliptic_members(n, r) + even_members(n, r) + odd_members(n, r) + small_members(n, r)


def min_c2(n: int, r: int) -> MinC2Report:
    if n < 10 or r < 0:
        raise ValueError(f"min_c2 needs n >= 10 and r >= 0, got ({n}, {r})")
    h, eps = divmod(n + r, 2)
    hyp = hyperelliptic_members(n, r)
    hyper_min = min((f.c2 for f in hyp), default=None)
    even_min = odd_min = b_param = None
    if eps == 0:
        if n + r >= 14:
            even_min = h + r - 5
        elif (n, r) in SMALL_NONHYP:
            even_min = SMALL_NONHYP[(n, r)][0]
    else:
        b_param = ceil((h - 7) / 5)
        if n + r >= 13:
            odd_min = h + r - 5 + odd_excess(h)
        elif (n, r) in SMALL_NONHYP:
            odd_min = SMALL_NONHYP[(n, r)][0]
    values = [v for v in (hyper_min, even_min, odd_min) if v is not None]
    overall = min(values)
    members = [f for f in family_members(n, r) if f.c2 == overall and is_ample(f.system)]
    seen, achievers, fams = set(), [], []
    for f in sorted(members, key=lambda f: (f.system.degree, f.system.mults)):
        if f.system not in seen:
            seen.add(f.system)
            achievers.append(f.system)
            fams.append(f.family)
    return MinC2Report(
        n=n,
        r=r,
        h=h,
        epsilon=eps,
        b_param=b_param,
        hyper_min=hyper_min,
        even_min=even_min,
        odd_min=odd_min,
        overall_min=overall,
        achievers=tuple(achievers),
        achiever_families=tuple(fams),
    )


def family_label(L: LinearSystem) -> str:
    """Name of the first explicit family containing the sorted system, or ''."""
    N = L.normalize()
    r = shgh_dim(N)
    if N.n < 10 or r < 0:
        return ""
    for f in family_members(N.n, r):
        if f.system == N:
            return f.family
    return ""


__all__ = [
    "CEBound",
    "ClassificationError",
    "FamilyMember",
    "MMCase",
    "MinC2Report",
    "ce_bound",
    "classify_mm",
    "family_2b4",
    "family_label",
    "family_members",
    "min_c2",
    "odd_excess",
]
