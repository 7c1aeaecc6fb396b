"""Adjoint chains |C + tK| and the invariants m, alpha, g'."""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil, sqrt

from .cremona import shgh_dim
from .lattice import LinearSystem, adjoint, genus, self_intersection
from .negcurves import ZariskiDecomposition, zariski_decompose


class AdjointError(RuntimeError):
    """The adjoint scan hit its cap or found a gap in the nonempty levels."""


def phi(g: int) -> float:
    return g + 11 + sqrt((g + 11) ** 2 + 4 * (g - 1))


def scan_cap(g: int) -> int:
    return ceil(phi(g)) + 2


@dataclass(frozen=True)
class AdjointLevel:
    t: int
    system: LinearSystem
    dim: int
    zariski: ZariskiDecomposition | None  # None for empty levels


@dataclass(frozen=True)
class AdjointProfile:
    m: int
    alpha: int
    chain: tuple[AdjointLevel, ...]
    g_prime: int
    hyperelliptic: bool
    composed_pencil_class: LinearSystem | None = None

    def level(self, t: int) -> AdjointLevel:
        return self.chain[t]


def _level(C: LinearSystem, t: int, dim: int) -> AdjointLevel:
    D = adjoint(C, t)
    return AdjointLevel(t, D, dim, zariski_decompose(D) if dim >= 0 else None)


def adjoint_profile(C: LinearSystem) -> AdjointProfile:
    """Scan t = 1, 2, ... until |C + tK| is empty.

    Levels are checked all the way to the point where the degree turns
    negative, so a nonempty level after an empty one raises
    :class:`AdjointError` instead of being ignored.
    """
    if shgh_dim(C) < 0:
        raise ValueError(f"{C} is not effective")
    g = genus(C)
    if g < 2:
        raise ValueError(f"{C} has genus {g} < 2")
    cap = scan_cap(g)
    dims = [shgh_dim(C)]
    t = 1
    while C.degree - 3 * t >= 0:
        d = shgh_dim(adjoint(C, t))
        if d >= 0 and dims[-1] < 0:
            raise AdjointError(f"|C+{t}K| nonempty after an empty level for {C}")
        if d >= 0 and t > cap:
            raise AdjointError(f"adjoint scan for {C} passed the cap t={cap}")
        dims.append(d)
        t += 1
    dims.append(-1)
    m = max(t for t, d in enumerate(dims) if d >= 0)
    chain = tuple(_level(C, t, dims[t]) for t in range(m + 2))

    first = chain[1] if m >= 1 else None
    hyper, pencil = False, None
    if first is not None and first.dim >= 1:
        P = first.zariski.P
        if first.dim == 1:
            hyper, pencil = True, P
        elif self_intersection(P) == 0:
            hyper = True
            beta = shgh_dim(P)
            if P.degree % beta or any(b % beta for b in P.mults):
                raise AdjointError(f"nef part {P} is not a multiple of a pencil")
            pencil = LinearSystem(P.degree // beta, tuple(b // beta for b in P.mults))
    return AdjointProfile(
        m=m,
        alpha=dims[m],
        chain=chain,
        g_prime=genus(adjoint(C, 1)),
        hyperelliptic=hyper,
        composed_pencil_class=pencil,
    )


def g_prime_identity_check(C: LinearSystem, profile: AdjointProfile | None = None) -> bool:
    """2 C^2 == 3r + n - 10 + g' with r = dim |C|."""
    profile = profile or adjoint_profile(C)
    if profile.hyperelliptic:
        raise ValueError(f"{C} is hyperelliptic")
    if C.n < 10:
        raise ValueError(f"{C} has n = {C.n} < 10")
    r = shgh_dim(C)
    return 2 * self_intersection(C) == 3 * r + C.n - 10 + profile.g_prime


__all__ = [
    "AdjointError",
    "AdjointLevel",
    "AdjointProfile",
    "adjoint_profile",
    "g_prime_identity_check",
    "phi",
    "scan_cap",
]
