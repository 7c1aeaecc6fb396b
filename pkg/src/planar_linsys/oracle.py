"""Brute-force dimension of |a; b_1..b_n| at random points over F_p.

Every point of multiplicity b contributes the b(b+1)/2 Hasse derivative
conditions of order < b.  The dimension is the corank of that matrix minus
one, minimised over a few random configurations.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
from sympy import isprime

from .lattice import LinearSystem

DEFAULT_PRIME = 2**31 - 1
MAX_ENTRIES = 4_000_000


class OracleError(ValueError):
    """Bad configuration or a matrix beyond the size cap."""


@dataclass(frozen=True)
class OracleConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 42
    trials: int = 3
    max_entries: int = MAX_ENTRIES

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise OracleError("trials must be positive")
        if not isprime(self.prime):
            raise OracleError(f"{self.prime} is not prime")
        if self.prime >= 2**31:
            # products of two residues must stay inside int64
            raise OracleError("prime must be below 2^31")
        if not 0 <= self.seed < 2**64:
            raise OracleError("seed must fit in 64 bits")


@dataclass(frozen=True)
class OracleResult:
    dim: int
    trials: int
    ranks: tuple[int, ...]


def _monomials(a: int) -> list[tuple[int, int]]:
    return [(i, d - i) for d in range(a + 1) for i in range(d, -1, -1)]


def _point_rows(monos, x: int, y: int, b: int, p: int) -> list[list[int]]:
    rows = []
    for s in range(b):
        for t in range(b - s):
            row = []
            for i, j in monos:
                if i < s or j < t:
                    row.append(0)
                else:
                    c = comb(i, s) * comb(j, t) % p
                    row.append(c * pow(x, i - s, p) % p * pow(y, j - t, p) % p)
            rows.append(row)
    return rows


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an int64 matrix over F_p by dense Gaussian elimination."""
    M = M.copy() % p
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, c]), p - 2, p)
        M[rank] = M[rank] * inv % p
        below = M[rank + 1 :, c].copy()
        if below.any():
            M[rank + 1 :] = (M[rank + 1 :] - np.outer(below, M[rank]) % p) % p
        rank += 1
    return rank


def _sample_points(rng: np.random.Generator, n: int, p: int) -> list[tuple[int, int]]:
    while True:
        pts = [tuple(int(v) for v in rng.integers(0, p, size=2)) for _ in range(n)]
        if len(set(pts)) == n:
            return pts


def oracle_dim(L: LinearSystem, cfg: OracleConfig | None = None) -> OracleResult:
    cfg = cfg or OracleConfig()
    a, p = L.degree, cfg.prime
    if a < 0:
        raise OracleError(f"degree {a} is negative")
    if p <= 2 * a * a:
        raise OracleError(f"prime {p} too small for degree {a}")
    mults = [b for b in L.mults if b > 0]
    monos = _monomials(a)
    n_rows = sum(b * (b + 1) // 2 for b in mults)
    if n_rows * len(monos) > cfg.max_entries:
        raise OracleError(f"matrix {n_rows}x{len(monos)} exceeds the size cap")
    rng = np.random.default_rng(cfg.seed)
    ranks = []
    for _ in range(cfg.trials):
        pts = _sample_points(rng, len(mults), p)
        rows = [r for (x, y), b in zip(pts, mults) for r in _point_rows(monos, x, y, b, p)]
        M = np.array(rows, dtype=np.int64).reshape(len(rows), len(monos))
        ranks.append(rank_mod_p(M, p) if rows else 0)
    dim = len(monos) - 1 - max(ranks)
    return OracleResult(dim=dim, trials=cfg.trials, ranks=tuple(ranks))


__all__ = ["OracleConfig", "OracleError", "OracleResult", "oracle_dim", "rank_mod_p"]
