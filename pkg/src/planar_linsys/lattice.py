"""Picard lattice of the plane blown up at n points.

A class ``aH - sum(b_i E_i)`` is stored as a :class:`LinearSystem` with
``degree=a`` and ``mults=(b_1, ..., b_n)``.  Exceptional classes therefore
carry a multiplicity of ``-1``: ``E_n`` is ``LinearSystem(0, (0, ..., -1))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

INT64_MAX = 2**63 - 1


class LatticeOverflowError(ArithmeticError):
    """A coordinate or invariant left the signed 64-bit range."""


class LiteralError(ValueError):
    """Malformed linear system literal."""


def _checked(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise LatticeOverflowError(f"value {value} exceeds 64-bit range")
    return value


@dataclass(frozen=True)
class LinearSystem:
    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        mults = tuple(int(m) for m in self.mults)
        object.__setattr__(self, "mults", mults)
        object.__setattr__(self, "degree", _checked(int(self.degree)))
        for m in mults:
            _checked(m)

    @property
    def n(self) -> int:
        return len(self.mults)

    def padded(self, n: int) -> LinearSystem:
        if n <= self.n:
            return self
        return LinearSystem(self.degree, self.mults + (0,) * (n - self.n))

    def sorted(self) -> LinearSystem:
        return LinearSystem(self.degree, tuple(sorted(self.mults, reverse=True)))

    def normalize(self) -> LinearSystem:
        """Sort multiplicities non-increasing and drop trailing zeros."""
        mults = sorted(self.mults, reverse=True)
        while mults and mults[-1] == 0:
            mults.pop()
        return LinearSystem(self.degree, tuple(mults))

    def __add__(self, other: LinearSystem) -> LinearSystem:
        n = max(self.n, other.n)
        a, b = self.padded(n), other.padded(n)
        return LinearSystem(a.degree + b.degree, tuple(x + y for x, y in zip(a.mults, b.mults)))

    def __neg__(self) -> LinearSystem:
        return LinearSystem(-self.degree, tuple(-m for m in self.mults))

    def __sub__(self, other: LinearSystem) -> LinearSystem:
        return self + (-other)

    def __rmul__(self, k: int) -> LinearSystem:
        return LinearSystem(k * self.degree, tuple(k * m for m in self.mults))

    def __str__(self) -> str:
        return format_literal(self)


def canonical_class(n: int) -> LinearSystem:
    """K_n = |-3; (-1)^n|."""
    return LinearSystem(-3, (-1,) * n)


def exceptional_class(i: int, n: int) -> LinearSystem:
    """The exceptional curve over the i-th point (0-based)."""
    mults = [0] * n
    mults[i] = -1
    return LinearSystem(0, tuple(mults))


def pair(l1: LinearSystem, l2: LinearSystem) -> int:
    """Intersection form a1*a2 - sum(b1_i * b2_i); shorter vectors are zero padded."""
    return _checked(l1.degree * l2.degree - sum(x * y for x, y in zip(l1.mults, l2.mults)))


def self_intersection(L: LinearSystem) -> int:
    return _checked(L.degree**2 - sum(b * b for b in L.mults))


def genus(L: LinearSystem) -> int:
    a = L.degree
    total = (a - 1) * (a - 2) - sum(b * (b - 1) for b in L.mults)
    return _checked(total // 2)


def virtual_dim(L: LinearSystem) -> int:
    """Expected dimension L.(L-K)/2 = L^2 - g + 1."""
    return _checked(self_intersection(L) - genus(L) + 1)


def canonical_pairing(L: LinearSystem) -> int:
    """L.K_n = -3a + sum(b_i)."""
    return _checked(-3 * L.degree + sum(L.mults))


def adjoint(L: LinearSystem, t: int) -> LinearSystem:
    """The class L + tK."""
    if t < 0:
        raise ValueError("adjoint level must be non-negative")
    return LinearSystem(L.degree - 3 * t, tuple(b - t for b in L.mults))


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    self_int: int
    genus: int
    virt_dim: int

    def __post_init__(self) -> None:
        if self.virt_dim != self.self_int - self.genus + 1:
            raise ValueError("virt_dim must equal self_int - genus + 1")


def invariants(L: LinearSystem) -> InvariantBundle:
    return InvariantBundle(L.n, self_intersection(L), genus(L), virtual_dim(L))


# -- literal grammar: <deg>;<m>[^<k>](,<m>[^<k>])* --------------------------

_TERM = re.compile(r"^\s*(-?\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_literal(text: str) -> LinearSystem:
    """Parse ``"6;2^8,1^3"``.  Order of the terms is preserved."""
    if text.count(";") != 1:
        raise LiteralError(f"expected exactly one ';' in {text!r}")
    head, tail = text.split(";")
    head = head.strip()
    if not re.fullmatch(r"-?\d+", head):
        raise LiteralError(f"bad degree {head!r} in {text!r}")
    mults: list[int] = []
    if tail.strip():
        for term in tail.split(","):
            match = _TERM.match(term)
            if match is None:
                raise LiteralError(f"bad multiplicity term {term!r} in {text!r}")
            value, count = match.group(1), match.group(2)
            mults.extend([int(value)] * (int(count) if count is not None else 1))
    return LinearSystem(int(head), tuple(mults))


def format_mults(mults: Iterable[int]) -> str:
    parts = []
    for value, run in groupby(mults):
        k = len(list(run))
        parts.append(f"{value}^{k}" if k > 1 else f"{value}")
    return ",".join(parts)


def format_literal(L: LinearSystem) -> str:
    """Run-length literal of the normalized system."""
    N = L.normalize()
    return f"{N.degree};{format_mults(N.mults)}"


def system(degree: int, *mults: int | Sequence[int]) -> LinearSystem:
    """Small convenience constructor: ``system(6, (2, 8), (1, 3))`` is |6;2^8,1^3|."""
    out: list[int] = []
    for m in mults:
        if isinstance(m, tuple):
            value, count = m
            out.extend([value] * count)
        else:
            out.append(m)
    return LinearSystem(degree, tuple(out))
