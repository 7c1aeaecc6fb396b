"""Reference catalogs of low self-intersection systems and their regeneration.

Rows are ``(literal, hyperelliptic, n, r, c2, g, g_prime)`` with ``g_prime``
``None`` where the adjoint is composed with a pencil of dimension >= 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .enumerate import DEFAULT_DEG_MAX, CatalogRow, catalog_row, enumerate_systems
from .families import min_c2
from .lattice import format_literal, parse_literal

Row = tuple[str, bool, int, int, int, int, "int | None"]

# Systems whose C^2 <= 5 is the least possible for their (n, r).
MINIMAL_ROWS: tuple[Row, ...] = (
    ("9;3^8,2^2", True, 10, 0, 1, 2, 2),
    ("6;2^8,1^3", True, 11, 0, 1, 2, 1),
    ("4;2,1^11", True, 12, 0, 1, 2, 0),
    ("6;2^8,1^2", True, 10, 1, 2, 2, 1),
    ("4;2,1^10", True, 11, 1, 2, 3, 0),
    ("6;2^7,1^6", False, 13, 0, 2, 3, 1),
    ("4;1^14", False, 14, 0, 2, 3, 1),
    ("5;3,1^14", True, 15, 0, 2, 3, None),
    ("4;2,1^9", True, 10, 2, 3, 2, 0),
    ("6;2^7,1^5", False, 12, 1, 3, 1, 1),
    ("4;1^13", False, 13, 1, 3, 3, 0),
    ("5;3,1^13", True, 14, 1, 3, 3, None),
    ("5;2^2,1^14", False, 16, 0, 3, 4, 0),
    ("6;4,1^17", True, 18, 0, 3, 4, None),
    ("6;2^7,1^4", False, 11, 2, 4, 3, 1),
    ("4;1^12", False, 12, 2, 4, 3, 0),
    ("5;3,1^12", True, 13, 2, 4, 3, None),
    ("5;2^2,1^13", False, 15, 1, 4, 4, 0),
    ("6;2^5,1^12", False, 17, 0, 4, 5, 1),
    ("6;4,1^16", True, 17, 1, 4, 4, None),
    ("7;5,1^20", True, 21, 0, 4, 5, None),
    ("6;2^7,1^3", False, 10, 3, 5, 3, 1),
    ("4;1^11", False, 11, 3, 5, 3, 0),
    ("5;3,1^11", True, 12, 3, 5, 3, None),
    ("5;2^2,1^12", False, 14, 2, 5, 4, 0),
    ("6;2^5,1^11", False, 16, 1, 5, 1, 1),
    ("6;4,1^15", True, 16, 2, 5, 4, None),
    ("6;2^4,1^15", False, 19, 0, 5, 6, 1),
    ("5;1^20", False, 20, 0, 5, 6, 0),
    ("6;3,2,1^18", False, 20, 0, 5, 6, 0),
    ("7;5,1^9", True, 20, 1, 5, 5, None),
    ("8;6,1^23", True, 24, 0, 5, 6, None),
)

# Transcription slips in the reference list.  Each replacement is forced by
# the row's other columns: g = C^2 - r + 1, 2C^2 = 3r + n - 10 + g', or n.
CORRECTIONS: dict[str, dict] = {
    "4;2,1^10": {"g": 2},
    "4;1^14": {"g_prime": 0},
    "6;2^7,1^5": {"g": 3},
    "6;2^5,1^11": {"g": 5},
    "7;5,1^9": {"literal": "7;5,1^19"},
}

# Systems with C^2 <= 5 that are not minimal for their (n, r).
LOW_C2_ROWS: tuple[Row, ...] = (
    ("15;5^7,4^3", False, 10, 0, 2, 3, 4),
    ("18;6^8,5,3", False, 10, 0, 2, 3, 4),
    ("9;3^7,2^4", False, 11, 0, 2, 3, 3),
    ("7;3,2^9,1^2", False, 12, 0, 2, 3, 2),
    ("9;3^8,2,1^3", False, 12, 0, 2, 3, 2),
    ("10;4,3^9", False, 10, 1, 3, 3, 3),
    ("12;4^8,3,2", False, 10, 1, 3, 3, 3),
    ("7;3,2^9,1", False, 11, 1, 3, 3, 2),
    ("9;3^8,2,1^2", False, 11, 1, 3, 3, 2),
    ("7;3,2^9", False, 10, 2, 4, 3, 2),
    ("9;3^8,2,1", False, 10, 2, 4, 3, 2),
    ("12;4^7,3^3", False, 10, 2, 5, 4, 4),
    ("15;5^8,4,2", False, 10, 2, 5, 4, 4),
    ("7;2^11", False, 11, 2, 5, 4, 3),
    ("9;3^7,2^3,1", False, 11, 2, 5, 4, 3),
    ("7;3,2^8,1^3", False, 12, 2, 5, 4, 2),
    ("9;3^8,1^4", False, 12, 2, 5, 4, 2),
    ("6;2^6,1^7", False, 13, 2, 5, 4, 1),
)

C2_CEILING = 5
N_RANGE = range(10, 31)  # min_c2 exceeds 5 for every r once n > 24
R_RANGE = range(0, 5)  # g >= 2 forces r <= C^2 - 1


def _as_row(raw: Row) -> CatalogRow:
    literal, hyp, n, r, c2, g, gp = raw
    fix = CORRECTIONS.get(literal, {})
    return CatalogRow(
        literal=format_literal(parse_literal(fix.get("literal", literal))),
        n=n,
        r=r,
        c2=c2,
        g=fix.get("g", g),
        g_prime=fix.get("g_prime", gp),
        hyperelliptic=hyp,
    )


def reference_minimal() -> list[CatalogRow]:
    return [_as_row(x) for x in MINIMAL_ROWS]


def reference_low_c2(r_min: int = 0) -> list[CatalogRow]:
    return [_as_row(x) for x in LOW_C2_ROWS if x[3] >= r_min]


@dataclass
class TableRun:
    minimal: list[CatalogRow] = field(default_factory=list)
    low: list[CatalogRow] = field(default_factory=list)


def regenerate(deg_max: int = DEFAULT_DEG_MAX) -> TableRun:
    """Enumerate every in-scope system with C^2 <= 5 and split by minimality."""
    run = TableRun()
    for n in N_RANGE:
        for r in R_RANGE:
            cat = enumerate_systems(n, r, C2_CEILING, deg_max)
            if not len(cat):
                continue
            floor = min_c2(n, r).overall_min
            for L in cat:
                row = catalog_row(L)
                (run.minimal if row.c2 == floor else run.low).append(row)
    return run


@dataclass(frozen=True)
class TableDiff:
    name: str
    missing: tuple[CatalogRow, ...]  # in the reference, not regenerated
    extra: tuple[CatalogRow, ...]  # regenerated, not in the reference

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def lines(self) -> list[str]:
        out = []
        for row in self.missing:
            out.append(f"- {self.name}: {_fmt(row)}")
        for row in self.extra:
            out.append(f"+ {self.name}: {_fmt(row)}")
        return out


def _fmt(row: CatalogRow) -> str:
    gp = "-" if row.g_prime is None else row.g_prime
    hyp = "hyp" if row.hyperelliptic else "non-hyp"
    return f"|{row.literal}| {hyp} n={row.n} r={row.r} C2={row.c2} g={row.g} g'={gp}"


def compare(name: str, expected: list[CatalogRow], actual: list[CatalogRow]) -> TableDiff:
    exp = {row.key(): row for row in expected}
    act = {row.key(): row for row in actual}
    missing = tuple(exp[k] for k in sorted(set(exp) - set(act)))
    extra = tuple(act[k] for k in sorted(set(act) - set(exp), key=str))
    return TableDiff(name, missing, extra)


@dataclass(frozen=True)
class TableReport:
    minimal: TableDiff
    low_c2: TableDiff
    low_c2_small_r: TableDiff  # r <= 1 part, reported but not part of the verdict

    @property
    def ok(self) -> bool:
        return self.minimal.ok and self.low_c2.ok

    def summary(self) -> str:
        parts = [
            f"minimal table {'OK' if self.minimal.ok else 'MISMATCH'}",
            f"low-C2 table {'OK' if self.low_c2.ok else 'MISMATCH'}",
        ]
        return ", ".join(parts)


def verify_tables(deg_max: int = DEFAULT_DEG_MAX) -> TableReport:
    run = regenerate(deg_max)
    low_hi = [row for row in run.low if row.r >= 2]
    low_lo = [row for row in run.low if row.r < 2]
    ref_lo = [row for row in reference_low_c2() if row.r < 2]
    return TableReport(
        minimal=compare("minimal", reference_minimal(), run.minimal),
        low_c2=compare("low-C2 r>=2", reference_low_c2(r_min=2), low_hi),
        low_c2_small_r=compare("low-C2 r<=1", ref_lo, _low_c2_scope(low_lo)),
    )


def _low_c2_scope(rows: list[CatalogRow]) -> list[CatalogRow]:
    # the reference covers C^2 = 2 for every r and C^2 = 3 only for r >= 1
    return [row for row in rows if row.c2 == 2 or (row.c2 == 3 and row.r >= 1)]


__all__ = [
    "CORRECTIONS",
    "LOW_C2_ROWS",
    "MINIMAL_ROWS",
    "TableDiff",
    "TableReport",
    "compare",
    "reference_low_c2",
    "reference_minimal",
    "regenerate",
    "verify_tables",
]
