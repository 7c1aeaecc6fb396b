"""Command-line interface: ``planar-linsys <command> ...``.

Exit codes: 0 success, 1 bad input or a failed precondition, 2 when
``verify-tables`` finds a difference.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from . import __version__
from .adjoint import AdjointError, adjoint_profile
from .cremona import CohomologyError, ReductionError, cohomology, cremona_reduce, shgh_dim
from .enumerate import CSV_HEADER, DEFAULT_DEG_MAX, catalog_row, enumerate_genus, enumerate_systems, gap_analysis
from .families import ClassificationError, classify_mm, min_c2
from .lattice import LatticeOverflowError, LinearSystem, format_literal, genus, parse_literal, self_intersection
from .negcurves import (
    UnsupportedError,
    ZariskiError,
    count_minus_one_classes,
    enumerate_minus_one_classes,
    is_ample,
    is_nef,
    is_nef_bruteforce,
    permutation_count,
    zariski_decompose,
)
from .oracle import DEFAULT_PRIME, OracleConfig, OracleError, oracle_dim
from .tables import verify_tables

DOMAIN_ERRORS = (
    ValueError,
    ArithmeticError,
    AdjointError,
    ClassificationError,
    CohomologyError,
    ReductionError,
    ZariskiError,
    UnsupportedError,
    OracleError,
    LatticeOverflowError,
)


class VerificationMismatch(click.ClickException):
    exit_code = 2


# -- output plumbing ---------------------------------------------------------


def _settings() -> dict:
    ctx = click.get_current_context()
    return ctx.find_root().obj or {}


def _emit(text: str) -> None:
    out = _settings().get("out")
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


def _use_json(local: bool) -> bool:
    return local or _settings().get("json", False)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _deg_max(local: int | None) -> int:
    if local is not None:
        return local
    return _settings().get("deg_max") or DEFAULT_DEG_MAX


def json_flag(f):
    return click.option("--json", "as_json", is_flag=True, help="Emit JSON.")(f)


class LiteralType(click.ParamType):
    name = "LITERAL"

    def convert(self, value, param, ctx):
        if isinstance(value, LinearSystem):
            return value
        try:
            return parse_literal(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


LITERAL = LiteralType()


def _literal_arg(f):
    return click.argument("literal", type=LITERAL)(f)


def _ls(L: LinearSystem) -> str:
    return f"|{format_literal(L)}|"


# -- summary record ----------------------------------------------------------


def info_record(L: LinearSystem) -> dict:
    dim = shgh_dim(L)
    rec = {
        "literal": format_literal(L),
        "n": L.n,
        "degree": L.degree,
        "mults": list(L.mults),
        "c2": self_intersection(L),
        "genus": genus(L),
        "dim": dim,
        "nef": is_nef(L),
        "ample": is_ample(L),
        "m": None,
        "alpha": None,
        "g_prime": None,
        "hyperelliptic": None,
        "classification": None,
    }
    if dim >= 0 and rec["genus"] >= 2:
        prof = adjoint_profile(L)
        rec.update(m=prof.m, alpha=prof.alpha, g_prime=prof.g_prime, hyperelliptic=prof.hyperelliptic)
        try:
            rec["classification"] = classify_mm(L, prof).case_id
        except ClassificationError:
            pass
    return rec


# -- commands ----------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="planar-linsys")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON for every command.")
@click.option("--seed", type=int, default=None, help="Seed for randomized commands.")
@click.option("--deg-max", type=int, default=None, help=f"Degree ceiling for searches (default {DEFAULT_DEG_MAX}).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file.")
@click.pass_context
def cli(ctx, as_json, seed, deg_max, out):
    """Planar linear systems through general fat points."""
    ctx.obj = {"json": as_json, "seed": seed, "deg_max": deg_max, "out": out}


@cli.command()
@_literal_arg
@json_flag
def info(literal, as_json):
    """Invariants, positivity and adjoint data of a system."""
    rec = info_record(literal)
    if _use_json(as_json):
        _emit(_dump(rec))
        return
    lines = [
        f"{_ls(literal)}  n={rec['n']} r={rec['dim']} C²={rec['c2']} g={rec['genus']}",
        f"nef={rec['nef']} ample={rec['ample']}",
    ]
    if rec["m"] is not None:
        kind = "hyperelliptic" if rec["hyperelliptic"] else "non-hyperelliptic"
        lines.append(f"m={rec['m']} alpha={rec['alpha']} g'={rec['g_prime']} {kind}")
        if rec["classification"]:
            lines.append(f"normal form case ({rec['classification']})")
    _emit("\n".join(lines))


@cli.command()
@_literal_arg
@click.option("--trace", is_flag=True, help="Show every intermediate class.")
@json_flag
def reduce(literal, trace, as_json):
    """Cremona-reduce a system."""
    tr = cremona_reduce(literal)
    steps = tr.intermediates()
    if _use_json(as_json):
        obj = {
            "input": format_literal(literal),
            "reduced": format_literal(tr.final),
            "empty": tr.empty,
            "quadratic_steps": sum(s.quadratic for s in tr.steps),
        }
        if trace:
            obj["trace"] = [format_literal(L) for L in steps]
        _emit(_dump(obj))
        return
    if trace:
        _emit("\n".join(f"{i:3d}  {_ls(L)}" for i, L in enumerate(steps)))
    else:
        suffix = "  (empty)" if tr.empty else ""
        _emit(f"{_ls(tr.final)}{suffix}")


@cli.command()
@_literal_arg
@json_flag
def dim(literal, as_json):
    """Expected projective dimension of the system (-1 when empty)."""
    d = shgh_dim(literal)
    _emit(_dump({"literal": format_literal(literal), "dim": d}) if _use_json(as_json) else str(d))


@cli.command("cohomology")
@_literal_arg
@json_flag
def cohomology_cmd(literal, as_json):
    """h^0, h^1, h^2 of the line bundle."""
    c = cohomology(literal)
    if _use_json(as_json):
        _emit(_dump({"literal": format_literal(literal), "h0": c.h0, "h1": c.h1, "h2": c.h2}))
    else:
        _emit(f"h0={c.h0} h1={c.h1} h2={c.h2}")


@cli.command()
@_literal_arg
@click.option("--bruteforce", is_flag=True, help="Check against enumerated (-1)-classes instead.")
@json_flag
def nef(literal, bruteforce, as_json):
    """Is the class nef?"""
    v = is_nef_bruteforce(literal) if bruteforce else is_nef(literal)
    _emit(_dump({"literal": format_literal(literal), "nef": v}) if _use_json(as_json) else str(v).lower())


@cli.command()
@_literal_arg
@json_flag
def ample(literal, as_json):
    """Is the class ample?"""
    v = is_ample(literal)
    _emit(_dump({"literal": format_literal(literal), "ample": v}) if _use_json(as_json) else str(v).lower())


@cli.command()
@click.option("--n", "n", type=click.IntRange(1), required=True)
@click.option("--dmax", type=click.IntRange(0), required=True)
@click.option("--count", "mode", flag_value="count", default=True, help="Print the total only.")
@click.option("--list", "mode", flag_value="list", help="List the sorted orbit representatives.")
@json_flag
def negcurves(n, dmax, mode, as_json):
    """(-1)-classes on n points up to degree dmax."""
    total = count_minus_one_classes(n, dmax)
    if mode == "count":
        _emit(_dump({"n": n, "d_max": dmax, "count": total}) if _use_json(as_json) else str(total))
        return
    classes = enumerate_minus_one_classes(n, dmax)
    if _use_json(as_json):
        rows = [{"literal": str(E), "orbit_size": permutation_count(E.system)} for E in classes]
        _emit(_dump({"n": n, "d_max": dmax, "count": total, "classes": rows}))
    else:
        lines = [f"{_ls(E.system)}  x{permutation_count(E.system)}" for E in classes]
        lines.append(f"total {total}")
        _emit("\n".join(lines))


@cli.command()
@_literal_arg
@json_flag
def zariski(literal, as_json):
    """Zariski decomposition D = P + sum c_i E_i."""
    z = zariski_decompose(literal)
    if _use_json(as_json):
        obj = {
            "literal": format_literal(literal),
            "P": format_literal(z.P),
            "negative_part": [{"class": format_literal(E.system), "coefficient": c} for c, E in z.A],
        }
        _emit(_dump(obj))
        return
    parts = [f"P = {_ls(z.P)}"]
    parts += [f"  + {c} * {_ls(E.system)}" for c, E in z.A]
    _emit("\n".join(parts))


@cli.command("adjoint")
@_literal_arg
@click.option("--chain", is_flag=True, help="Show every level |C + tK|.")
@json_flag
def adjoint_cmd(literal, chain, as_json):
    """Adjoint invariants m, alpha, g' and hyperellipticity."""
    prof = adjoint_profile(literal)
    pencil = prof.composed_pencil_class
    if _use_json(as_json):
        obj = {
            "literal": format_literal(literal),
            "m": prof.m,
            "alpha": prof.alpha,
            "g_prime": prof.g_prime,
            "hyperelliptic": prof.hyperelliptic,
            "pencil": None if pencil is None else format_literal(pencil),
        }
        if chain:
            obj["chain"] = [
                {
                    "t": lv.t,
                    "class": format_literal(lv.system),
                    "dim": lv.dim,
                    "nef_part": None if lv.zariski is None else format_literal(lv.zariski.P),
                }
                for lv in prof.chain
            ]
        _emit(_dump(obj))
        return
    lines = [f"m={prof.m} alpha={prof.alpha} g'={prof.g_prime} hyperelliptic={str(prof.hyperelliptic).lower()}"]
    if pencil is not None:
        lines.append(f"pencil {_ls(pencil)}")
    if chain:
        for lv in prof.chain:
            tail = "" if lv.zariski is None else f"  P={_ls(lv.zariski.P)}"
            lines.append(f"t={lv.t}  {_ls(lv.system)}  dim={lv.dim}{tail}")
    _emit("\n".join(lines))


@cli.command()
@_literal_arg
@json_flag
def classify(literal, as_json):
    """Normal-form case of the reduced system."""
    case = classify_mm(literal)
    if _use_json(as_json):
        obj = {"literal": format_literal(literal), "case": case.case_id, "normal_form": format_literal(case.normal_form)}
        obj.update(case.params)
        _emit(_dump(obj))
    else:
        e = "" if case.e is None else f" e={case.e}"
        _emit(f"({case.case_id}) {_ls(case.normal_form)}  m={case.m} alpha={case.alpha}{e}")


@cli.command("min-c2")
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@json_flag
def min_c2_cmd(n, r, as_json):
    """Least C^2 of an n-point system of dimension r."""
    rep = min_c2(n, r)
    if _use_json(as_json):
        _emit(_dump(rep.as_dict()))
        return
    lines = [f"min C² = {rep.overall_min}  (n={n}, r={r})"]
    for L, fam in zip(rep.achievers, rep.achiever_families):
        lines.append(f"  {_ls(L)}  [{fam}]")
    _emit("\n".join(lines))


def _emit_catalog(systems, as_json: bool, note: str) -> None:
    rows = [catalog_row(L) for L in systems]
    out = _settings().get("out")
    if out and out.lower().endswith(".csv"):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            d = row.as_dict()
            w.writerow(["" if d[k] is None else d[k] for k in CSV_HEADER])
        Path(out).write_text(buf.getvalue(), encoding="utf-8")
        return
    if _use_json(as_json) or (out and out.lower().endswith(".json")):
        _emit(_dump([row.as_dict() for row in rows]))
        return
    lines = []
    for row in rows:
        gp = "-" if row.g_prime is None else row.g_prime
        kind = "hyp" if row.hyperelliptic else "   "
        lines.append(f"{row.literal:<24} n={row.n:<3} r={row.r:<3} C²={row.c2:<3} g={row.g:<3} g'={gp:<3} {kind} {row.family}".rstrip())
    lines.append(f"{len(rows)} systems; {note}")
    _emit("\n".join(lines))


@cli.command("enumerate")
@click.option("--n", "n", type=click.IntRange(1), required=True)
@click.option("--r", "r", type=click.IntRange(0), required=True)
@click.option("--c2-max", type=int, required=True)
@click.option("--c2-min", type=int, default=None)
@click.option("--deg-max", "local_deg", type=click.IntRange(1), default=None)
@json_flag
def enumerate_cmd(n, r, c2_max, c2_min, local_deg, as_json):
    """All n-point systems of dimension r with C^2 <= c2-max."""
    cat = enumerate_systems(n, r, c2_max, _deg_max(local_deg), c2_min=c2_min)
    _emit_catalog(cat.systems, as_json, cat.note)


@cli.command("genus-catalog")
@click.option("--g", "g", type=click.IntRange(2), required=True)
@click.option("--deg-max", "local_deg", type=click.IntRange(1), default=None)
@json_flag
def genus_catalog(g, local_deg, as_json):
    """Cremona-minimal ample systems of genus g, any number of points."""
    cat = enumerate_genus(g, _deg_max(local_deg))
    note = cat.note + ("" if cat.complete else "; catalog may be incomplete")
    _emit_catalog(cat.systems, as_json, note)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--deg-max", "local_deg", type=click.IntRange(1), default=None)
@json_flag
def gap(n, r, local_deg, as_json):
    """Is C^2 = min + 1 realised by a non-hyperelliptic system?"""
    rep = gap_analysis(n, r, _deg_max(local_deg))
    if _use_json(as_json):
        obj = {
            "n": n,
            "r": r,
            "minimum": rep.minimum,
            "target": rep.target,
            "verdict": rep.verdict,
            "expected": rep.expected,
            "witnesses": [format_literal(L) for L in rep.witnesses],
            "deg_max": rep.deg_max,
        }
        _emit(_dump(obj))
        return
    lines = [f"C²={rep.target}: {rep.verdict} (non-hyperelliptic minimum {rep.minimum}, degrees <= {rep.deg_max})"]
    lines += [f"  {_ls(L)}" for L in rep.witnesses]
    if rep.expected is not None and not rep.consistent:
        lines.append(f"  expected {rep.expected}")
    _emit("\n".join(lines))


@cli.command("verify-tables")
@click.option("--deg-max", "local_deg", type=click.IntRange(1), default=None)
@json_flag
def verify_tables_cmd(local_deg, as_json):
    """Regenerate the low self-intersection catalogs and compare."""
    rep = verify_tables(_deg_max(local_deg))
    if _use_json(as_json):
        obj = {
            "ok": rep.ok,
            "summary": rep.summary(),
            "minimal": rep.minimal.lines(),
            "low_c2": rep.low_c2.lines(),
            "low_c2_small_r": rep.low_c2_small_r.lines(),
        }
        _emit(_dump(obj))
    else:
        lines = [rep.summary()]
        lines += rep.minimal.lines() + rep.low_c2.lines()
        lines += [f"note {x}" for x in rep.low_c2_small_r.lines()]
        _emit("\n".join(lines))
    if not rep.ok:
        raise VerificationMismatch(rep.summary())


@cli.command()
@_literal_arg
@click.option("--prime", type=int, default=DEFAULT_PRIME, show_default=True)
@click.option("--seed", "local_seed", type=int, default=None)
@click.option("--trials", type=click.IntRange(1), default=3, show_default=True)
@json_flag
def oracle(literal, prime, local_seed, trials, as_json):
    """Dimension by rank of the interpolation matrix over F_p."""
    seed = local_seed if local_seed is not None else _settings().get("seed")
    cfg = OracleConfig(prime=prime, seed=42 if seed is None else seed, trials=trials)
    res = oracle_dim(literal, cfg)
    if _use_json(as_json):
        obj = {
            "literal": format_literal(literal),
            "dim": res.dim,
            "expected_dim": shgh_dim(literal),
            "prime": prime,
            "seed": cfg.seed,
            "trials": trials,
            "ranks": list(res.ranks),
        }
        _emit(_dump(obj))
    else:
        _emit(str(res.dim))


# -- entry point -------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, prog_name="planar-linsys", standalone_mode=False)
    except VerificationMismatch:
        return 2
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except DOMAIN_ERRORS as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        click.echo(f"error: {msg}", err=True)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


__all__ = ["cli", "info_record", "main", "run"]
