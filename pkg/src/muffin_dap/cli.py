"""Command-line interface: muffin values, 3M-DAP solving, family scans, verification and the oracle.

Exit codes: 0 ok, 2 usage or parse error, 3 invalid problem, 4 oracle scale exceeded, 5 self-check failure.
"""

from __future__ import annotations

import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import click

from .classify import classify
from .exact import rat_format, rat_parse
from .muffin import muffin_value
from .oracle import ORACLE_MAX_M, ORACLE_MAX_S, brute_force_value, validate_solution
from .problem import (FamilyParams, MuffinSpec, family_members, muffin_to_dap3, problem_from_json,
                      solution_from_json, solution_to_json, validate_dap3)
from .recursive import solve_huddleston, solve_recursive

__all__ = ["main"]

EXIT_USAGE, EXIT_INVALID, EXIT_SCALE, EXIT_SELFCHECK = 2, 3, 4, 5


def _fail(msg: str, code: int):
    click.echo(msg, err=True)
    sys.exit(code)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail(f"cannot read {path}: {exc}", EXIT_USAGE)


def _self_check(p, sol) -> None:
    err = validate_solution(p, sol)
    if err:
        _fail(f"self-check failed: {err}", EXIT_SELFCHECK)


def _decimal(r: Fraction, places: int) -> str:
    q = round(r, places)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole = q.numerator // q.denominator
    frac = q - whole
    digits = str(int(frac * 10 ** places)).rjust(places, "0") if places else ""
    return f"{sign}{whole}" + (f".{digits}" if places else "")


@click.group()
def main():
    """Exact solvers for three-matrix division and assignment problems and muffin problems."""


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@click.argument("s", type=click.IntRange(min=1))
@click.option("--solution", is_flag=True, help="Also print the fully-constrained solution as JSON.")
def muffin(m, s, solution):
    """Compute f(m, s)."""
    ans = muffin_value(m, s, with_solution=solution)
    click.echo(f"f = {rat_format(ans.f)}")
    click.echo(f"g = {rat_format(ans.g) if ans.g is not None else '-'}")
    click.echo(f"route = {ans.route.value}")
    if solution:
        if ans.solution is None:
            click.echo("null")
            return
        _self_check(muffin_to_dap3(MuffinSpec(m, s)), ans.solution)
        click.echo(json.dumps(solution_to_json(ans.solution)))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--huddleston", is_flag=True, help="Use the variant that recurses on type-1 sub-problems.")
def dap(file, huddleston):
    """Solve the 3M-DAP described by a JSON file."""
    try:
        p = problem_from_json(_load_json(file))
    except ValueError as exc:
        _fail(f"bad problem: {exc}", EXIT_USAGE)
    err = validate_dap3(p)
    if err:
        _fail(f"invalid problem: violates {err}", EXIT_INVALID)
    sol = (solve_huddleston if huddleston else solve_recursive)(p)
    _self_check(p, sol)
    click.echo(json.dumps(solution_to_json(sol)))


def _scan_row(p):
    sol = solve_recursive(p)
    err = validate_solution(p, sol)
    c = classify(p)
    return p.x_u, p.s_u, p.s_v, sol.value, c.depth_N, c.b, c.kind, err


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("t", type=int)
@click.argument("u", type=int)
@click.argument("v", type=int)
@click.argument("lam", metavar="LAMBDA")
@click.argument("gamma")
@click.option("--s", "s", type=click.IntRange(min=1), required=True, help="Family scale.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Worker processes.")
@click.option("--decimal", "places", type=click.IntRange(min=0), default=None, help="Add a rounded g column.")
def family(t, u, v, lam, gamma, s, jobs, places):
    """Scan every member of a family as CSV, in decreasing x."""
    try:
        fam = FamilyParams(t, u, v, rat_parse(lam), rat_parse(gamma), s)
        fam.check()
    except ValueError as exc:
        _fail(f"bad family: {exc}", EXIT_USAGE)
    members = family_members(fam)
    if jobs > 1 and len(members) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_scan_row, members, chunksize=8))
    else:
        rows = [_scan_row(p) for p in members]
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["x", "s_u", "s_v", "g", "N", "b", "kind"] + (["g_decimal"] if places is not None else []))
    for x, s_u, s_v, g, n, b, kind, err in rows:
        if err:
            _fail(f"self-check failed at x = {rat_format(x)}: {err}", EXIT_SELFCHECK)
        row = [rat_format(x), s_u, s_v, rat_format(g), n, "" if b is None else b, kind]
        out.writerow(row + ([_decimal(g, places)] if places is not None else []))


@main.command()
@click.argument("problem", type=click.Path(dir_okay=False))
@click.argument("solution", type=click.Path(dir_okay=False))
def verify(problem, solution):
    """Check a solution file against a problem file."""
    try:
        p = problem_from_json(_load_json(problem))
        sol = solution_from_json(_load_json(solution))
    except ValueError as exc:
        _fail(f"parse error: {exc}", EXIT_USAGE)
    err = validate_solution(p, sol)
    if err:
        _fail(err, 1)
    click.echo("OK")


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@click.argument("s", type=click.IntRange(min=1))
def oracle(m, s):
    """Brute-force f(m, s) and compare with the recursive solver."""
    if m > ORACLE_MAX_M or s > ORACLE_MAX_S:
        _fail(f"oracle limited to m <= {ORACLE_MAX_M}, s <= {ORACLE_MAX_S}", EXIT_SCALE)
    if not m > s or (2 * m) % s == 0:
        _fail("oracle needs m > s and 2m/s non-integral", EXIT_USAGE)
    value = brute_force_value(m, s)
    agree = value == muffin_value(m, s).f
    click.echo(f"{rat_format(value)} {'AGREE' if agree else 'DISAGREE'}")
    if not agree:
        sys.exit(EXIT_SELFCHECK)


if __name__ == "__main__":
    main()
