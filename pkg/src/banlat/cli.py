"""Batch driver: lemma verification, Banaschewski searches, exports.

Exit codes follow the CI contract: 0 for a clean pass, 1 for a verification
failure or an invalid lattice, 2 for usage errors (unknown lemma ids,
malformed files, bad flags).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import banfn as bf
from . import finlat as fl
from .verify import LEMMA_IDS, Params, run_all, run_lemma


def _load_lattice(path: str) -> fl.FiniteLattice:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{path}: not valid JSON (line {exc.lineno}, column {exc.colno})")
    try:
        return fl.FiniteLattice.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise click.UsageError(f"{path}: {exc}")


def _emit(payload: dict | list, json_out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if json_out:
        Path(json_out).write_text(text + "\n")
    else:
        click.echo(text)


@click.group()
def main() -> None:
    """Construct and machine-verify the balanced-triple lattice toolkit."""


@main.command()
@click.argument("lemma")
@click.option("--samples", type=int, default=None, help="sample count for randomized suites")
@click.option("--seed", type=int, default=0, show_default=True, help="RNG seed for sampling")
@click.option("--bound", type=int, default=None, help="support bound for complement searches")
@click.option("--n", "n_", type=int, default=None, help="index-universe size for subspace checks")
@click.option("--p", "p_", type=int, default=None, help="field characteristic for subspace checks")
@click.option("--json-out", type=click.Path(dir_okay=False), default=None)
def verify(lemma, samples, seed, bound, n_, p_, json_out) -> None:
    """Run one lemma suite by id, or 'all'. Known ids: see --help epilog."""
    params = Params(samples=samples, seed=seed, bound=bound, n=n_, p=p_)
    if lemma == "all":
        reports = run_all(params)
    elif lemma in LEMMA_IDS:
        reports = [run_lemma(lemma, params)]
    else:
        raise click.UsageError(
            f"unknown lemma id {lemma!r}; known ids: {', '.join(LEMMA_IDS)} (or 'all')"
        )
    for report in reports:
        click.echo(report.summary())
    if json_out:
        _emit([r.to_json() for r in reports], json_out)
    if not all(r.passed for r in reports):
        sys.exit(1)


verify.__doc__ = f"Run one lemma suite by id, or 'all'.\n\nKnown ids: {', '.join(LEMMA_IDS)}."


@main.command()
@click.argument("lattice_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("action", type=click.Choice(["enumerate", "range-search"]))
@click.option("--mask", default=None, help="comma-separated element indices for range-search")
@click.option("--json-out", type=click.Path(dir_okay=False), default=None)
def banfn(lattice_file, action, mask, json_out) -> None:
    """Enumerate Banaschewski functions on a lattice, or search for a given range."""
    lattice = _load_lattice(lattice_file)
    if action == "enumerate":
        functions = bf.enumerate_banaschewski(lattice)
        payload = {"count": len(functions), "functions": [list(f.table) for f in functions]}
        click.echo(f"found {len(functions)} Banaschewski function(s)")
        _emit(payload, json_out)
        return
    if mask is None:
        raise click.UsageError("range-search requires --mask")
    try:
        members = sorted({int(part) for part in mask.split(",") if part.strip() != ""})
    except ValueError:
        raise click.UsageError(f"--mask must be comma-separated integers, got {mask!r}")
    try:
        result = bf.is_range_of_some_banaschewski(lattice, members)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "mask": members,
        "found": result is not None,
        "function": list(result.table) if result else None,
    }
    click.echo("range realized" if result else "no Banaschewski function has this range")
    _emit(payload, json_out)


@main.command()
@click.argument("lattice_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json-out", type=click.Path(dir_okay=False), default=None)
def m3(lattice_file, json_out) -> None:
    """Build the balanced-triple lattice of the given lattice, as lattice JSON."""
    lattice = _load_lattice(lattice_file)
    result = fl.m3_of(lattice)
    _emit(result.to_json(), json_out)


@main.command("export-dot")
@click.argument("lattice_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def export_dot(lattice_file, out) -> None:
    """Emit the Hasse diagram of a lattice as deterministic DOT text."""
    lattice = _load_lattice(lattice_file)
    text = fl.to_dot(lattice)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


@main.command("check-lattice")
@click.argument("lattice_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json-out", type=click.Path(dir_okay=False), default=None)
def check_lattice(lattice_file, json_out) -> None:
    """Validate a lattice JSON file and report its basic properties."""
    try:
        data = json.loads(Path(lattice_file).read_text())
    except json.JSONDecodeError as exc:
        raise click.UsageError(
            f"{lattice_file}: not valid JSON (line {exc.lineno}, column {exc.colno})"
        )
    try:
        lattice = fl.FiniteLattice.from_json(data)
    except (fl.NotAPosetError, fl.NotALatticeError) as exc:
        click.echo(f"invalid: {exc}")
        _emit({"valid": False, "error": str(exc)}, json_out)
        sys.exit(1)
    except (ValueError, TypeError, KeyError) as exc:
        raise click.UsageError(f"{lattice_file}: {exc}")
    payload = {
        "valid": True,
        "n": lattice.n,
        "bottom": lattice.bottom,
        "top": lattice.top,
        "distributive": fl.is_distributive(lattice),
        "modular": fl.is_modular(lattice),
        "complemented": fl.is_complemented(lattice),
        "boolean": fl.is_boolean(lattice),
    }
    _emit(payload, json_out)


if __name__ == "__main__":
    main()
