"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import json
import os
import re
import sys

import click

from . import aut, checks
from .cayley import PRESETS, build_cayley, preset_generators
from .errors import CapExceeded
from .perm import Permutation

EXIT_VERIFY_FAIL = 1
EXIT_CAP = 3

_EXPLICIT = re.compile(r"^\s*\(")


def parse_generators(spec: str, n: int) -> tuple[Permutation, ...]:
    """A preset name (complete, star, path, cycle) or an explicit list like
    "(1,2),(2,3),(3,4)"."""
    if not _EXPLICIT.match(spec):
        return preset_generators(n, spec.strip())
    gens = []
    for token in re.findall(r"\([0-9,\s]*\)", spec):
        p = Permutation.parse(token, n)
        if not p.is_transposition:
            raise ValueError(f"{token} is not a transposition")
        gens.append(p)
    rest = re.sub(r"\([0-9,\s]*\)|[,\s]", "", spec)
    if rest or not gens:
        raise ValueError(f"cannot parse generator list {spec!r}")
    return tuple(gens)


def _build_graph(n: int, gens: str, max_n: int = 5):
    try:
        generators = parse_generators(gens, n)
        return build_cayley(n, generators, cap=max_n)
    except CapExceeded:
        raise
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=not text.endswith("\n"))


def _cap_exit(exc: CapExceeded) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_CAP)


@click.group()
@click.option("--cap", type=int, default=None, help="Group-closure element cap (or set CAYLEYLAB_CAP_ELEMENTS).")
def main(cap: int | None) -> None:
    """Cayley graphs of S_n over transposition sets: build, automorphisms,
    normality, and the statement verification suite."""
    if cap is not None:
        os.environ["CAYLEYLAB_CAP_ELEMENTS"] = str(cap)


@main.command()
@click.option("--n", type=int, required=True, help="Symmetric group degree.")
@click.option("--gens", default="complete", show_default=True, help=f"Preset ({', '.join(PRESETS)}) or explicit list.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "dimacs"]), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
@click.option("--max-n", type=int, default=5, show_default=True, help="Whole-graph size cap (hard maximum 6).")
def build(n: int, gens: str, fmt: str, out: str | None, max_n: int) -> None:
    """Construct the Cayley graph and export or summarize it."""
    try:
        X = _build_graph(n, gens, max_n)
    except CapExceeded as exc:
        _cap_exit(exc)
    summary = X.summary()
    click.echo(
        "Cay(S_{n}, {g}): {v} vertices, {e} edges, {d}-regular, layer sizes {ls}".format(
            n=n, g=gens, v=summary["vertices"], e=summary["edges"],
            d=summary["degree"], ls=summary["layer_sizes"],
        )
    )
    if fmt == "json":
        _emit(json.dumps(X.to_json_dict(), indent=2), out)
    elif fmt == "dimacs":
        _emit(X.to_dimacs(), out)
    elif out:
        _emit(json.dumps(summary, indent=2), out)


@main.command("aut")
@click.option("--n", type=int, required=True)
@click.option("--gens", default="complete", show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for the search.")
@click.option("--backend", type=click.Choice(["auto", "compiled", "python"]), default="auto", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def aut_cmd(n: int, gens: str, jobs: int, backend: str, out: str | None) -> None:
    """Full automorphism group report (order, stabilizer, little group,
    restriction, normality)."""
    try:
        X = _build_graph(n, gens)
        report = aut.aut_report(X, jobs=jobs, backend=backend)
    except CapExceeded as exc:
        _cap_exit(exc)
    click.echo(f"|Aut| = {report['order']}")
    _emit(json.dumps(report, indent=2), out)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--gens", default="complete", show_default=True)
@click.option("--backend", type=click.Choice(["auto", "compiled", "python"]), default="auto", show_default=True)
def normality(n: int, gens: str, backend: str) -> None:
    """Decide whether the graph is a normal Cayley graph, with a certificate."""
    try:
        X = _build_graph(n, gens)
        report = aut.is_normal_cayley(X, backend=backend)
    except CapExceeded as exc:
        _cap_exit(exc)
    click.echo("NORMAL" if report.normal else "NOT NORMAL")
    click.echo(f"conjugation test: {'normal' if report.conjugation.normal else 'not normal'}")
    if report.little_group_order is not None:
        click.echo(
            f"little group test (n >= 5): order {report.little_group_order} -> "
            f"{'normal' if report.little_group_normal else 'not normal'}"
        )
    if report.conjugation.witness is not None:
        g, n_map, conj = report.conjugation.witness
        click.echo("witness: conjugating the translation below lands outside the translation group")
        click.echo(f"  automorphism g: vertex map {_short(g.images)}")
        click.echo(f"  translation rho: vertex map {_short(n_map.images)}")
        click.echo(f"  g^-1 rho g: vertex map {_short(conj.images)}")


def _short(images, head: int = 12) -> str:
    text = ",".join(str(x) for x in images[:head])
    return f"[{text}{',...' if len(images) > head else ''}]"


@main.command()
@click.argument("statement")
@click.option("--n", type=int, required=True)
@click.option("--gens", default="complete", show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--backend", type=click.Choice(["auto", "compiled", "python"]), default="auto", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampled (non-exhaustive) checks.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None, help="Write a JSON report.")
def verify(statement: str, n: int, gens: str, jobs: int, backend: str, seed: int, report_path: str | None) -> None:
    """Run one statement check, or "all"; prints one PASS/FAIL line each.

    Known statement ids: all, """ + ", ".join(checks.CHECK_IDS) + "."
    ctx = checks.CheckContext(n=n, gens_name=gens, jobs=jobs, backend=backend, seed=seed)
    if statement != "all" and statement not in checks.CHECK_IDS:
        raise click.UsageError(
            f"unknown statement id {statement!r}; choose from all, {', '.join(checks.CHECK_IDS)}"
        )
    try:
        if statement == "all":
            results = checks.run_all(ctx)
        else:
            results = [checks.run_check(statement, ctx)]
    except CapExceeded as exc:
        _cap_exit(exc)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    for res in results:
        click.echo(res.line())
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            json.dump([r.to_json_dict() for r in results], fh, indent=2)
        click.echo(f"wrote {report_path}")
    if any(r.status == checks.FAIL for r in results):
        sys.exit(EXIT_VERIFY_FAIL)


if __name__ == "__main__":
    main()
