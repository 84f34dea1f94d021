#!/usr/bin/env python3
"""
pptes-rank4 - CLI

Gebruik:
    python main.py --help                       Toon help
    python main.py construct omega 1 2 3 4 -o s.json
                                                Bouw een toestand
    python main.py analyze s.json               Volledig rapport
    python main.py kernel-pvs s.json            Productvectoren in de kern
    python main.py range-pvs s.json             Productvectoren in het bereik
    python main.py invariants s.json            J-invarianten en symbool
    python main.py census s.json                Symbolen over 720 ordeningen
    python main.py equiv a.json b.json          SLOCC-equivalentie
    python main.py canonicalize s.json          Parameters van ω
    python main.py checkerboard s.json          Checkerboard-klasse
    python main.py reduce '[...18 slots...]'    Reductie van checkerboard-blokken
    python main.py orbit 0.5 0.6666666667 -1 0.5
                                                Baan onder de stabilisator
    python main.py fixed-point                  Het vaste punt van α

Exitcodes: 0 succes/waar, 1 onwaar, 2 invoerfout, 3 numeriek onbeslist.
"""
import functools
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

try:
    import click
    from rich.console import Console
    from rich.logging import RichHandler
    from rich.table import Table
except ImportError:
    print("Installeer dependencies met: pip install -r requirements.txt")
    sys.exit(1)

from src import __version__
from src.analysis import analyze_state
from src.config.settings import STATE_KIND_NAMES_NL, SYMBOL_LETTER_NAMES_NL, settings
from src.core.errors import INDETERMINATE_ERRORS, INPUT_ERRORS, InvalidParameter, PPTESError
from src.core.qmat import normalize
from src.equivalence import canonical_form, checkerboard_class, checkerboard_reduce, is_equivalent, kernel_sextuple
from src.finder import SearchStatus, kernel_product_vectors, range_product_vectors
from src.invariants import (
    act_alpha,
    act_beta,
    alpha_fixed_point,
    apply_ordering,
    classify_symbol,
    orbit,
    relative_distance,
    sextuple_invariants,
    symbol_census,
    census_summary,
)
from src.outputs import read_state_file, to_jsonable, write_state_file
from src.outputs.state_files import complex_from_json
from src.states import (
    CanonicalParams,
    CheckerboardParams,
    CheckerboardRaw,
    checkerboard_canonical,
    checkerboard_raw,
    choi_state,
    omega,
    pyramid_fixture,
    tiles_fixture,
    upb_state,
)

console = Console(force_terminal=True)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3

CONSTRUCT_ARITY = {
    "omega": 4,
    "checkerboard": 2,
    "checkerboard-raw": 1,
    "choi": 1,
    "upb-pyramid": 0,
    "upb-tiles": 0,
}


def handle_errors(func):
    """Vertaal PPTESError naar exitcodes; de functie zelf geeft 0 of 1 terug."""
    @functools.wraps(func)
    @click.pass_context
    def wrapper(ctx, *args, **kwargs):
        try:
            code = func(ctx, *args, **kwargs) or EXIT_OK
        except INPUT_ERRORS as e:
            _error(ctx, e)
            code = EXIT_INPUT
        except INDETERMINATE_ERRORS as e:
            _error(ctx, e)
            code = EXIT_INDETERMINATE
        except PPTESError as e:
            _error(ctx, e)
            code = EXIT_INDETERMINATE
        ctx.exit(code)
    return wrapper


def _error(ctx, e: Exception) -> None:
    if ctx.obj["json"]:
        _echo_json(ctx, {"error": type(e).__name__, "message": str(e)})
    else:
        console.print(f"[red]{type(e).__name__}:[/red] {e}")


def _echo_json(ctx, data) -> None:
    click.echo(json.dumps(to_jsonable(data), indent=settings.json_indent))


def _params(values, count: int, kind: str) -> list[float]:
    if len(values) != count:
        raise InvalidParameter(f"{kind} verwacht {count} parameters, kreeg {len(values)}")
    try:
        return [float(v) for v in values]
    except ValueError as e:
        raise InvalidParameter(f"Ongeldige parameter: {e}") from e


def _raw_from_argument(argument: str) -> CheckerboardRaw:
    """18 slots als JSON-lijst, direct of uit een bestand."""
    text = argument
    if not argument.lstrip().startswith(("[", "{")):
        path = Path(argument)
        if not path.is_file():
            raise InvalidParameter(f"Geen JSON-lijst en geen bestand: {argument}")
        text = path.read_text(encoding="utf-8")
    try:
        values = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidParameter(f"Slots moeten een JSON-lijst zijn: {e}") from e
    if isinstance(values, dict):
        values = values.get("slots", values)
    if not isinstance(values, list):
        raise InvalidParameter("Slots moeten een JSON-lijst zijn")
    try:
        return CheckerboardRaw.from_values([complex_from_json(v) for v in values])
    except PPTESError as e:
        raise InvalidParameter(str(e)) from e


def _vector_table(title: str, vectors) -> Table:
    table = Table(title=title)
    table.add_column("#", justify="right")
    table.add_column("A")
    table.add_column("B")
    fmt = lambda v: ", ".join(f"{z:.6g}" for z in v)
    for i, v in enumerate(vectors):
        table.add_row(str(i), fmt(v.a), fmt(v.b))
    return table


@click.group()
@click.version_option(version=__version__, prog_name="pptes-rank4")
@click.option("--tol-rank", type=float, help="Relatieve rangdrempel ε_rank")
@click.option("--tol-match", type=float, help="Drempel ε_match voor invarianten")
@click.option("--json", "as_json", is_flag=True, help="JSON-uitvoer op stdout")
@click.option("--seed", type=int, help="Seed voor de gerandomiseerde kaartrotatie van de zoeker")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.pass_context
def cli(ctx, tol_rank, tol_match, as_json, seed, verbose):
    """pptes-rank4 - analyse van 3×3 PPTES van rang vier."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
    ctx.ensure_object(dict)
    try:
        ctx.obj["tol"] = settings.tolerances.with_overrides(eps_rank=tol_rank, eps_match=tol_match)
    except InvalidParameter as e:
        raise click.BadParameter(str(e))
    ctx.obj["json"] = as_json
    if seed is not None:
        settings.finder = replace(settings.finder, chart_seed=seed)


@cli.command()
@click.argument("kind", type=click.Choice(list(CONSTRUCT_ARITY)))
@click.argument("params", nargs=-1)
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), help="Uitvoerbestand (anders stdout)")
@click.option("--normalize", "do_normalize", is_flag=True, help="Normaliseer naar spoor 1")
@handle_errors
def construct(ctx, kind, params, output, do_normalize):
    """Bouw een toestand en schrijf het JSON-toestandsbestand."""
    tol = ctx.obj["tol"]
    if kind == "checkerboard-raw":
        if len(params) != 1:
            raise InvalidParameter("checkerboard-raw verwacht één JSON-lijst met 18 slots")
        raw = _raw_from_argument(params[0])
        rho = checkerboard_raw(raw, tol)
        provenance_params = [[z.real, z.imag] for z in raw.values()]
    else:
        values = _params(params, CONSTRUCT_ARITY[kind], kind)
        provenance_params = values
        if kind == "omega":
            rho = omega(CanonicalParams(*values), tol)
        elif kind == "checkerboard":
            rho = checkerboard_canonical(CheckerboardParams(*values), tol)
        elif kind == "choi":
            rho = choi_state(values[0], tol)
        elif kind == "upb-pyramid":
            rho = upb_state(pyramid_fixture(), tol)
        else:
            rho = upb_state(tiles_fixture(), tol)

    if do_normalize:
        rho = normalize(rho)
    text = write_state_file(rho, output, {"constructor": kind, "params": provenance_params, "normalized": do_normalize})
    if output is None:
        click.echo(text)
    elif not ctx.obj["json"]:
        console.print(f"[green]{STATE_KIND_NAMES_NL[kind]} opgeslagen in {output}[/green]")
    return EXIT_OK


@cli.command()
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def analyze(ctx, state):
    """Volledig rapport: birang, PPT, kernproductvectoren, census, kwadrupel."""
    report = analyze_state(read_state_file(state, ctx.obj["tol"]), ctx.obj["tol"])
    if ctx.obj["json"]:
        _echo_json(ctx, report.to_dict())
        return EXIT_OK

    table = Table(title=f"Analyse {state.name}")
    table.add_column("Veld")
    table.add_column("Waarde")
    table.add_row("Birang", str(report.birank))
    table.add_row("PPT", str(report.ppt))
    table.add_row("r² + s² ≤ 82", str(report.extreme_candidate))
    table.add_row("Kernproductvectoren", str(len(report.kernel_pvs)) if report.kernel_pvs else "-")
    table.add_row("Algemene positie", str(report.general_position))
    table.add_row("Census", report.census_summary or "-")
    table.add_row("ppPNNp-kwadrupel", ", ".join(f"{x:.12g}" for x in report.quadruple) if report.quadruple else "-")
    if report.checkerboard is not None:
        table.add_row("Checkerboard", str(report.checkerboard.is_checkerboard))
    console.print(table)
    for step, message in report.errors.items():
        console.print(f"[yellow]{step}: {message}[/yellow]")
    return EXIT_OK


def _print_search(ctx, title, result):
    if ctx.obj["json"]:
        _echo_json(ctx, result.to_dict())
    else:
        console.print(f"[bold]{title}[/bold]: {result.status.value}, {result.count} vectoren")
        if result.vectors:
            console.print(_vector_table(title, result.vectors))
        if result.message:
            console.print(f"[yellow]{result.message}[/yellow]")
    return EXIT_INDETERMINATE if result.status == SearchStatus.INDETERMINATE else EXIT_OK


@cli.command("kernel-pvs")
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def kernel_pvs(ctx, state):
    """Productvectoren in de kern."""
    rho = read_state_file(state, ctx.obj["tol"])
    return _print_search(ctx, "Kern", kernel_product_vectors(rho, ctx.obj["tol"], settings.finder))


@cli.command("range-pvs")
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def range_pvs(ctx, state):
    """Productvectoren in het bereik (leeg voor een verstrengelde PPTES)."""
    rho = read_state_file(state, ctx.obj["tol"])
    return _print_search(ctx, "Bereik", range_product_vectors(rho, ctx.obj["tol"], settings.finder))


def _parse_ordering(text: str) -> tuple[int, ...]:
    try:
        order = tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise InvalidParameter(f"Ongeldige ordening: {text}") from e
    if sorted(order) != list(range(6)):
        raise InvalidParameter(f"Ordening moet een permutatie van 0..5 zijn: {text}")
    return order


@cli.command()
@click.argument("state", type=click.Path(path_type=Path))
@click.option("--ordering", default="0,1,2,3,4,5", help="Permutatie van de zes kernvectoren, bv. 1,0,3,2,4,5")
@handle_errors
def invariants(ctx, state, ordering):
    """J-invarianten, symbool en kwadrupel van één ordening."""
    tol = ctx.obj["tol"]
    s = kernel_sextuple(read_state_file(state, tol), tol)
    t = sextuple_invariants(apply_ordering(s, _parse_ordering(ordering)), tol)
    symbol = classify_symbol(t, tol)
    data = {"tuple": list(t.as_tuple()), "symbol": symbol, "quadruple": list(t.quadruple)}
    if ctx.obj["json"]:
        _echo_json(ctx, data)
    else:
        table = Table(title=f"Invarianten ({symbol})")
        for name in ("J1A", "J2A", "J3A", "J1B", "J2B", "J3B"):
            table.add_column(name)
        table.add_row(*(f"{x:.12g}" for x in t.as_tuple()))
        console.print(table)
    return EXIT_OK


@cli.command()
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def census(ctx, state):
    """Symbool → multipliciteit over alle 720 ordeningen."""
    tol = ctx.obj["tol"]
    counts = symbol_census(kernel_sextuple(read_state_file(state, tol), tol), tol)
    summary = census_summary(counts)
    if ctx.obj["json"]:
        _echo_json(ctx, {"census": summary, "counts": counts})
    else:
        table = Table(title=f"Census ({summary})")
        table.add_column("Symbool")
        table.add_column("Aantal", justify="right")
        for symbol, count in counts.items():
            table.add_row(symbol, str(count))
        console.print(table)
        console.print(", ".join(f"{k} = {v}" for k, v in SYMBOL_LETTER_NAMES_NL.items()))
    return EXIT_OK


@cli.command()
@click.argument("first", type=click.Path(path_type=Path))
@click.argument("second", type=click.Path(path_type=Path))
@click.option("--prefilter", is_flag=True, help="Sla ordeningen met een ander symbool over")
@handle_errors
def equiv(ctx, first, second, prefilter):
    """SLOCC-equivalentie van twee toestanden (exit 0 ja, 1 nee)."""
    tol = ctx.obj["tol"]
    verdict = is_equivalent(read_state_file(first, tol), read_state_file(second, tol), tol, prefilter)
    if ctx.obj["json"]:
        _echo_json(ctx, verdict.to_dict())
    elif verdict.equivalent:
        console.print(f"[green]Equivalent[/green] via ordening {verdict.permutation} (residu {verdict.residual:.2e})")
    else:
        console.print(f"[red]Niet equivalent[/red] (kleinste residu {verdict.residual:.2e})")
    return EXIT_OK if verdict.equivalent else EXIT_FALSE


@cli.command()
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def canonicalize(ctx, state):
    """Parameters (a, b, c, d) van de equivalente canonieke vorm ω."""
    tol = ctx.obj["tol"]
    form = canonical_form(read_state_file(state, tol), tol)
    if ctx.obj["json"]:
        _echo_json(ctx, form.to_dict())
    else:
        p = form.params
        console.print(f"ω(a={p.a:.12g}, b={p.b:.12g}, c={p.c:.12g}, d={p.d:.12g}) via ordening {form.ordering}")
    return EXIT_OK


@cli.command()
@click.argument("state", type=click.Path(path_type=Path))
@handle_errors
def checkerboard(ctx, state):
    """Is de toestand equivalent aan een checkerboard (exit 0 ja, 1 nee)?"""
    tol = ctx.obj["tol"]
    verdict = checkerboard_class(read_state_file(state, tol), tol)
    if ctx.obj["json"]:
        _echo_json(ctx, verdict.to_dict())
    elif verdict.is_checkerboard:
        p = verdict.params
        console.print(f"[green]Checkerboard[/green]: u={p.u:.12g}, v={p.v:.12g} (λ={verdict.lam:.12g}, μ={verdict.mu:.12g})")
    else:
        console.print("[red]Geen checkerboard[/red]")
    return EXIT_OK if verdict.is_checkerboard else EXIT_FALSE


@cli.command()
@click.argument("slots")
@handle_errors
def reduce(ctx, slots):
    """Reduceer 18 checkerboard-slots (JSON-lijst of bestand) naar (u, v)."""
    params = checkerboard_reduce(_raw_from_argument(slots), ctx.obj["tol"])
    if ctx.obj["json"]:
        _echo_json(ctx, params.to_dict())
    else:
        console.print(f"Normaalvorm: u={params.u:.12g}, v={params.v:.12g}")
    return EXIT_OK


@cli.command(name="orbit", context_settings={"ignore_unknown_options": True})
@click.argument("point", nargs=4, type=float)
@handle_errors
def orbit_cmd(ctx, point):
    """Baan van (x, y, z, w) onder de stabilisator, gesorteerd."""
    points = orbit(point, ctx.obj["tol"])
    if ctx.obj["json"]:
        _echo_json(ctx, {"size": len(points), "points": points})
    else:
        table = Table(title=f"Baan ({len(points)} punten)")
        for name in ("x", "y", "z", "w"):
            table.add_column(name, justify="right")
        for p in points:
            table.add_row(*(f"{v:.12g}" for v in p))
        console.print(table)
    return EXIT_OK


@cli.command("fixed-point")
@handle_errors
def fixed_point(ctx):
    """Het vaste punt van α in R, gecontroleerd onder α en β."""
    tol = ctx.obj["tol"]
    point = alpha_fixed_point(tol)
    residuals = {
        "alpha": relative_distance(act_alpha(point, tol), point),
        "beta": relative_distance(act_beta(point, tol), point),
    }
    fixed = all(r < 1e-9 for r in residuals.values())
    if ctx.obj["json"]:
        _echo_json(ctx, {"point": point, "residuals": residuals, "fixed": fixed})
    else:
        console.print("Vast punt: (" + ", ".join(f"{v:.12g}" for v in point) + ")")
        for name, r in residuals.items():
            console.print(f"  {name}: residu {r:.2e}")
    return EXIT_OK if fixed else EXIT_FALSE


if __name__ == "__main__":
    cli(obj={})
