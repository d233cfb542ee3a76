import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import ValidationError

from hp0.bc import bc_faces, broken_circuits, dual_top_h_check, fh_vectors, ih_betti_report
from hp0.cli.frames import read_frame
from hp0.cli.report import build_report, fiber_checks
from hp0.config import HP0_D_MAX, HP0_SEED, HP0_SHEAF_D_MAX
from hp0.console import console
from hp0.matroid import FrameError, GaleFrame, kirwan_degree2_lines, signed_circuits
from hp0.module import (
    FreenessError,
    Quotient,
    central_fiber_dims,
    degeneration_check,
    fiber_dimension,
    freeness_certificate,
    quotient_hilbert,
)
from hp0.poly import trim
from hp0.record import OutputFormat, RunConfig
from hp0.sheaf import SheafModel, build_topology, mes_check

app = typer.Typer(help="Degree-zero Poisson homology of hypertoric varieties, checked against its combinatorics.")

FrameArg = Annotated[Path, typer.Argument(help="Frame file: 'k n' header plus k rows, or .json")]
DMax = Annotated[int, typer.Option("--d-max", help="Highest combinatorial degree to compute")]
Ordering = Annotated[Optional[str], typer.Option("--ordering", help='Reorder the ground set first, e.g. "3,1,2"')]
Seed = Annotated[int, typer.Option("--seed")]
Format = Annotated[OutputFormat, typer.Option("--format", help="json or tsv")]
PaperDegrees = Annotated[bool, typer.Option("--paper-degrees", help="Report degrees doubled (e_i in degree 2)")]

EXIT_INPUT = 1
EXIT_IDENTITY = 2


def _load(command: str, path: Path, **settings) -> tuple[RunConfig, GaleFrame]:
    """Validate settings and read the frame. Any input problem ends the run with exit 1."""
    try:
        config = RunConfig(input=path, command=command, **settings)
        frame = config.apply(read_frame(path))
    except ValidationError as e:
        err = e.errors()[0]
        print(f"Error: {'.'.join(map(str, err['loc'])) or 'input'}: {err['msg']}", file=sys.stderr)
        raise typer.Exit(EXIT_INPUT)
    except FrameError as e:
        print(f"Error: {path}: {e}", file=sys.stderr)
        raise typer.Exit(EXIT_INPUT)
    return config, frame


def _emit(config: RunConfig, payload: dict, table: list[list]) -> None:
    if config.format is OutputFormat.TSV:
        for row in table:
            print("\t".join(str(v) for v in row))
    else:
        print(json.dumps(payload, indent=2))


def _graded(config: RunConfig, dims) -> list[list]:
    return [[config.degree_label(d), v] for d, v in enumerate(dims)]


@app.command()
def circuits(frame_file: FrameArg, ordering: Ordering = None, fmt: Format = OutputFormat.JSON):
    """Signed circuits, lowest nonzero entry +1."""
    config, frame = _load("circuits", frame_file, ordering=ordering, format=fmt)
    found = signed_circuits(frame)
    payload = {
        "circuits": [{"coeffs": list(c.coeffs), "support": [i + 1 for i in c.ordered_support]} for c in found],
        "kirwan_lines": [i + 1 for i in sorted(kirwan_degree2_lines(frame))],
    }
    _emit(config, payload, [list(c.coeffs) for c in found])


@app.command()
def hilbert(
    frame_file: FrameArg,
    d_max: DMax = HP0_D_MAX,
    ordering: Ordering = None,
    fmt: Format = OutputFormat.JSON,
    paper_degrees: PaperDegrees = False,
    sheaf: Annotated[Quotient, typer.Option("--sheaf", help="m: quotient by J; rbc: Stanley-Reisner")] = Quotient.J,
):
    """Graded dimensions of C[e]/J (or of the Stanley-Reisner quotient)."""
    config, frame = _load(
        "hilbert", frame_file, d_max=d_max, ordering=ordering, format=fmt, paper_degrees=paper_degrees
    )
    dims = quotient_hilbert(frame, config.d_max, sheaf).dims
    payload = {
        "k": frame.k,
        "degrees": [config.degree_label(d) for d in range(len(dims))],
        "hilbert": list(dims),
    }
    _emit(config, payload, _graded(config, dims))


@app.command()
def betti(
    frame_file: FrameArg,
    d_max: DMax = HP0_D_MAX,
    ordering: Ordering = None,
    fmt: Format = OutputFormat.JSON,
    paper_degrees: PaperDegrees = False,
):
    """Broken circuit complex, its f- and h-vectors, and the IH Betti numbers they give."""
    config, frame = _load(
        "betti", frame_file, d_max=d_max, ordering=ordering, format=fmt, paper_degrees=paper_degrees
    )
    fh = fh_vectors(bc_faces(frame), frame.k)
    report = ih_betti_report(frame, config.d_max)
    dual = dual_top_h_check(frame)
    payload = {
        "broken_circuits": [[i + 1 for i in sorted(b)] for b in broken_circuits(frame)],
        "f": list(fh.f),
        "h": list(fh.h),
        "ih_betti": {str(d): v for d, v in report.betti(config.paper_degrees).items()},
        "equivariant": {str(d): v for d, v in report.equivariant(config.paper_degrees).items()},
        "dual_top_h_ok": dual.ok,
    }
    _emit(config, payload, _graded(config, fh.h))
    if not dual.ok:
        raise typer.Exit(EXIT_IDENTITY)


@app.command()
def degenerate(
    frame_file: FrameArg,
    d_max: DMax = HP0_D_MAX,
    ordering: Ordering = None,
    fmt: Format = OutputFormat.JSON,
    paper_degrees: PaperDegrees = False,
):
    """Compare the graded-lex initial space of J with the Stanley-Reisner monomials, degree by degree."""
    config, frame = _load(
        "degenerate", frame_file, d_max=d_max, ordering=ordering, format=fmt, paper_degrees=paper_degrees
    )
    report = degeneration_check(frame, config.d_max)
    rows = [
        [config.degree_label(c.degree), c.initial, c.stanley_reisner, c.equal, c.contains] for c in report.degrees
    ]
    payload = {
        "degrees": [
            {"degree": r[0], "initial": r[1], "stanley_reisner": r[2], "equal": r[3], "contains": r[4]} for r in rows
        ],
        "degeneration_ok": report.ok,
        "containment_ok": report.containment_ok,
    }
    _emit(config, payload, rows)
    if not report.ok:
        raise typer.Exit(EXIT_IDENTITY)


def _parse_lambda(text: str, k: int) -> tuple[Fraction, ...]:
    try:
        lam = tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        print(f"Error: --lambda must be comma-separated rationals, got {text!r}", file=sys.stderr)
        raise typer.Exit(EXIT_INPUT)
    if len(lam) != k:
        print(f"Error: --lambda has {len(lam)} entries, frame has k={k}", file=sys.stderr)
        raise typer.Exit(EXIT_INPUT)
    return lam


@app.command()
def fiber(
    frame_file: FrameArg,
    d_max: DMax = HP0_D_MAX,
    ordering: Ordering = None,
    seed: Seed = HP0_SEED,
    fmt: Format = OutputFormat.JSON,
    paper_degrees: PaperDegrees = False,
    lam: Annotated[Optional[str], typer.Option("--lambda", help='Point of g*, e.g. "1,2"')] = None,
    truncation: Annotated[Optional[int], typer.Option("--truncation", help="Degree bound D; default deg h + 2")] = None,
):
    """Central fiber, freeness certificate and generic fiber dimensions."""
    config, frame = _load(
        "fiber", frame_file, d_max=d_max, ordering=ordering, seed=seed, format=fmt, paper_degrees=paper_degrees
    )
    central = central_fiber_dims(frame, config.d_max)
    h = trim(central.dims)
    payload: dict = {"k": frame.k, "central_fiber": list(central.dims)}
    try:
        payload["h_poly"] = list(freeness_certificate(frame, config.d_max).h_poly)
        payload["free"] = True
    except FreenessError as e:
        payload["h_poly"] = list(h)
        payload["free"] = False
        console.print(f"[yellow]Warning:[/yellow] {e}", highlight=False)

    if lam is not None:
        bound = truncation if truncation is not None else len(h) + 1
        special = fiber_dimension(frame, _parse_lambda(lam, frame.k), bound)
        checks = [
            {
                "lambda": [str(v) for v in special.lam],
                "dim": special.dim,
                "truncation": bound,
                "stabilized": special.stabilized,
            }
        ]
    else:
        checks = [c.model_dump(by_alias=True) for c in fiber_checks(frame, h, config.seed)]
    payload["fiber_checks"] = checks
    _emit(config, payload, _graded(config, central.dims))
    if not payload["free"] or not all(c["stabilized"] for c in checks):
        raise typer.Exit(EXIT_IDENTITY)


@app.command()
def flats(frame_file: FrameArg, ordering: Ordering = None, fmt: Format = OutputFormat.JSON):
    """Lattice of flats with the minimal open set below each flat."""
    config, frame = _load("flats", frame_file, ordering=ordering, format=fmt)
    topology = build_topology(frame)
    lattice = topology.lattice
    entries = [
        {
            "flat": f.label(),
            "rank": f.rank,
            "open": [lattice.flats[j].label() for j in sorted(topology.minimal_open(i))],
        }
        for i, f in enumerate(lattice.flats)
    ]
    payload = {"flats": entries, "mode": str(topology.mode), "opens": len(topology.opens)}
    _emit(config, payload, [[e["flat"], e["rank"], len(e["open"])] for e in entries])


@app.command()
def sheaf(
    frame_file: FrameArg,
    d_max: DMax = HP0_SHEAF_D_MAX,
    ordering: Ordering = None,
    fmt: Format = OutputFormat.JSON,
    paper_degrees: PaperDegrees = False,
    which: Annotated[Quotient, typer.Option("--sheaf", help="m or rbc: which stalks to list")] = Quotient.J,
):
    """Stalks on the lattice of flats and the minimal extension sheaf checks for both sheaves."""
    config, frame = _load(
        "sheaf", frame_file, d_max=d_max, ordering=ordering, format=fmt, paper_degrees=paper_degrees
    )
    with console.status("Computing stalks..."):
        model = SheafModel(frame, which, config.d_max)
    with console.status("Checking sheaf conditions..."):
        report = mes_check(frame, config.d_max)
    stalks = {s.flat.label(): list(s.hilbert.dims) for s in model.stalks}
    payload = {
        "sheaf": str(which),
        "stalks": stalks,
        "mes": {
            "applicable": report.applicable,
            "bottom_ok": report.bottom_ok,
            "free_ok": report.free_ok,
            "flabby_ok": report.flabby_ok,
            "functorial_ok": all(s.functorial_ok for s in report.sheaves),
            "degeneration_ok": report.degeneration_ok,
            "mode": str(report.mode),
            "indecomposability": report.indecomposability,
            "failures": list(report.failures),
        },
    }
    _emit(config, payload, [[label, *dims] for label, dims in stalks.items()])
    if not report.ok:
        raise typer.Exit(EXIT_IDENTITY)


@app.command()
def report(
    frame_file: FrameArg,
    d_max: DMax = HP0_D_MAX,
    ordering: Ordering = None,
    seed: Seed = HP0_SEED,
    paper_degrees: PaperDegrees = False,
):
    """Run every check and print one JSON document. Exit 2 if any identity fails."""
    config, frame = _load(
        "report", frame_file, d_max=d_max, ordering=ordering, seed=seed, paper_degrees=paper_degrees
    )
    result = build_report(frame, config, show_progress=console.is_terminal)
    print(result.model_dump_json(by_alias=True, indent=2))
    if not result.ok:
        raise typer.Exit(EXIT_IDENTITY)


if __name__ == "__main__":
    app()
