"""The full verification run behind ``hp0 report``."""

from contextlib import nullcontext

from rich.progress import Progress, SpinnerColumn, TextColumn

from hp0.bc import bc_faces, broken_circuits, dual_top_h_check, fh_vectors, h_vector, ih_betti_report
from hp0.config import (
    FIBER_CHECKS,
    HP0_ORACLE_D_MAX,
    HP0_ORACLE_MAX_N,
    HP0_SHEAF_D_MAX,
)
from hp0.console import console
from hp0.matroid import GaleFrame, flats, kirwan_degree2_lines, localize, signed_circuits
from hp0.module import (
    FreenessError,
    central_fiber_dims,
    circuit_sufficiency_check,
    degeneration_check,
    fiber_dimension,
    freeness_certificate,
    hp0_hilbert,
    invariant_bracket_oracle,
    quotient_hilbert,
    random_lambda,
)
from hp0.record import FiberCheck, MESBlock, Report, RunConfig
from hp0.sheaf import mes_check

STAGES = ("circuits", "hilbert", "fibers", "degeneration", "oracle", "complexes", "sheaves")


def _one_based(cols) -> list[int]:
    return [i + 1 for i in sorted(cols)]


def _padded(h: tuple[int, ...], length: int) -> list[int]:
    return [h[d] if d < len(h) else 0 for d in range(length)]


def fiber_checks(frame: GaleFrame, h: tuple[int, ...], seed: int, count: int = FIBER_CHECKS) -> list[FiberCheck]:
    """Generic-fiber dimensions at seeded random lambda, truncated two degrees above deg h."""
    truncation = len(h) + 1
    out = []
    for i in range(count):
        special = fiber_dimension(frame, random_lambda(frame.k, seed + i), truncation, seed=seed + i)
        out.append(
            FiberCheck(
                lam=[str(v) for v in special.lam],
                dim=special.dim,
                seed=special.seed,
                truncation=truncation,
                stabilized=special.stabilized,
                expected=sum(h),
            )
        )
    return out


def build_report(frame: GaleFrame, config: RunConfig, show_progress: bool = True) -> Report:
    d_max = config.d_max
    failures: list[str] = []
    progress = (
        Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"), console=console)
        if show_progress
        else nullcontext()
    )

    with progress:
        task = progress.add_task("circuits", total=len(STAGES)) if show_progress else None

        def stage(name: str) -> None:
            if task is not None:
                progress.update(task, description=name, advance=1)

        circuits = signed_circuits(frame)

        stage("hilbert")
        hilbert = hp0_hilbert(frame, d_max)

        stage("fibers")
        h = h_vector(frame)
        central = central_fiber_dims(frame, d_max)
        if list(central.dims) != _padded(h, d_max + 1):
            failures.append(f"central fiber {list(central.dims)} differs from h-vector {list(h)}")
        try:
            cert = freeness_certificate(frame, d_max)
            h_poly = list(cert.h_poly)
            freeness_ok = True
        except FreenessError as e:
            h_poly = []
            freeness_ok = False
            failures.append(f"freeness: {e}")
        fibers = fiber_checks(frame, h, config.seed)
        for check in fibers:
            if not check.ok:
                failures.append(f"fiber at lambda=({', '.join(check.lam)}): dim {check.dim}, expected {check.expected}")

        stage("degeneration")
        degeneration = degeneration_check(frame, d_max)
        if not degeneration.ok:
            bad = [c.degree for c in degeneration.degrees if not c.equal]
            failures.append(f"in(J) differs from the Stanley-Reisner ideal in degrees {bad}")
        if not degeneration.containment_ok:
            missing = [c.degree for c in degeneration.degrees if not c.contains]
            failures.append(f"in(J) misses Stanley-Reisner monomials in degrees {missing}")
        sufficiency = circuit_sufficiency_check(frame, min(d_max, HP0_SHEAF_D_MAX), seed=config.seed)
        if not sufficiency.ok:
            failures.append(f"{len(sufficiency.failures)} non-circuit derivations fall outside the circuit span")

        stage("oracle")
        oracle = oracle_ok = None
        if frame.n <= HP0_ORACLE_MAX_N:
            oracle = invariant_bracket_oracle(frame, min(d_max, HP0_ORACLE_D_MAX)).dims
            oracle_ok = oracle == hilbert.dims[: len(oracle)]
            if not oracle_ok:
                failures.append(f"bracket oracle {list(oracle)} differs from the presentation")

        stage("complexes")
        fh = fh_vectors(bc_faces(frame), frame.k)
        betti = ih_betti_report(frame, d_max)
        dual = dual_top_h_check(frame)
        if not dual.ok:
            failures.append(f"sum of h = {dual.bc_sum} but the dual top h-number is {dual.dual_top}")

        stage("sheaves")
        sheaf_d = min(d_max, HP0_SHEAF_D_MAX)
        lattice = flats(frame)
        stalks = {f.label(): list(quotient_hilbert(localize(frame, f), sheaf_d).dims) for f in lattice.flats}
        mes = mes_check(frame, sheaf_d)
        failures.extend(mes.failures if mes.applicable else ())

    return Report(
        n=frame.n,
        k=frame.k,
        unimodular=True,
        circuits=[list(c.coeffs) for c in circuits],
        kirwan_lines=_one_based(kirwan_degree2_lines(frame)),
        hilbert=list(hilbert.dims),
        h_poly=h_poly,
        central_fiber=list(central.dims),
        freeness_ok=freeness_ok,
        degeneration_ok=degeneration.ok,
        containment_ok=degeneration.containment_ok,
        circuit_sufficiency_ok=sufficiency.ok,
        fiber_checks=fibers,
        oracle=list(oracle) if oracle is not None else None,
        oracle_ok=oracle_ok,
        broken_circuits=[_one_based(b) for b in broken_circuits(frame)],
        f=list(fh.f),
        h=list(fh.h),
        ih_betti={str(d): v for d, v in betti.betti(config.paper_degrees).items()},
        dual_top_h_ok=dual.ok,
        flats=[f.label() for f in lattice.flats],
        stalks=stalks,
        mes=MESBlock(
            applicable=mes.applicable,
            bottom_ok=mes.bottom_ok,
            free_ok=mes.free_ok,
            flabby_ok=mes.flabby_ok,
            functorial_ok=all(s.functorial_ok for s in mes.sheaves),
            degeneration_ok=mes.degeneration_ok,
            mode=str(mes.mode),
            opens=mes.opens,
            d_max=mes.d_max,
            indecomposability=mes.indecomposability,
            failures=list(mes.failures),
        ),
        failures=failures,
        ok=not failures,
    )
