"""Degreewise checks of the minimal extension sheaf conditions for M and R^bc.

Indecomposability is not a finite degreewise property and is not checked; the
report says so explicitly.
"""

from dataclasses import dataclass, field

from hp0.matroid import GaleFrame, localize
from hp0.module import FreenessError, Quotient, degeneration_check, freeness_certificate
from hp0.sheaf.stalks import RestrictionError, SheafModel
from hp0.sheaf.topology import PosetTopology, TopologyMode, build_topology


@dataclass(frozen=True)
class SheafCheck:
    quotient: Quotient
    bottom_ok: bool
    free_ok: bool
    flabby_ok: bool
    functorial_ok: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.bottom_ok and self.free_ok and self.flabby_ok and self.functorial_ok


@dataclass(frozen=True)
class MESReport:
    mode: TopologyMode
    opens: int
    d_max: int
    sheaves: tuple[SheafCheck, ...]
    degeneration_ok: bool
    failures: tuple[str, ...] = ()
    applicable: bool = True
    indecomposability: str = field(default="not checked")

    @property
    def bottom_ok(self) -> bool:
        return all(s.bottom_ok for s in self.sheaves)

    @property
    def free_ok(self) -> bool:
        return all(s.free_ok for s in self.sheaves)

    @property
    def flabby_ok(self) -> bool:
        return all(s.flabby_ok for s in self.sheaves)

    @property
    def ok(self) -> bool:
        return not self.applicable or (all(s.ok for s in self.sheaves) and self.degeneration_ok)


def _check_sheaf(frame: GaleFrame, topology: PosetTopology, quotient: Quotient, d_max: int) -> SheafCheck:
    model = SheafModel(frame, quotient, d_max)
    lattice = model.lattice
    failures = []

    bottom = model.stalks[lattice.bottom].hilbert.dims
    bottom_ok = bottom == (1,) + (0,) * d_max
    if not bottom_ok:
        failures.append(f"{quotient}: bottom stalk {list(bottom)} is not C")

    free_ok = True
    for flat in lattice.flats:
        try:
            freeness_certificate(localize(frame, flat), d_max, quotient)
        except FreenessError as e:
            free_ok = False
            failures.append(f"{quotient}: stalk at {flat.label()} not free: {e}")

    flabby_ok = True
    functorial_ok = True
    try:
        for u, d, image, sections in model.flabby_failures(topology.opens):
            flabby_ok = False
            labels = ",".join(lattice.flats[i].label() for i in sorted(u))
            failures.append(f"{quotient}: degree {d} on [{labels}]: global image {image} < sections {sections}")
        for a, b, c, d in model.functoriality_failures():
            functorial_ok = False
            chain = " <= ".join(lattice.flats[i].label() for i in (a, b, c))
            failures.append(f"{quotient}: degree {d}: restrictions do not compose along {chain}")
    except RestrictionError as e:
        flabby_ok = functorial_ok = False
        failures.append(f"{quotient}: {e}")

    return SheafCheck(quotient, bottom_ok, free_ok, flabby_ok, functorial_ok, tuple(failures))


def mes_check(frame: GaleFrame, d_max: int, topology: PosetTopology | None = None) -> MESReport:
    """Bottom stalk, stalk freeness, flabbiness and stalkwise degeneration for both sheaves."""
    topology = topology or build_topology(frame)
    lattice = topology.lattice
    if frame.loops:
        return MESReport(
            mode=topology.mode,
            opens=len(topology.opens),
            d_max=d_max,
            sheaves=(),
            degeneration_ok=True,
            failures=("frame has zero columns: the bottom stalk is zero, conditions do not apply",),
            applicable=False,
        )

    sheaves = tuple(_check_sheaf(frame, topology, q, d_max) for q in (Quotient.J, Quotient.SR))

    failures = []
    degeneration_ok = True
    for flat in lattice.flats:
        report = degeneration_check(localize(frame, flat), d_max)
        if not report.ok:
            degeneration_ok = False
            bad = [c.degree for c in report.degrees if not c.equal]
            failures.append(f"in(J) differs from the Stanley-Reisner ideal at {flat.label()} in degrees {bad}")

    return MESReport(
        mode=topology.mode,
        opens=len(topology.opens),
        d_max=d_max,
        sheaves=sheaves,
        degeneration_ok=degeneration_ok,
        failures=tuple(failures) + tuple(f for s in sheaves for f in s.failures),
    )
