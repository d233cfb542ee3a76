from hp0.matroid.circuits import (
    CircuitError,
    SignedCircuit,
    dual_frame,
    kernel_basis,
    kirwan_degree2_lines,
    signed_circuits,
)
from hp0.matroid.flats import Flat, FlatError, FlatLattice, LocalFrame, as_local, flats, localize, problem_of
from hp0.matroid.frame import (
    FrameError,
    GaleFrame,
    NotUnimodularError,
    check_total_unimodularity,
    closure,
    column_rank,
)

__all__ = [
    "CircuitError",
    "Flat",
    "FlatError",
    "FlatLattice",
    "FrameError",
    "GaleFrame",
    "LocalFrame",
    "NotUnimodularError",
    "SignedCircuit",
    "as_local",
    "check_total_unimodularity",
    "closure",
    "column_rank",
    "dual_frame",
    "flats",
    "kernel_basis",
    "kirwan_degree2_lines",
    "localize",
    "problem_of",
    "signed_circuits",
]
