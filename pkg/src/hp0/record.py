"""Run settings and the JSON documents written by the CLI."""

from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from hp0.config import HP0_D_MAX, HP0_SEED
from hp0.matroid import FrameError, GaleFrame


class OutputFormat(StrEnum):
    JSON = "json"
    TSV = "tsv"


class RunConfig(BaseModel):
    """One invocation. ``ordering`` is 1-based, as typed on the command line."""

    input: Path
    command: str
    d_max: int = Field(default=HP0_D_MAX, ge=0)
    ordering: tuple[int, ...] | None = None
    seed: int = HP0_SEED
    format: OutputFormat = OutputFormat.JSON
    paper_degrees: bool = False

    @field_validator("ordering", mode="before")
    @classmethod
    def _parse_ordering(cls, v):
        if isinstance(v, str):
            v = v.strip()
            if not v:
                return None
            try:
                return tuple(int(t) for t in v.split(","))
            except ValueError:
                raise ValueError(f"ordering must be comma-separated integers, got {v!r}") from None
        return v

    def apply(self, frame: GaleFrame) -> GaleFrame:
        """Reorder the ground set before anything else runs."""
        if self.ordering is None:
            return frame
        if sorted(self.ordering) != list(range(1, frame.n + 1)):
            raise FrameError(f"ordering {','.join(map(str, self.ordering))} is not a permutation of 1..{frame.n}")
        return frame.permuted([i - 1 for i in self.ordering])

    def degree_label(self, d: int) -> int:
        return 2 * d if self.paper_degrees else d


class FiberCheck(BaseModel):
    lam: list[str] = Field(serialization_alias="lambda")
    dim: int
    seed: int | None = None
    truncation: int
    stabilized: bool
    expected: int

    @property
    def ok(self) -> bool:
        return self.stabilized and self.dim == self.expected


class MESBlock(BaseModel):
    applicable: bool
    bottom_ok: bool
    free_ok: bool
    flabby_ok: bool
    functorial_ok: bool
    degeneration_ok: bool
    mode: str
    opens: int
    d_max: int
    indecomposability: str
    failures: list[str] = Field(default_factory=list)


class Report(BaseModel):
    """Everything ``hp0 report`` verifies. Column indices are 1-based; ``ok`` drives the exit code."""

    n: int
    k: int
    unimodular: bool
    circuits: list[list[int]]
    kirwan_lines: list[int]
    hilbert: list[int]
    h_poly: list[int]
    central_fiber: list[int]
    freeness_ok: bool
    degeneration_ok: bool
    containment_ok: bool
    circuit_sufficiency_ok: bool
    fiber_checks: list[FiberCheck]
    oracle: list[int] | None = None
    oracle_ok: bool | None = None
    broken_circuits: list[list[int]]
    f: list[int]
    h: list[int]
    ih_betti: dict[str, int]
    dual_top_h_ok: bool
    flats: list[str]
    stalks: dict[str, list[int]]
    mes: MESBlock
    failures: list[str] = Field(default_factory=list)
    ok: bool
